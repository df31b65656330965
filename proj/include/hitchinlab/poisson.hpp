#ifndef HITCHINLAB_POISSON_HPP
#define HITCHINLAB_POISSON_HPP

#include <vector>

#include "hitchinlab/ratfunc.hpp"

namespace hitchinlab::exact {

// canonical pair with {p, y} = +1, i.e. the symplectic form sum dp ^ dy
struct CanonicalPair {
    Var position;
    Var momentum;
};

// {f, g} = sum_i df/dp_i dg/dy_i - df/dy_i dg/dp_i
RatFunc poisson_bracket(const RatFunc& f, const RatFunc& g,
                        const std::vector<CanonicalPair>& pairs);

// Normal form of a polynomial modulo an ideal generated by polynomials that
// are affine-linear in the listed momentum variables (coefficients may involve
// the remaining variables). Elimination happens over the rational-function
// field in the non-momentum variables; the result is returned with cleared
// denominators, so it is zero iff the normal form is zero for generic values.
Polynomial reduce_mod_ideal(const Polynomial& f, const std::vector<Polynomial>& gens,
                            const std::vector<Var>& momentum_vars);

} // namespace hitchinlab::exact

#endif
