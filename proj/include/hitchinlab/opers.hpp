#ifndef HITCHINLAB_OPERS_HPP
#define HITCHINLAB_OPERS_HPP

#include <utility>

#include "hitchinlab/series.hpp"

namespace hitchinlab::opers {

using exact::Series;

// Hill operator d^2 + u acting between the half-density spaces on the formal
// disk; u carries its own truncation order.
struct HillOperator {
    Series potential;
};

// Schwarzian derivative s'''/s' - (3/2)(s''/s')^2; the result order is
// order(s) - 3. Requires s'(0) != 0.
Series schwarzian(const Series& s);

// Potential in the new coordinate after t -> s(t) with s(0) = 0, s'(0) != 0:
//   u~ = (u o t(s)) * t'(s)^2 + 1/2 D(t)(s),   t = s^{-1}.
// The sign and placement of the Schwarzian term are pinned by the
// section-transport regression test: if psi solves psi'' + u psi = 0, then
// (t')^{-1/2} (psi o t) solves the transformed equation.
HillOperator transform_hill(const HillOperator& op, const Series& s);

// Series solutions of psi'' + u psi = 0 with (psi, psi')(0) = (1,0), (0,1);
// each is reliable through order(u) + 2.
std::pair<Series, Series> solve_hill(const HillOperator& op);

// Wronskian psi1 psi2' - psi1' psi2 (order = common order - 1)
Series wronskian(const Series& a, const Series& b);

} // namespace hitchinlab::opers

#endif
