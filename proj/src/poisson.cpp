#include "hitchinlab/poisson.hpp"

#include <algorithm>
#include <stdexcept>

namespace hitchinlab::exact {

RatFunc poisson_bracket(const RatFunc& f, const RatFunc& g,
                        const std::vector<CanonicalPair>& pairs) {
    std::vector<Var> seen;
    for (const auto& pr : pairs) {
        if (!pr.position.valid() || !pr.momentum.valid())
            throw std::invalid_argument("poisson_bracket: invalid variable");
        if (pr.position == pr.momentum)
            throw std::invalid_argument("poisson_bracket: pair uses the same variable twice");
        for (Var v : {pr.position, pr.momentum}) {
            if (std::find(seen.begin(), seen.end(), v) != seen.end())
                throw std::invalid_argument("poisson_bracket: pairs not disjoint");
            seen.push_back(v);
        }
    }
    RatFunc out;
    for (const auto& pr : pairs) {
        // skip pairs the inputs do not touch
        bool touches = f.num().depends_on(pr.position) || f.num().depends_on(pr.momentum) ||
                       f.den().depends_on(pr.position) || f.den().depends_on(pr.momentum) ||
                       g.num().depends_on(pr.position) || g.num().depends_on(pr.momentum) ||
                       g.den().depends_on(pr.position) || g.den().depends_on(pr.momentum);
        if (!touches) continue;
        out += f.derivative(pr.momentum) * g.derivative(pr.position) -
               f.derivative(pr.position) * g.derivative(pr.momentum);
    }
    return out;
}

Polynomial reduce_mod_ideal(const Polynomial& f, const std::vector<Polynomial>& gens,
                            const std::vector<Var>& momentum_vars) {
    const std::size_t n = momentum_vars.size();
    for (const auto& g : gens) {
        for (Var p : momentum_vars)
            if (g.degree_in(p) > 1)
                throw std::invalid_argument(
                    "reduce_mod_ideal: generator not linear in momentum variable " + var_name(p));
        // no cross terms p_i*p_j either
        for (const auto& t : g.terms()) {
            std::uint32_t pdeg = 0;
            for (Var p : momentum_vars) pdeg += t.mono.degree_in(p);
            if (pdeg > 1)
                throw std::invalid_argument("reduce_mod_ideal: generator not linear in momenta");
        }
    }

    // rows of (coeff of p_1, ..., coeff of p_n | affine part) over RatFunc
    std::vector<std::vector<RatFunc>> rows;
    for (const auto& g : gens) {
        std::vector<RatFunc> row(n + 1);
        Polynomial rest = g;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Polynomial> c = rest.coefficients_in(momentum_vars[j]);
            row[j] = RatFunc(c.size() > 1 ? c[1] : Polynomial::zero());
            rest = c[0];
        }
        row[n] = RatFunc(rest);
        rows.push_back(std::move(row));
    }

    // reduced echelon form, pivoting on the momentum columns in order
    std::vector<std::size_t> pivot_of_col(n, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX) continue;
        std::swap(rows[rank], rows[piv]);
        RatFunc inv = RatFunc::constant(Rat(1)) / rows[rank][col];
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            RatFunc factor = rows[r][col];
            for (std::size_t c2 = 0; c2 <= n; ++c2) rows[r][c2] -= factor * rows[rank][c2];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }

    // substitution map p_pivot -> -(free part) from each pivot row
    std::map<Var, RatFunc> subs;
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] == SIZE_MAX) continue;
        const auto& row = rows[pivot_of_col[col]];
        RatFunc value;
        for (std::size_t c2 = col + 1; c2 < n; ++c2)
            value -= row[c2] * RatFunc::variable(momentum_vars[c2]);
        value -= row[n];
        subs.emplace(momentum_vars[col], std::move(value));
    }

    // evaluate f with the pivots substituted
    RatFunc nf;
    for (const auto& t : f.terms()) {
        RatFunc term = RatFunc::constant(t.coeff);
        for (const auto& [v, e] : t.mono.factors()) {
            auto it = subs.find(v);
            RatFunc base = (it == subs.end()) ? RatFunc::variable(v) : it->second;
            for (std::uint32_t k = 0; k < e; ++k) term *= base;
        }
        nf += term;
    }
    return nf.num();
}

} // namespace hitchinlab::exact
