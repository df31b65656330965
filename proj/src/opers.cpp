#include "hitchinlab/opers.hpp"

#include <stdexcept>

namespace hitchinlab::opers {

Series schwarzian(const Series& s) {
    if (s.order() < 4) throw std::invalid_argument("schwarzian: series order must be >= 4");
    if (is_zero(s.coeff(1)))
        throw std::invalid_argument("schwarzian: s'(0) = 0 (not a coordinate change)");
    Series d1 = s.derivative();
    Series d2 = d1.derivative();
    Series d3 = d2.derivative();
    int k = d3.order();
    Series ratio2 = d2.truncated(k) / d1.truncated(k);
    return d3 / d1.truncated(k) - ratio2 * ratio2 * Rat(3, 2);
}

HillOperator transform_hill(const HillOperator& op, const Series& s) {
    if (!is_zero(s.coeff(0)))
        throw std::invalid_argument("transform_hill: s(0) must be 0 (coordinate change at the point)");
    if (is_zero(s.coeff(1))) throw std::invalid_argument("transform_hill: s'(0) = 0");
    Series t = exact::series_reversion(s); // old coordinate as a function of the new one
    Series tp = t.derivative();
    Series u_new = exact::series_compose(op.potential, t);
    u_new = u_new * (tp * tp);
    u_new = u_new + schwarzian(t) * Rat(1, 2);
    return HillOperator{u_new};
}

std::pair<Series, Series> solve_hill(const HillOperator& op) {
    const Series& u = op.potential;
    const int k = u.order() + 2;
    auto solve = [&](const Rat& v0, const Rat& v1) {
        std::vector<Rat> a(static_cast<std::size_t>(k) + 1, Rat(0));
        a[0] = v0;
        a[1] = v1;
        for (int m = 0; m + 2 <= k; ++m) {
            // (m+2)(m+1) a_{m+2} = - sum_{j=0}^{m} u_j a_{m-j}
            Rat acc(0);
            for (int j = 0; j <= m && j <= u.order(); ++j)
                acc += u.coeff(j) * a[static_cast<std::size_t>(m - j)];
            a[static_cast<std::size_t>(m + 2)] =
                -acc / Rat(static_cast<long>(m + 2) * (m + 1));
        }
        return Series(std::move(a), k);
    };
    return {solve(Rat(1), Rat(0)), solve(Rat(0), Rat(1))};
}

Series wronskian(const Series& a, const Series& b) {
    Series ap = a.derivative();
    Series bp = b.derivative();
    return a.truncated(bp.order()) * bp - ap * b.truncated(ap.order());
}

} // namespace hitchinlab::opers
