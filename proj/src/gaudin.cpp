#include "hitchinlab/gaudin.hpp"

#include <numeric>
#include <stdexcept>

#include "hitchinlab/variables.hpp"

namespace hitchinlab::gaudin {

using exact::RatFunc;

Sl2Irrep sl2_irrep(int d) {
    if (d < 1) throw std::invalid_argument("sl2_irrep: dimension must be >= 1");
    Sl2Irrep rep;
    rep.d = d;
    rep.e = RatMatrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    rep.f = RatMatrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    rep.h = RatMatrix(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        rep.h.at(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = Rat(d - 1 - 2 * k);
        if (k + 1 < d) {
            rep.f.at(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k)) = 1;
            rep.e.at(static_cast<std::size_t>(k), static_cast<std::size_t>(k + 1)) =
                Rat(static_cast<long>(k + 1) * (d - 1 - k));
        }
    }
    return rep;
}

RatMatrix casimir(const Sl2Irrep& rep) {
    RatMatrix c = exact::mul(rep.e, rep.f) + exact::mul(rep.f, rep.e) +
                  exact::mul(rep.h, rep.h) * Rat(1, 2);
    return c;
}

RatMatrix op_at(const std::vector<int>& dims, int slot, const RatMatrix& m) {
    if (slot < 1 || slot > static_cast<int>(dims.size()))
        throw std::invalid_argument("op_at: slot out of range");
    RatMatrix acc = RatMatrix::identity(1);
    for (int s = 1; s <= static_cast<int>(dims.size()); ++s) {
        const auto d = static_cast<std::size_t>(dims[static_cast<std::size_t>(s - 1)]);
        acc = RatMatrix::kronecker(acc, s == slot ? m : RatMatrix::identity(d));
    }
    return acc;
}

RatMatrix diagonal_action(const std::vector<int>& dims, char generator) {
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    RatMatrix acc(total, total);
    for (int s = 1; s <= static_cast<int>(dims.size()); ++s) {
        Sl2Irrep rep = sl2_irrep(dims[static_cast<std::size_t>(s - 1)]);
        const RatMatrix* m = nullptr;
        switch (generator) {
            case 'e': m = &rep.e; break;
            case 'f': m = &rep.f; break;
            case 'h': m = &rep.h; break;
            default: throw std::invalid_argument("diagonal_action: generator must be e, f or h");
        }
        acc = acc + op_at(dims, s, *m);
    }
    return acc;
}

RatMatrix casimir_action(const std::vector<int>& dims, int i, int j) {
    if (i == j) throw std::invalid_argument("casimir_action: slots must differ");
    if (i > j) std::swap(i, j);
    if (i < 1 || j > static_cast<int>(dims.size()))
        throw std::invalid_argument("casimir_action: slot out of range");
    Sl2Irrep ri = sl2_irrep(dims[static_cast<std::size_t>(i - 1)]);
    Sl2Irrep rj = sl2_irrep(dims[static_cast<std::size_t>(j - 1)]);
    RatMatrix omega =
        exact::mul(op_at(dims, i, ri.e), op_at(dims, j, rj.f)) +
        exact::mul(op_at(dims, i, ri.f), op_at(dims, j, rj.e)) +
        exact::mul(op_at(dims, i, ri.h), op_at(dims, j, rj.h)) * Rat(1, 2);
    return omega;
}

GaudinFamily gaudin_operators(const std::vector<int>& dims, const std::vector<Rat>& points,
                              const Rat& scale) {
    if (dims.size() != points.size())
        throw std::invalid_argument("gaudin_operators: dims and points differ in length");
    if (dims.size() < 2) throw std::invalid_argument("gaudin_operators: need at least two sites");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("gaudin_operators: marked points must be distinct");

    const int n = static_cast<int>(dims.size());
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);

    GaudinFamily family;
    family.dims = dims;
    family.points = points;
    // precompute Omega_ij once per pair
    std::vector<std::vector<RatMatrix>> omega(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) omega[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            RatMatrix o = casimir_action(dims, i, j);
            omega[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = o;
            omega[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = std::move(o);
        }
    for (int i = 1; i <= n; ++i) {
        RatMatrix g(total, total);
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            Rat dt = points[static_cast<std::size_t>(i - 1)] - points[static_cast<std::size_t>(j - 1)];
            g = g + omega[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] *
                        (scale / dt);
        }
        family.operators.push_back(std::move(g));
    }
    return family;
}

CommutativityReport commutativity_check(const GaudinFamily& family) {
    const int n = static_cast<int>(family.operators.size());
    CommutativityReport report;
    std::vector<std::pair<int, int>> idx;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) idx.push_back({i, j});
    report.pairs.resize(idx.size());
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(idx.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        auto [i, j] = idx[static_cast<std::size_t>(k)];
        RatMatrix c = exact::commutator(family.operators[static_cast<std::size_t>(i - 1)],
                                        family.operators[static_cast<std::size_t>(j - 1)]);
        report.pairs[static_cast<std::size_t>(k)] = {i, j, c.is_zero()};
    }
    report.diagonal_sl2 = true;
    for (char gen : {'e', 'f', 'h'}) {
        RatMatrix d = diagonal_action(family.dims, gen);
        for (const auto& g : family.operators)
            report.diagonal_sl2 = report.diagonal_sl2 && exact::commutator(g, d).is_zero();
    }
    report.all_zero = report.diagonal_sl2;
    for (const auto& pr : report.pairs) report.all_zero = report.all_zero && pr.zero;
    return report;
}

// --------------------------------------------------------- Weyl realization

namespace {

RatFunc lambda_param(int site) { return RatFunc::variable(var_indexed("Lambda", site)); }
RatFunc t_param(int site) { return RatFunc::variable(var_indexed("t", site)); }

} // namespace

WeylElement weyl_e(int site) {
    // x^2 d + Lambda x
    WeylElement w;
    w.add_term(exact::WeylMono{{{static_cast<std::uint32_t>(site), 2}},
                               {{static_cast<std::uint32_t>(site), 1}}},
               RatFunc::constant(Rat(1)));
    w.add_term(exact::WeylMono{{{static_cast<std::uint32_t>(site), 1}}, {}}, lambda_param(site));
    return w;
}

WeylElement weyl_f(int site) {
    WeylElement w;
    w.add_term(exact::WeylMono{{}, {{static_cast<std::uint32_t>(site), 1}}},
               RatFunc::constant(Rat(-1)));
    return w;
}

WeylElement weyl_h(int site) {
    // 2 x d + Lambda
    WeylElement w;
    w.add_term(exact::WeylMono{{{static_cast<std::uint32_t>(site), 1}},
                               {{static_cast<std::uint32_t>(site), 1}}},
               RatFunc::constant(Rat(2)));
    w.add_term(exact::WeylMono{}, lambda_param(site));
    return w;
}

WeylElement gaudin_weyl(int n_sites, int i) {
    if (i < 1 || i > n_sites) throw std::invalid_argument("gaudin_weyl: index out of range");
    WeylElement g;
    for (int j = 1; j <= n_sites; ++j) {
        if (j == i) continue;
        WeylElement omega = weyl_e(i) * weyl_f(j) + weyl_f(i) * weyl_e(j) +
                            weyl_h(i) * weyl_h(j) * RatFunc::constant(Rat(1, 2));
        g += omega * (RatFunc::constant(Rat(1)) / (t_param(i) - t_param(j)));
    }
    return g;
}

SpectrumReport gaudin_spectrum(const std::vector<int>& dims, const std::vector<Rat>& points) {
    GaudinFamily family = gaudin_operators(dims, points);
    // invariant subspace = joint kernel of the diagonal e and f actions
    RatMatrix de = diagonal_action(dims, 'e');
    RatMatrix df = diagonal_action(dims, 'f');
    RatMatrix stacked(de.rows() + df.rows(), de.cols());
    for (std::size_t r = 0; r < de.rows(); ++r)
        for (std::size_t c = 0; c < de.cols(); ++c) {
            stacked.at(r, c) = de.at(r, c);
            stacked.at(de.rows() + r, c) = df.at(r, c);
        }
    RatMatrix basis = exact::kernel_basis(std::move(stacked));

    SpectrumReport report;
    report.invariant_dimension = static_cast<int>(basis.cols());
    for (const auto& g : family.operators) {
        // G preserves the invariant subspace: solve basis * M = G * basis
        RatMatrix rhs = exact::mul(g, basis);
        RatMatrix restricted = exact::solve_exact(basis, rhs);
        report.char_polys.push_back(exact::char_poly(restricted));
    }
    return report;
}

} // namespace hitchinlab::gaudin
