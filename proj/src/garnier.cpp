#include "hitchinlab/garnier.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "hitchinlab/ratmatrix.hpp"

namespace hitchinlab::garnier {

using exact::CanonicalPair;
using exact::Monomial;
using exact::RatMatrix;

GarnierData::GarnierData(std::vector<Rat> points_, std::vector<Rat> twists_)
    : n(static_cast<int>(points_.size())), points(std::move(points_)), twists(std::move(twists_)) {
    if (n < 4) throw std::invalid_argument("GarnierData: need at least 4 marked points");
    if (twists.size() != points.size())
        throw std::invalid_argument("GarnierData: twists and points must have equal length");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("GarnierData: marked points must be pairwise distinct");
}

GarnierData GarnierData::untwisted(std::vector<Rat> points_) {
    std::vector<Rat> zeros(points_.size(), Rat(0));
    return GarnierData(std::move(points_), std::move(zeros));
}

GarnierData GarnierData::equally_spaced(int n) {
    std::vector<Rat> pts;
    for (int i = 0; i < n; ++i) pts.push_back(Rat(i));
    return untwisted(std::move(pts));
}

bool GarnierData::untwisted() const {
    for (const auto& l : twists)
        if (!is_zero(l)) return false;
    return true;
}

Var y_var(int i) { return var_indexed("y", i); }
Var p_var(int i) { return var_indexed("p", i); }
Var lam_var(int i) { return var_indexed("lam", i); }

RatFunc trace_product(const ResidueMatrix& a, const ResidueMatrix& b) {
    RatFunc t;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) t += a.entry[r][c] * b.entry[c][r];
    return t;
}

namespace {

RatFunc lam_value(const GarnierData& data, int i, TwistSymbols twist) {
    if (twist == TwistSymbols::symbolic) return RatFunc::variable(lam_var(i));
    return RatFunc::constant(data.twists[static_cast<std::size_t>(i - 1)]);
}

} // namespace

std::vector<ResidueMatrix> residue_matrices(const GarnierData& data, TwistSymbols twist) {
    std::vector<ResidueMatrix> out;
    for (int i = 1; i <= data.n; ++i) {
        RatFunc y = RatFunc::variable(y_var(i));
        RatFunc p = RatFunc::variable(p_var(i));
        RatFunc lam = lam_value(data, i, twist);
        ResidueMatrix a;
        a.entry[0][0] = -lam + p * y;
        a.entry[0][1] = RatFunc::constant(Rat(2)) * lam * y - p * y * y;
        a.entry[1][0] = p;
        a.entry[1][1] = lam - p * y;
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<RatFunc> garnier_hamiltonians(const GarnierData& data, TwistSymbols twist) {
    std::vector<RatFunc> out;
    for (int i = 1; i <= data.n; ++i) {
        RatFunc yi = RatFunc::variable(y_var(i));
        RatFunc pi = RatFunc::variable(p_var(i));
        RatFunc li = lam_value(data, i, twist);
        RatFunc g;
        for (int j = 1; j <= data.n; ++j) {
            if (j == i) continue;
            Rat dt = data.points[static_cast<std::size_t>(j - 1)] -
                     data.points[static_cast<std::size_t>(i - 1)];
            RatFunc yj = RatFunc::variable(y_var(j));
            RatFunc pj = RatFunc::variable(p_var(j));
            RatFunc lj = lam_value(data, j, twist);
            RatFunc dy = yi - yj;
            RatFunc num = dy * dy * pi * pj -
                          RatFunc::constant(Rat(2)) * (li * pj - lj * pi) * dy -
                          RatFunc::constant(Rat(2)) * li * lj;
            g += num * RatFunc::constant(Rat(1) / dt);
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<CanonicalPair> canonical_pairs(int n) {
    std::vector<CanonicalPair> pairs;
    for (int i = 1; i <= n; ++i) pairs.push_back({y_var(i), p_var(i)});
    return pairs;
}

InvolutionReport check_involution(const GarnierData& data, TwistSymbols twist, int exact_bound) {
    if (data.n > exact_bound)
        throw std::invalid_argument("check_involution: n exceeds the exact-mode bound of " +
                                    std::to_string(exact_bound));
    std::vector<RatFunc> g = garnier_hamiltonians(data, twist);
    std::vector<CanonicalPair> pairs = canonical_pairs(data.n);

    std::vector<std::pair<int, int>> index_pairs;
    for (int i = 1; i <= data.n; ++i)
        for (int j = i + 1; j <= data.n; ++j) index_pairs.push_back({i, j});

    InvolutionReport report;
    report.pairs.resize(index_pairs.size());
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(index_pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        auto [i, j] = index_pairs[static_cast<std::size_t>(k)];
        RatFunc bracket = exact::poisson_bracket(g[static_cast<std::size_t>(i - 1)],
                                                 g[static_cast<std::size_t>(j - 1)], pairs);
        report.pairs[static_cast<std::size_t>(k)] = {i, j, bracket.is_zero()};
    }
    report.all_zero = true;
    for (const auto& pr : report.pairs) report.all_zero = report.all_zero && pr.zero;
    return report;
}

std::array<Rat, 3> moment_constraints(const PhaseState& state) {
    std::array<Rat, 3> out{Rat(0), Rat(0), Rat(0)};
    for (std::size_t i = 0; i < state.p.size(); ++i) {
        out[0] += state.p[i];
        out[1] += state.p[i] * state.y[i];
        out[2] += state.p[i] * state.y[i] * state.y[i];
    }
    return out;
}

std::array<double, 3> moment_constraints(const PhaseStateF& state) {
    std::array<double, 3> out{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < state.p.size(); ++i) {
        out[0] += state.p[i];
        out[1] += state.p[i] * state.y[i];
        out[2] += state.p[i] * state.y[i] * state.y[i];
    }
    return out;
}

namespace {

std::vector<Polynomial> constraint_generators(int n) {
    Polynomial s0, s1, s2;
    for (int i = 1; i <= n; ++i) {
        Polynomial p = Polynomial::variable(p_var(i));
        Polynomial y = Polynomial::variable(y_var(i));
        s0 += p;
        s1 += p * y;
        s2 += p * y * y;
    }
    return {s0, s1, s2};
}

} // namespace

SumIdentitiesReport sum_identities_check(const GarnierData& data) {
    if (!data.untwisted())
        throw std::invalid_argument("sum_identities_check: only defined in the untwisted case");
    std::vector<RatFunc> g = garnier_hamiltonians(data);
    std::vector<Var> pvars;
    for (int i = 1; i <= data.n; ++i) pvars.push_back(p_var(i));
    std::vector<Polynomial> gens = constraint_generators(data.n);

    SumIdentitiesReport report;
    for (int power = 0; power < 3; ++power) {
        RatFunc sum;
        for (int i = 1; i <= data.n; ++i) {
            Rat t = data.points[static_cast<std::size_t>(i - 1)];
            Rat w(1);
            for (int k = 0; k < power; ++k) w *= t;
            sum += g[static_cast<std::size_t>(i - 1)] * RatFunc::constant(w);
        }
        Polynomial nf = exact::reduce_mod_ideal(sum.as_polynomial(), gens, pvars);
        report.reduction_zero[static_cast<std::size_t>(power)] = nf.is_zero();
    }

    std::mt19937 rng(20260809u);
    report.on_shell_zero = true;
    for (int trial = 0; trial < 3; ++trial) {
        PhaseState state = random_admissible_state(data, rng);
        report.on_shell_zero = report.on_shell_zero && is_zero(hamiltonian_sum_at(data, state));
    }
    return report;
}

Rat hamiltonian_sum_at(const GarnierData& data, const PhaseState& state) {
    std::vector<RatFunc> g = garnier_hamiltonians(data);
    std::map<Var, Rat> values;
    for (int i = 1; i <= data.n; ++i) {
        values[y_var(i)] = state.y[static_cast<std::size_t>(i - 1)];
        values[p_var(i)] = state.p[static_cast<std::size_t>(i - 1)];
    }
    Rat sum(0);
    for (const auto& gi : g) sum += gi.eval(values);
    return sum;
}

PhaseState random_admissible_state(const GarnierData& data, std::mt19937& rng) {
    const int n = data.n;
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    auto draw = [&]() { return rat(num(rng), den(rng)); };

    PhaseState state;
    state.y.resize(static_cast<std::size_t>(n));
    state.p.assign(static_cast<std::size_t>(n), Rat(0));
    // distinct positions: i + small jitter
    for (int i = 0; i < n; ++i) state.y[static_cast<std::size_t>(i)] = Rat(i) + draw() / Rat(20);
    for (int i = 0; i + 3 < n; ++i) state.p[static_cast<std::size_t>(i)] = draw();

    // solve for the last three momenta from the three moment constraints
    RatMatrix a(3, 3), rhs(3, 1);
    for (int col = 0; col < 3; ++col) {
        const Rat& y = state.y[static_cast<std::size_t>(n - 3 + col)];
        a.at(0, static_cast<std::size_t>(col)) = 1;
        a.at(1, static_cast<std::size_t>(col)) = y;
        a.at(2, static_cast<std::size_t>(col)) = y * y;
    }
    Rat s0(0), s1(0), s2(0);
    for (int i = 0; i + 3 < n; ++i) {
        const Rat& y = state.y[static_cast<std::size_t>(i)];
        const Rat& p = state.p[static_cast<std::size_t>(i)];
        s0 += p;
        s1 += p * y;
        s2 += p * y * y;
    }
    rhs.at(0, 0) = -s0;
    rhs.at(1, 0) = -s1;
    rhs.at(2, 0) = -s2;
    RatMatrix x = exact::solve_exact(a, rhs);
    for (int col = 0; col < 3; ++col)
        state.p[static_cast<std::size_t>(n - 3 + col)] = x.at(static_cast<std::size_t>(col), 0);
    return state;
}

// ------------------------------------------------------------------- flows

namespace {

// polynomial compiled against state-vector slots for fast double evaluation
struct PolyEval {
    struct Term {
        double coeff;
        std::vector<std::pair<std::size_t, std::uint32_t>> powers;
    };
    std::vector<Term> terms;

    static PolyEval compile(const Polynomial& p, const std::map<Var, std::size_t>& slots) {
        PolyEval ev;
        for (const auto& t : p.terms()) {
            Term term;
            term.coeff = rat_to_double(t.coeff);
            for (const auto& [v, e] : t.mono.factors()) {
                auto it = slots.find(v);
                if (it == slots.end())
                    throw std::invalid_argument("PolyEval: unbound variable " + var_name(v));
                term.powers.push_back({it->second, e});
            }
            ev.terms.push_back(std::move(term));
        }
        return ev;
    }

    double eval(const std::vector<double>& x) const {
        double acc = 0.0;
        for (const auto& t : terms) {
            double v = t.coeff;
            for (const auto& [slot, e] : t.powers) {
                double b = x[slot];
                for (std::uint32_t k = 0; k < e; ++k) v *= b;
            }
            acc += v;
        }
        return acc;
    }
};

} // namespace

Trajectory hamilton_flow(const GarnierData& data, int h_index, const PhaseStateF& initial,
                         double t_end, double step_size, const FlowOptions& opt) {
    const int n = data.n;
    if (h_index < 1 || h_index > n)
        throw std::invalid_argument("hamilton_flow: hamiltonian index out of range");
    if (step_size <= 0.0) throw std::invalid_argument("hamilton_flow: step must be positive");
    if (initial.y.size() != static_cast<std::size_t>(n) ||
        initial.p.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("hamilton_flow: state size does not match data");

    std::map<Var, std::size_t> slots;
    for (int i = 1; i <= n; ++i) {
        slots[y_var(i)] = static_cast<std::size_t>(i - 1);
        slots[p_var(i)] = static_cast<std::size_t>(n + i - 1);
    }

    std::vector<RatFunc> g = garnier_hamiltonians(data);
    Polynomial h = g[static_cast<std::size_t>(h_index - 1)].as_polynomial();

    std::vector<PolyEval> dh_dy, dh_dp, g_eval;
    for (int i = 1; i <= n; ++i) {
        dh_dy.push_back(PolyEval::compile(h.derivative(y_var(i)), slots));
        dh_dp.push_back(PolyEval::compile(h.derivative(p_var(i)), slots));
    }
    for (int j = 0; j < n; ++j)
        g_eval.push_back(PolyEval::compile(g[static_cast<std::size_t>(j)].as_polynomial(), slots));

    auto field = [&](const std::vector<double>& x) {
        std::vector<double> f(x.size());
        for (int i = 0; i < n; ++i) {
            f[static_cast<std::size_t>(i)] = dh_dp[static_cast<std::size_t>(i)].eval(x);
            f[static_cast<std::size_t>(n + i)] = -dh_dy[static_cast<std::size_t>(i)].eval(x);
        }
        return f;
    };

    std::vector<double> x(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = initial.y[static_cast<std::size_t>(i)];
        x[static_cast<std::size_t>(n + i)] = initial.p[static_cast<std::size_t>(i)];
    }

    Trajectory traj;
    auto record = [&](double t) {
        PhaseStateF s;
        s.y.assign(x.begin(), x.begin() + n);
        s.p.assign(x.begin() + n, x.end());
        std::vector<double> gv;
        for (const auto& ev : g_eval) gv.push_back(ev.eval(x));
        traj.times.push_back(t);
        traj.states.push_back(std::move(s));
        traj.hamiltonians.push_back(std::move(gv));
    };

    record(0.0);
    const auto steps = static_cast<std::size_t>(std::llround(t_end / step_size));
    for (std::size_t k = 0; k < steps; ++k) {
        x = flow::implicit_midpoint_step(x, step_size, field, opt.step, k);
        record(static_cast<double>(k + 1) * step_size);
    }
    return traj;
}

} // namespace hitchinlab::garnier
