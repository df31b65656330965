#include "hitchinlab/cm.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hitchinlab::cm {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void validate_state(const CMState& state, const Torus& torus, double min_separation) {
    if (state.q.size() != state.p.size())
        throw std::invalid_argument("CMState: positions and momenta differ in length");
    if (state.n() < 2) throw std::invalid_argument("CMState: need at least two particles");
    for (std::size_t i = 0; i < state.q.size(); ++i)
        for (std::size_t j = i + 1; j < state.q.size(); ++j)
            if (elliptic::lattice_distance(state.q[i] - state.q[j], torus) < min_separation)
                throw std::invalid_argument("CMState: positions coincide modulo the lattice");
}

LaxMatrix lax_matrix(const CMState& state, Complex z, const Torus& torus, double tol) {
    validate_state(state, torus);
    const int n = state.n();
    if (elliptic::lattice_distance(z, torus) < 1e-12)
        throw std::domain_error("lax_matrix: spectral parameter on the lattice");
    const Complex tp0 = elliptic::theta_prime0(torus, tol);
    const Complex th_z = elliptic::theta(z, torus, tol);
    LaxMatrix m(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = state.p[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Complex qij = state.q[static_cast<std::size_t>(i)] - state.q[static_cast<std::size_t>(j)];
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                state.coupling * tp0 * elliptic::theta(z + qij, torus, tol) /
                (th_z * elliptic::theta(qij, torus, tol));
        }
    }
    return m;
}

Complex trace_power(const LaxMatrix& m, int k) {
    const std::size_t n = m.size();
    if (k < 1) throw std::invalid_argument("trace_power: k must be >= 1");
    LaxMatrix acc = m;
    for (int step = 1; step < k; ++step) {
        LaxMatrix next(n, std::vector<Complex>(n, Complex(0.0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                Complex a = acc[i][l];
                if (a == Complex(0.0)) continue;
                for (std::size_t j = 0; j < n; ++j) next[i][j] += a * m[l][j];
            }
        acc = std::move(next);
    }
    Complex t(0.0);
    for (std::size_t i = 0; i < n; ++i) t += acc[i][i];
    return t;
}

namespace {

Complex h2_closed_form(const CMState& state, const WpEvaluator& wp) {
    Complex h(0.0);
    for (const auto& p : state.p) h += p * p;
    Complex pot(0.0);
    const int n = state.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                pot += wp.wp(state.q[static_cast<std::size_t>(i)] -
                             state.q[static_cast<std::size_t>(j)]);
    return h - state.coupling * state.coupling * pot;
}

// constant Laurent coefficient of tr phi^k from samples on |z| = r
Complex circle_fit(const CMState& state, const Torus& torus, int k, double r, int samples) {
    Complex mean(0.0);
    for (int s = 0; s < samples; ++s) {
        double angle = 2.0 * kPi * s / samples;
        Complex z = r * Complex(std::cos(angle), std::sin(angle));
        mean += trace_power(lax_matrix(state, z, torus), k);
    }
    return mean / static_cast<double>(samples);
}

} // namespace

Hamiltonians cm_hamiltonians(const CMState& state, const WpEvaluator& wp, int k_max,
                             const FitOptions& fit) {
    const int n = state.n();
    if (k_max < 1 || k_max > n)
        throw std::invalid_argument("cm_hamiltonians: need 1 <= k_max <= n");
    validate_state(state, wp.torus());
    Hamiltonians out;
    for (int k = 1; k <= k_max; ++k) {
        if (k == 1) {
            Complex h(0.0);
            for (const auto& p : state.p) h += p;
            out.values.push_back(h);
        } else if (k == 2) {
            out.values.push_back(h2_closed_form(state, wp));
        } else {
            if (fit.samples <= k || fit.alt_samples <= k)
                throw std::invalid_argument("cm_hamiltonians: need more samples than the pole order");
            Complex h = circle_fit(state, wp.torus(), k, fit.radius, fit.samples);
            Complex h_alt = circle_fit(state, wp.torus(), k, fit.alt_radius, fit.alt_samples);
            double residual = std::abs(h - h_alt);
            out.fit_residual = std::max(out.fit_residual, residual);
            if (residual > fit.residual_tol)
                throw std::runtime_error("cm_hamiltonians: Laurent fit residual " +
                                         std::to_string(residual) + " above tolerance");
            out.values.push_back(h);
        }
    }
    return out;
}

double tr_phi2_constancy(const CMState& state, const WpEvaluator& wp, int z_samples,
                         unsigned seed) {
    validate_state(state, wp.torus());
    const int n = state.n();
    const double c2n = static_cast<double>(n) * (n - 1);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.05, 0.45);
    std::vector<Complex> values;
    for (int s = 0; s < z_samples; ++s) {
        Complex z = Complex(unif(rng), unif(rng)) +
                    (s % 2 == 0 ? Complex(0.0) : 0.3 * wp.torus().tau);
        Complex t2 = trace_power(lax_matrix(state, z, wp.torus()), 2);
        values.push_back(t2 - c2n * state.coupling * state.coupling * wp.wp(z));
    }
    double worst = 0.0;
    for (const auto& v : values) worst = std::max(worst, std::abs(v - values.front()));
    return worst;
}

CMFlowResult cm_flow(const CMState& initial, const WpEvaluator& wp, double t_end, double step_size,
                     const CMFlowOptions& opt) {
    if (step_size <= 0.0) throw std::invalid_argument("cm_flow: step must be positive");
    validate_state(initial, wp.torus(), opt.collision_tol);
    const int n = initial.n();
    const Complex c2 = initial.coupling * initial.coupling;

    auto field = [&](const std::vector<Complex>& x) {
        std::vector<Complex> f(x.size());
        for (int i = 0; i < n; ++i) {
            f[static_cast<std::size_t>(i)] = 2.0 * x[static_cast<std::size_t>(n + i)];
            Complex force(0.0);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                force += wp.wp_prime(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]);
            }
            f[static_cast<std::size_t>(n + i)] = 2.0 * c2 * force;
        }
        return f;
    };

    const bool track_h3 = opt.track_h3 && n >= 3;
    auto hamiltonians_at = [&](const CMState& s) {
        std::vector<Complex> h;
        Complex h1(0.0);
        for (const auto& p : s.p) h1 += p;
        h.push_back(h1);
        h.push_back(h2_closed_form(s, wp));
        if (track_h3)
            h.push_back(circle_fit(s, wp.torus(), 3, opt.fit.radius, opt.fit.samples));
        return h;
    };

    std::vector<Complex> x(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = initial.q[static_cast<std::size_t>(i)];
        x[static_cast<std::size_t>(n + i)] = initial.p[static_cast<std::size_t>(i)];
    }

    CMFlowResult result;
    auto to_state = [&](const std::vector<Complex>& v) {
        CMState s;
        s.q.assign(v.begin(), v.begin() + n);
        s.p.assign(v.begin() + n, v.end());
        s.coupling = initial.coupling;
        return s;
    };
    auto record = [&](double t, const CMState& s) {
        result.trajectory.times.push_back(t);
        result.trajectory.states.push_back(s);
        result.trajectory.hamiltonians.push_back(hamiltonians_at(s));
    };

    record(0.0, initial);
    const auto steps = static_cast<std::size_t>(std::llround(t_end / step_size));
    for (std::size_t k = 0; k < steps; ++k) {
        x = flow::implicit_midpoint_step(x, step_size, field, opt.step, k);
        CMState s = to_state(x);
        bool collision = false;
        for (int i = 0; i < n && !collision; ++i)
            for (int j = i + 1; j < n && !collision; ++j)
                collision = elliptic::lattice_distance(s.q[static_cast<std::size_t>(i)] -
                                                           s.q[static_cast<std::size_t>(j)],
                                                       wp.torus()) < opt.collision_tol;
        if (collision) {
            result.collided = true;
            result.collision_step = k + 1;
            break;
        }
        record(static_cast<double>(k + 1) * step_size, s);
    }

    const auto& h0 = result.trajectory.hamiltonians.front();
    result.drift.assign(h0.size(), 0.0);
    for (const auto& h : result.trajectory.hamiltonians)
        for (std::size_t i = 0; i < h0.size(); ++i)
            result.drift[i] = std::max(result.drift[i], std::abs(h[i] - h0[i]));
    return result;
}

} // namespace hitchinlab::cm
