#include "hitchinlab/elliptic.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hitchinlab::elliptic {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxThetaTerms = 64;

} // namespace

Torus::Torus(Complex tau_) : tau(tau_) {
    if (!(tau.imag() > 0.0)) throw std::domain_error("Torus: Im(tau) must be positive");
    q = std::exp(Complex(0.0, 2.0 * kPi) * tau);
}

Complex lattice_reduce(Complex z, const Torus& torus) {
    double beta = z.imag() / torus.tau.imag();
    double alpha = z.real() - beta * torus.tau.real();
    double mb = std::round(beta);
    double ma = std::round(alpha);
    return z - ma - mb * torus.tau;
}

double lattice_distance(Complex z, const Torus& torus) {
    Complex r = lattice_reduce(z, torus);
    double best = std::abs(r);
    // the rounding is in lattice coordinates; check the neighboring cells too
    for (int dm = -1; dm <= 1; ++dm)
        for (int dn = -1; dn <= 1; ++dn)
            best = std::min(best, std::abs(r - Complex(dm, 0) - Complex(dn, 0) * torus.tau));
    return best;
}

Complex theta(Complex z, const Torus& torus, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("theta: tolerance must be positive");
    const Complex ipitau = Complex(0.0, kPi) * torus.tau;
    Complex acc(0.0, 0.0);
    double magnitude = 0.0;
    for (int k = 0; k < kMaxThetaTerms; ++k) {
        double half = k + 0.5;
        Complex term = std::exp(ipitau * (half * half)) * std::sin((2 * k + 1) * kPi * z);
        if (k % 2 == 1) term = -term;
        acc += term;
        magnitude += std::abs(term);
        if (k >= 1 && std::abs(term) < tol * magnitude) return 2.0 * acc;
    }
    throw std::runtime_error("theta: series did not converge (|Im z| too large for this tau?)");
}

Complex theta_prime(Complex z, const Torus& torus, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("theta_prime: tolerance must be positive");
    const Complex ipitau = Complex(0.0, kPi) * torus.tau;
    Complex acc(0.0, 0.0);
    double magnitude = 0.0;
    for (int k = 0; k < kMaxThetaTerms; ++k) {
        double half = k + 0.5;
        Complex term = std::exp(ipitau * (half * half)) * ((2 * k + 1) * kPi) *
                       std::cos((2 * k + 1) * kPi * z);
        if (k % 2 == 1) term = -term;
        acc += term;
        magnitude += std::abs(term);
        if (k >= 1 && std::abs(term) < tol * magnitude) return 2.0 * acc;
    }
    throw std::runtime_error("theta_prime: series did not converge");
}

Complex theta_prime0(const Torus& torus, double tol) { return theta_prime(Complex(0.0), torus, tol); }

Complex lame_hermite(Complex z, Complex a, const Torus& torus, double tol) {
    if (lattice_distance(z, torus) < 1e-12)
        throw std::domain_error("lame_hermite: z lies on the lattice (pole)");
    if (lattice_distance(a, torus) < 1e-12)
        throw std::domain_error("lame_hermite: parameter a lies on the lattice");
    Complex th = theta(z, torus, tol);
    Complex log_deriv = theta_prime(z, torus, tol) / th;
    return std::exp(a * log_deriv) * theta(z - a, torus, tol) / th;
}

// --------------------------------------------------------- Eisenstein sums

namespace {

struct RowSums {
    double s4r = 0, s4i = 0, s6r = 0, s6i = 0;
};

// sum of omega^{-4}, omega^{-6} over one horizontal lattice row; m runs over
// [m_lo, m_hi] minus the excluded middle (-m_skip, m_skip) when m_skip >= 0
RowSums row_sum(double tr, double ti, long n, long m_lo, long m_hi, long m_skip) {
    RowSums out;
    const double br = n * tr, bi = n * ti;
    auto add = [&](long m) {
        const double wr = m + br, wi = bi;
        // w^2
        const double w2r = wr * wr - wi * wi, w2i = 2.0 * wr * wi;
        const double d = w2r * w2r + w2i * w2i;
        const double rd = 1.0 / d;
        // w^{-2}
        const double i2r = w2r * rd, i2i = -w2i * rd;
        // w^{-4}, w^{-6}
        const double i4r = i2r * i2r - i2i * i2i, i4i = 2.0 * i2r * i2i;
        const double i6r = i4r * i2r - i4i * i2i, i6i = i4r * i2i + i4i * i2r;
        out.s4r += i4r;
        out.s4i += i4i;
        out.s6r += i6r;
        out.s6i += i6i;
    };
    if (m_skip < 0) {
        for (long m = m_lo; m <= m_hi; ++m) add(m);
    } else {
        for (long m = m_lo; m < -m_skip; ++m) add(m);
        for (long m = m_skip + 1; m <= m_hi; ++m) add(m);
    }
    return out;
}

// Half-lattice partial sums over 0 < max(|m|,|n|) <= M with n >= 0; doubling
// restores the full sum because omega^{-4}, omega^{-6} are even. Rows are
// accumulated in fixed order so the parallel and serial kernels agree bitwise.
EisensteinPartial accumulate_rows(Complex tau, long m_limit, bool parallel) {
    if (m_limit < 1) throw std::invalid_argument("eisenstein_square_sum: M must be >= 1");
    const double tr = tau.real(), ti = tau.imag();
    std::vector<RowSums> rows(static_cast<std::size_t>(m_limit) + 1);

    if (parallel) {
        const long n_rows = m_limit + 1;
#pragma omp parallel for schedule(dynamic, 8)
        for (long n = 0; n < n_rows; ++n)
            rows[static_cast<std::size_t>(n)] =
                n == 0 ? row_sum(tr, ti, 0, 1, m_limit, -1)
                       : row_sum(tr, ti, n, -m_limit, m_limit, -1);
    } else {
        rows[0] = row_sum(tr, ti, 0, 1, m_limit, -1);
        for (long n = 1; n <= m_limit; ++n)
            rows[static_cast<std::size_t>(n)] = row_sum(tr, ti, n, -m_limit, m_limit, -1);
    }

    // row 0 counts only m > 0; doubling it also accounts for m < 0
    double s4r = 0, s4i = 0, s6r = 0, s6i = 0;
    for (const auto& r : rows) {
        s4r += r.s4r;
        s4i += r.s4i;
        s6r += r.s6r;
        s6i += r.s6i;
    }
    return {2.0 * Complex(s4r, s4i), 2.0 * Complex(s6r, s6i)};
}

} // namespace

EisensteinPartial eisenstein_square_sum(Complex tau, long m_limit) {
    return accumulate_rows(tau, m_limit, true);
}

EisensteinPartial eisenstein_square_sum_serial(Complex tau, long m_limit) {
    return accumulate_rows(tau, m_limit, false);
}

// ------------------------------------------------------------- WpEvaluator

WpEvaluator::WpEvaluator(const Torus& torus, const WpOptions& opt) : torus_(torus), opt_(opt) {
    if (opt_.central_m < 4) throw std::invalid_argument("WpEvaluator: central square too small");
    if (opt_.tail_terms < 2 || opt_.tail_terms > 16)
        throw std::invalid_argument("WpEvaluator: tail_terms out of range");

    // G4, G6: Richardson extrapolation of square partial sums at four levels,
    // removing the 1/M^2, 1/M^3 and 1/M^4 truncation tails of G4. G6's own
    // tail is O(M^-4) and is eliminated by the same tableau.
    const long m0 = opt_.eisenstein_m0;
    std::vector<Complex> s4(4), s6(4);
    for (int level = 0; level < 4; ++level) {
        EisensteinPartial p = eisenstein_square_sum(torus_.tau, m0 << level);
        s4[static_cast<std::size_t>(level)] = p.s4;
        s6[static_cast<std::size_t>(level)] = p.s6;
    }
    auto richardson = [](std::vector<Complex> v, const std::vector<int>& powers) {
        for (int p : powers) {
            double w = std::pow(2.0, p);
            for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = (w * v[i + 1] - v[i]) / (w - 1.0);
            v.pop_back();
        }
        return v[0];
    };
    Complex g4 = richardson(s4, {2, 3, 4});
    Complex g6 = richardson(s6, {4, 5, 6});

    // higher Eisenstein values from the classical recursion
    // c_k = 3/((k-3)(2k+1)) sum_{m=2}^{k-2} c_m c_{k-m}, with c_k = (2k-1) G_{2k}
    std::vector<Complex> c(static_cast<std::size_t>(opt_.tail_terms) + 1);
    c[2] = 3.0 * g4;
    if (opt_.tail_terms >= 3) c[3] = 5.0 * g6;
    for (int k = 4; k <= opt_.tail_terms; ++k) {
        Complex acc(0.0);
        for (int m = 2; m <= k - 2; ++m)
            acc += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
        c[static_cast<std::size_t>(k)] = 3.0 / ((k - 3.0) * (2.0 * k + 1.0)) * acc;
    }
    g2k_.resize(static_cast<std::size_t>(opt_.tail_terms) - 1);
    for (int k = 2; k <= opt_.tail_terms; ++k)
        g2k_[static_cast<std::size_t>(k - 2)] = c[static_cast<std::size_t>(k)] / (2.0 * k - 1.0);
    g2_ = 60.0 * g4;
    g3_ = 140.0 * g6;

    // central square: cache lattice points and their inverse powers
    const long mc = opt_.central_m;
    omegas_.reserve(static_cast<std::size_t>((2 * mc + 1) * (2 * mc + 1) - 1));
    for (long n = -mc; n <= mc; ++n)
        for (long m = -mc; m <= mc; ++m) {
            if (m == 0 && n == 0) continue;
            omegas_.push_back(Complex(static_cast<double>(m), 0.0) +
                              static_cast<double>(n) * torus_.tau);
        }
    inv2_.resize(omegas_.size());
    inv3_.resize(omegas_.size());
    std::vector<Complex> partial(g2k_.size(), Complex(0.0));
    for (std::size_t i = 0; i < omegas_.size(); ++i) {
        Complex w2 = omegas_[i] * omegas_[i];
        Complex iw2 = 1.0 / w2;
        inv2_[i] = iw2;
        inv3_[i] = iw2 / omegas_[i];
        Complex pw = iw2 * iw2; // omega^{-4}
        for (std::size_t k = 0; k < partial.size(); ++k) {
            partial[k] += pw;
            pw *= iw2;
        }
    }
    tail_.resize(g2k_.size());
    for (std::size_t k = 0; k < g2k_.size(); ++k) tail_[k] = g2k_[k] - partial[k];
}

Complex WpEvaluator::wp(Complex z) const {
    Complex zr = lattice_reduce(z, torus_);
    if (std::abs(zr) < opt_.pole_tol)
        throw std::domain_error("wp: z lies on the lattice (double pole)");
    double sr = 0.0, si = 0.0;
    const double zx = zr.real(), zy = zr.imag();
    for (std::size_t i = 0; i < omegas_.size(); ++i) {
        // 1/(z-w)^2 - 1/w^2
        const double dr = zx - omegas_[i].real(), di = zy - omegas_[i].imag();
        const double d2r = dr * dr - di * di, d2i = 2.0 * dr * di;
        const double den = d2r * d2r + d2i * d2i;
        const double rd = 1.0 / den;
        sr += d2r * rd - inv2_[i].real();
        si += -d2i * rd - inv2_[i].imag();
    }
    Complex acc(sr, si);
    acc += 1.0 / (zr * zr);
    // tail: sum_{k>=2} (2k-1) T_{2k} z^{2k-2}
    const Complex z2 = zr * zr;
    Complex zpow = z2; // z^{2k-2} starting at k = 2
    for (std::size_t i = 0; i < tail_.size(); ++i) {
        const double k = static_cast<double>(i) + 2.0;
        acc += (2.0 * k - 1.0) * tail_[i] * zpow;
        zpow *= z2;
    }
    return acc;
}

LaurentInvariants laurent_invariants(const WpEvaluator& wp, double radius, int samples) {
    if (samples < 16) throw std::invalid_argument("laurent_invariants: need at least 16 samples");
    // wp = z^-2 + (g2/20) z^2 + (g3/28) z^4 + ...; read the two coefficients
    // off by discrete Fourier sums on |z| = radius
    Complex a2(0.0), a4(0.0);
    for (int s = 0; s < samples; ++s) {
        double angle = 2.0 * kPi * s / samples;
        Complex z = radius * Complex(std::cos(angle), std::sin(angle));
        Complex f = wp.wp(z);
        a2 += f * std::exp(Complex(0.0, -2.0 * angle));
        a4 += f * std::exp(Complex(0.0, -4.0 * angle));
    }
    a2 /= static_cast<double>(samples) * std::pow(radius, 2);
    a4 /= static_cast<double>(samples) * std::pow(radius, 4);
    return {20.0 * a2, 28.0 * a4};
}

double wp_ode_residual(const WpEvaluator& wp, int samples, unsigned seed) {
    LaurentInvariants inv = laurent_invariants(wp);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.1, 0.45);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        Complex z = Complex(unif(rng), 0.0) + unif(rng) * wp.torus().tau;
        Complex p = wp.wp(z);
        Complex pp = wp.wp_prime(z);
        worst = std::max(worst,
                         std::abs(pp * pp - 4.0 * p * p * p + inv.g2 * p + inv.g3));
    }
    return worst;
}

std::vector<std::pair<Complex, Complex>> random_zq_samples(const Torus& torus, int count,
                                                           unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.08, 0.42);
    std::vector<std::pair<Complex, Complex>> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        Complex z = Complex(unif(rng), 0.0) + unif(rng) * torus.tau;
        Complex q = Complex(unif(rng), 0.0) + unif(rng) * torus.tau;
        // keep z +- q off the lattice so neither side degenerates
        if (lattice_distance(z - q, torus) < 0.05 || lattice_distance(z + q, torus) < 0.05)
            continue;
        out.push_back({z, q});
    }
    return out;
}

namespace {

double identity_error_at(const WpEvaluator& wp, Complex z, Complex q) {
    const Torus& torus = wp.torus();
    Complex tp0 = theta_prime0(torus);
    Complex lhs = tp0 * tp0 * theta(z + q, torus) * theta(z - q, torus);
    Complex th_z = theta(z, torus);
    Complex th_q = theta(q, torus);
    lhs /= th_z * th_z * th_q * th_q;
    return std::abs(lhs - (wp.wp(q) - wp.wp(z)));
}

} // namespace

double theta_wp_identity_error(const WpEvaluator& wp,
                               const std::vector<std::pair<Complex, Complex>>& samples) {
    std::vector<double> errors(samples.size(), 0.0);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        errors[static_cast<std::size_t>(i)] = identity_error_at(
            wp, samples[static_cast<std::size_t>(i)].first, samples[static_cast<std::size_t>(i)].second);
    double worst = 0.0;
    for (double e : errors) worst = std::max(worst, e);
    return worst;
}

double theta_wp_identity_error_serial(const WpEvaluator& wp,
                                      const std::vector<std::pair<Complex, Complex>>& samples) {
    std::vector<double> errors(samples.size(), 0.0);
    for (std::size_t i = 0; i < samples.size(); ++i)
        errors[i] = identity_error_at(wp, samples[i].first, samples[i].second);
    double worst = 0.0;
    for (double e : errors) worst = std::max(worst, e);
    return worst;
}

Complex WpEvaluator::wp_prime(Complex z) const {
    Complex zr = lattice_reduce(z, torus_);
    if (std::abs(zr) < opt_.pole_tol)
        throw std::domain_error("wp_prime: z lies on the lattice (pole)");
    Complex acc = -2.0 / (zr * zr * zr);
    for (std::size_t i = 0; i < omegas_.size(); ++i) {
        Complex d = zr - omegas_[i];
        acc += -2.0 / (d * d * d);
    }
    // d/dz of the wp tail: sum_k (2k-1)(2k-2) T_{2k} z^{2k-3}
    for (std::size_t k = 0; k < tail_.size(); ++k) {
        int kk = static_cast<int>(k) + 2;
        Complex zpow = std::pow(zr, 2 * kk - 3);
        acc += static_cast<double>((2 * kk - 1) * (2 * kk - 2)) * tail_[k] * zpow;
    }
    return acc;
}

} // namespace hitchinlab::elliptic
