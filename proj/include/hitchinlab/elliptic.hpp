#ifndef HITCHINLAB_ELLIPTIC_HPP
#define HITCHINLAB_ELLIPTIC_HPP

#include <complex>
#include <vector>

namespace hitchinlab::elliptic {

using Complex = std::complex<double>;

// Lattice <1, tau> with Im(tau) > 0.
struct Torus {
    Complex tau;
    Complex q; // exp(2 pi i tau)

    explicit Torus(Complex tau_);
};

// z minus the nearest lattice point (centered fundamental cell)
Complex lattice_reduce(Complex z, const Torus& torus);
// distance to the lattice
double lattice_distance(Complex z, const Torus& torus);

// Odd Jacobi theta: theta(z) = 2 sum_{k>=0} (-1)^k q1^{(k+1/2)^2} sin((2k+1) pi z)
// with q1 = exp(i pi tau). Simple zeros exactly on the lattice; functional
// equations:
//   theta(-z)     = -theta(z)
//   theta(z + 1)  = -theta(z)
//   theta(z + tau)= -exp(-i pi tau - 2 pi i z) theta(z)
Complex theta(Complex z, const Torus& torus, double tol = 1e-14);
Complex theta_prime(Complex z, const Torus& torus, double tol = 1e-14);
Complex theta_prime0(const Torus& torus, double tol = 1e-14);

// Lame-Hermite function H(z,a) = exp(a theta'/theta(z)) theta(z-a)/theta(z)
Complex lame_hermite(Complex z, Complex a, const Torus& torus, double tol = 1e-14);

// Partial sums of sum' omega^{-4} and omega^{-6} over 0 < max(|m|,|n|) <= M.
struct EisensteinPartial {
    Complex s4;
    Complex s6;
};
// OpenMP row-parallel kernel and its serial reference; both accumulate rows
// in a fixed order, so results agree bitwise.
EisensteinPartial eisenstein_square_sum(Complex tau, long m_limit);
EisensteinPartial eisenstein_square_sum_serial(Complex tau, long m_limit);

struct WpOptions {
    long central_m = 40;        // square radius of the explicit lattice sum
    int tail_terms = 8;         // Eisenstein tail corrections G4..G_{2*tail_terms}
    long eisenstein_m0 = 625;   // Richardson base level (levels M0, 2M0, 4M0, 8M0)
    double pole_tol = 1e-12;
};

// Weierstrass p-function by symmetrically truncated lattice sum plus an
// analytic tail built from Eisenstein series of the same lattice. The theta
// quotient route stays independent and is used only as a cross-check.
class WpEvaluator {
  public:
    WpEvaluator(const Torus& torus, const WpOptions& opt = {});

    Complex wp(Complex z) const;
    Complex wp_prime(Complex z) const;

    Complex g2() const { return g2_; }
    Complex g3() const { return g3_; }
    // G_{2k} for k = 2..tail_terms (index 0 -> G4)
    const std::vector<Complex>& eisenstein() const { return g2k_; }

    const Torus& torus() const { return torus_; }

  private:
    Torus torus_;
    WpOptions opt_;
    std::vector<Complex> omegas_;     // nonzero lattice points of the central square
    std::vector<Complex> inv2_;       // cached omega^{-2}
    std::vector<Complex> inv3_;       // cached omega^{-3}
    std::vector<Complex> g2k_;        // full Eisenstein values
    std::vector<Complex> tail_;       // G_{2k} - central partial sums
    Complex g2_, g3_;
};

// g2, g3 recovered from the Laurent coefficients of wp sampled on a small
// circle; an internal consistency probe, independent of the stored values
struct LaurentInvariants {
    Complex g2;
    Complex g3;
};
LaurentInvariants laurent_invariants(const WpEvaluator& wp, double radius = 0.15,
                                     int samples = 32);

// max |wp'(z)^2 - 4 wp^3 + g2 wp + g3| over sample points, using the
// Laurent-fit invariants
double wp_ode_residual(const WpEvaluator& wp, int samples = 40, unsigned seed = 11u);

// sample pairs for the quotient identity, kept away from poles
std::vector<std::pair<Complex, Complex>> random_zq_samples(const Torus& torus, int count,
                                                           unsigned seed);

// max |theta'(0)^2 theta(z+q) theta(z-q) / (theta(z)^2 theta(q)^2) - (wp(q) - wp(z))|
// over the sample list; the OpenMP kernel and its serial reference fill the
// same slots, so they agree bitwise
double theta_wp_identity_error(const WpEvaluator& wp,
                               const std::vector<std::pair<Complex, Complex>>& samples);
double theta_wp_identity_error_serial(const WpEvaluator& wp,
                                      const std::vector<std::pair<Complex, Complex>>& samples);

} // namespace hitchinlab::elliptic

#endif
