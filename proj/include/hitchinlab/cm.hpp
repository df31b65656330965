#ifndef HITCHINLAB_CM_HPP
#define HITCHINLAB_CM_HPP

#include <vector>

#include "hitchinlab/elliptic.hpp"
#include "hitchinlab/flow.hpp"

namespace hitchinlab::cm {

using elliptic::Complex;
using elliptic::Torus;
using elliptic::WpEvaluator;

struct CMState {
    std::vector<Complex> q; // positions, pairwise distinct mod lattice
    std::vector<Complex> p;
    Complex coupling;       // c

    int n() const { return static_cast<int>(q.size()); }
};

void validate_state(const CMState& state, const Torus& torus, double min_separation = 1e-6);

using LaxMatrix = std::vector<std::vector<Complex>>;

// Krichever Lax matrix: phi_ii = p_i,
// phi_ij = c theta'(0) theta(z + q_i - q_j) / (theta(z) theta(q_i - q_j))
LaxMatrix lax_matrix(const CMState& state, Complex z, const Torus& torus, double tol = 1e-14);

Complex trace_power(const LaxMatrix& m, int k);

struct FitOptions {
    double radius = 0.1;
    int samples = 24;
    double alt_radius = 0.07; // independent re-fit used as the residual probe
    int alt_samples = 29;
    double residual_tol = 1e-7;
};

struct Hamiltonians {
    std::vector<Complex> values; // H_1..H_kmax
    double fit_residual = 0.0;   // 0 when no Laurent fit was needed (kmax <= 2)
};

// H_1, H_2 in closed form; H_k (k >= 3) as the constant Laurent coefficient
// of tr phi(z)^k, fit from samples on a small circle. Throws std::runtime_error
// when the two fit configurations disagree beyond residual_tol.
Hamiltonians cm_hamiltonians(const CMState& state, const WpEvaluator& wp, int k_max,
                             const FitOptions& fit = {});

// max |tr phi(z)^2 - n(n-1) c^2 wp(z)| spread over sampled z (the constant-term
// statement of the quadratic hamiltonian)
double tr_phi2_constancy(const CMState& state, const WpEvaluator& wp, int z_samples = 20,
                         unsigned seed = 7u);

struct CMTrajectory {
    std::vector<double> times;
    std::vector<CMState> states;
    std::vector<std::vector<Complex>> hamiltonians; // recorded H values per step
};

struct CMFlowResult {
    CMTrajectory trajectory;
    bool collided = false;
    std::size_t collision_step = 0;
    std::vector<double> drift; // max |H_k(t) - H_k(0)| per recorded hamiltonian
};

struct CMFlowOptions {
    flow::StepOptions step;
    double collision_tol = 1e-6;
    bool track_h3 = true; // when n >= 3
    FitOptions fit;
};

// implicit-midpoint flow of H_2: qdot_i = 2 p_i,
// pdot_i = 2 c^2 sum_{j != i} wp'(q_i - q_j)
CMFlowResult cm_flow(const CMState& initial, const WpEvaluator& wp, double t_end, double step_size,
                     const CMFlowOptions& opt = {});

} // namespace hitchinlab::cm

#endif
