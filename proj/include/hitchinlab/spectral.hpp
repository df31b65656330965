#ifndef HITCHINLAB_SPECTRAL_HPP
#define HITCHINLAB_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "hitchinlab/garnier.hpp"
#include "hitchinlab/polynomial.hpp"

namespace hitchinlab::spectral {

using exact::Polynomial;

Var z_var();

// Hyperelliptic data y^2 = a(z)/b(z) (equivalently y^2 = a b after clearing),
// with -det phi = a/b and b = prod (z - t_i). a == 0 marks the degenerate
// curve of a zero Higgs field; genus is meaningful only otherwise.
struct SpectralCurve {
    Polynomial a;
    Polynomial b;
    bool degenerate = false;
    int genus = -1;
};

SpectralCurve spectral_curve(const garnier::GarnierData& data, const garnier::PhaseState& state);

// genus of the smooth model of y^2 = a(z) b(z); requires ab square-free and
// gcd(a, b) = 1
int hyperelliptic_genus(const Polynomial& a, const Polynomial& b);

// degree-n cover of a genus-g curve with B simple branch points, each with
// total ramification: chi = n (2 - 2g - B) + B
int riemann_hurwitz_genus(int n, int g, int branch_points);

// sum over degrees d of dim H^0(K^d): g for d = 1, (2d-1)(g-1) otherwise
long hitchin_base_dim(const std::vector<int>& degrees, int g);

struct DriftReport {
    std::vector<double> max_drift; // per coefficient of a(z)
    double worst = 0.0;
};

// recomputes the coefficients of a(z) along a trajectory and reports their
// maximum absolute drift against step 0
DriftReport isospectrality_check(const garnier::GarnierData& data,
                                 const garnier::Trajectory& trajectory);

} // namespace hitchinlab::spectral

#endif
