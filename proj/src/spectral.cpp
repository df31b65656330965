#include "hitchinlab/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace hitchinlab::spectral {

using exact::RatFunc;

Var z_var() { return var("z"); }

SpectralCurve spectral_curve(const garnier::GarnierData& data, const garnier::PhaseState& state) {
    const int n = data.n;
    if (state.y.size() != static_cast<std::size_t>(n) ||
        state.p.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("spectral_curve: state size does not match data");
    Var z = z_var();

    // numeric residue matrices
    std::map<Var, Rat> values;
    for (int i = 1; i <= n; ++i) {
        values[garnier::y_var(i)] = state.y[static_cast<std::size_t>(i - 1)];
        values[garnier::p_var(i)] = state.p[static_cast<std::size_t>(i - 1)];
    }
    std::vector<garnier::ResidueMatrix> sym = garnier::residue_matrices(data);

    RatFunc phi[2][2];
    for (int i = 1; i <= n; ++i) {
        RatFunc pole(Polynomial::constant(Rat(1)),
                     Polynomial::variable(z) -
                         Polynomial::constant(data.points[static_cast<std::size_t>(i - 1)]));
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                Rat v = sym[static_cast<std::size_t>(i - 1)].entry[r][c].eval(values);
                phi[r][c] += pole * RatFunc::constant(v);
            }
    }

    RatFunc det = phi[0][0] * phi[1][1] - phi[0][1] * phi[1][0];

    Polynomial b = Polynomial::constant(Rat(1));
    for (int i = 1; i <= n; ++i)
        b *= Polynomial::variable(z) -
             Polynomial::constant(data.points[static_cast<std::size_t>(i - 1)]);

    SpectralCurve curve;
    curve.b = b;
    if (det.is_zero()) {
        curve.a = Polynomial::zero();
        curve.degenerate = true;
        return curve;
    }
    // -det phi = a / b requires den(det) | b, i.e. only simple poles at the t_i
    auto cofactor = exact::exact_divide(b, det.den());
    if (!cofactor)
        throw std::domain_error(
            "spectral_curve: det(phi) has a pole not of simple type at a marked point");
    curve.a = -det.num() * *cofactor;

    Polynomial ab = curve.a * curve.b;
    Polynomial g1 = exact::poly_gcd(curve.a, curve.b);
    Polynomial g2 = exact::poly_gcd(ab, ab.derivative(z));
    if (g1.is_constant() && g2.is_constant())
        curve.genus = hyperelliptic_genus(curve.a, curve.b);
    return curve;
}

int hyperelliptic_genus(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("hyperelliptic_genus: zero input polynomial");
    Var z = z_var();
    for (const Polynomial* p : {&a, &b})
        for (Var v : p->variables())
            if (v != z)
                throw std::invalid_argument("hyperelliptic_genus: inputs must be univariate in z");
    if (!exact::poly_gcd(a, b).is_constant())
        throw std::invalid_argument("hyperelliptic_genus: a and b must be coprime");
    Polynomial ab = a * b;
    int d = static_cast<int>(ab.degree_in(z));
    if (d < 1) throw std::invalid_argument("hyperelliptic_genus: constant branch divisor");
    if (!exact::poly_gcd(ab, ab.derivative(z)).is_constant())
        throw std::domain_error("hyperelliptic_genus: a*b is not square-free (singular curve)");
    return (d + 1) / 2 - 1;
}

int riemann_hurwitz_genus(int n, int g, int branch_points) {
    if (n < 1 || g < 0 || branch_points < 0)
        throw std::invalid_argument("riemann_hurwitz_genus: invalid input");
    long chi = static_cast<long>(n) * (2 - 2 * static_cast<long>(g) - branch_points) + branch_points;
    if ((2 - chi) % 2 != 0) throw std::domain_error("riemann_hurwitz_genus: odd Euler characteristic");
    return static_cast<int>((2 - chi) / 2);
}

long hitchin_base_dim(const std::vector<int>& degrees, int g) {
    if (g < 2) throw std::invalid_argument("hitchin_base_dim: formula requires genus >= 2");
    if (degrees.empty()) throw std::invalid_argument("hitchin_base_dim: no degrees given");
    long dim = 0;
    for (int d : degrees) {
        if (d < 1) throw std::invalid_argument("hitchin_base_dim: degrees must be positive");
        dim += d == 1 ? g : static_cast<long>(2 * d - 1) * (g - 1);
    }
    return dim;
}

namespace {

// dense double polynomials in z, index = power
using DPoly = std::vector<double>;

DPoly dmul(const DPoly& a, const DPoly& b) {
    DPoly c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// quotient of division by a monic polynomial
DPoly ddiv_monic(DPoly num, const DPoly& den) {
    if (num.size() < den.size()) return {0.0};
    DPoly q(num.size() - den.size() + 1, 0.0);
    for (std::size_t k = q.size(); k-- > 0;) {
        double f = num[k + den.size() - 1];
        q[k] = f;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= f * den[j];
    }
    return q;
}

} // namespace

DriftReport isospectrality_check(const garnier::GarnierData& data,
                                 const garnier::Trajectory& trajectory) {
    const int n = data.n;
    if (trajectory.states.empty())
        throw std::invalid_argument("isospectrality_check: empty trajectory");

    std::vector<double> t(static_cast<std::size_t>(n));
    std::vector<double> lam(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        t[static_cast<std::size_t>(i)] = rat_to_double(data.points[static_cast<std::size_t>(i)]);
        lam[static_cast<std::size_t>(i)] = rat_to_double(data.twists[static_cast<std::size_t>(i)]);
    }

    DPoly b{1.0};
    for (int i = 0; i < n; ++i) b = dmul(b, DPoly{-t[static_cast<std::size_t>(i)], 1.0});

    auto a_coeffs = [&](const garnier::PhaseStateF& s) {
        // P_rc(z) = sum_i A_i[r][c] prod_{j != i} (z - t_j); a = -det(P)/b
        DPoly p00{0.0}, p01{0.0}, p10{0.0}, p11{0.0};
        for (int i = 0; i < n; ++i) {
            DPoly cof{1.0};
            for (int j = 0; j < n; ++j)
                if (j != i) cof = dmul(cof, DPoly{-t[static_cast<std::size_t>(j)], 1.0});
            double y = s.y[static_cast<std::size_t>(i)];
            double p = s.p[static_cast<std::size_t>(i)];
            double l = lam[static_cast<std::size_t>(i)];
            double a00 = -l + p * y;
            double a01 = 2.0 * l * y - p * y * y;
            double a10 = p;
            double a11 = l - p * y;
            auto axpy = [&](DPoly& dst, double c) {
                if (dst.size() < cof.size()) dst.resize(cof.size(), 0.0);
                for (std::size_t k = 0; k < cof.size(); ++k) dst[k] += c * cof[k];
            };
            axpy(p00, a00);
            axpy(p01, a01);
            axpy(p10, a10);
            axpy(p11, a11);
        }
        DPoly det = dmul(p00, p11);
        DPoly det2 = dmul(p01, p10);
        if (det.size() < det2.size()) det.resize(det2.size(), 0.0);
        for (std::size_t k = 0; k < det2.size(); ++k) det[k] -= det2[k];
        for (auto& c : det) c = -c;
        return ddiv_monic(std::move(det), b);
    };

    DPoly base = a_coeffs(trajectory.states.front());
    DriftReport report;
    report.max_drift.assign(base.size(), 0.0);
    for (const auto& s : trajectory.states) {
        DPoly cur = a_coeffs(s);
        for (std::size_t k = 0; k < base.size() && k < cur.size(); ++k) {
            double d = std::abs(cur[k] - base[k]);
            report.max_drift[k] = std::max(report.max_drift[k], d);
            report.worst = std::max(report.worst, d);
        }
    }
    return report;
}

} // namespace hitchinlab::spectral
