#include "hitchinlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "hitchinlab/bundles_p1.hpp"
#include "hitchinlab/cm.hpp"
#include "hitchinlab/elliptic.hpp"
#include "hitchinlab/garnier.hpp"
#include "hitchinlab/gaudin.hpp"
#include "hitchinlab/liedata.hpp"
#include "hitchinlab/opers.hpp"
#include "hitchinlab/report.hpp"
#include "hitchinlab/series.hpp"
#include "hitchinlab/spectral.hpp"

namespace hitchinlab::cli {

using report::Json;

namespace {

// ------------------------------------------------------------ input parsing

Rat rat_from_json(const nlohmann::json& v) {
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_number_float()) {
        Rat q;
        mpq_set_d(q.get_mpq_t(), v.get<double>());
        return q;
    }
    throw std::invalid_argument("expected a rational (number or \"num/den\" string)");
}

std::vector<Rat> rat_list_from_json(const nlohmann::json& v) {
    std::vector<Rat> out;
    for (const auto& x : v) out.push_back(rat_from_json(x));
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in rational list '" + csv + "'");
        out.push_back(rat_from_string(item));
    }
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return j;
}

elliptic::Complex complex_from_json(const nlohmann::json& v) {
    if (v.is_array() && v.size() == 2)
        return {v[0].get<double>(), v[1].get<double>()};
    if (v.is_number()) return {v.get<double>(), 0.0};
    throw std::invalid_argument("expected a complex number as [re, im]");
}

Json complex_to_json(elliptic::Complex z) { return Json::array({z.real(), z.imag()}); }

Json rat_vector_to_json(const std::vector<Rat>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(rat_to_string(x));
    return arr;
}

Json poly_coeff_json(const exact::Polynomial& p, Var v) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients_in(v)) arr.push_back(rat_to_string(c.as_constant()));
    return arr;
}

// ----------------------------------------------------------- garnier pieces

struct GarnierInput {
    garnier::GarnierData data;
    garnier::PhaseState exact_state;
    garnier::PhaseStateF float_state;
};

GarnierInput load_garnier_state(const std::string& path) {
    nlohmann::json j = load_json_file(path);
    std::vector<Rat> t = rat_list_from_json(j.at("t"));
    std::vector<Rat> lam = j.contains("lambda") ? rat_list_from_json(j.at("lambda"))
                                                : std::vector<Rat>(t.size(), Rat(0));
    garnier::GarnierData data(t, lam);
    GarnierInput in{std::move(data), {}, {}};
    in.exact_state.y = rat_list_from_json(j.at("y"));
    in.exact_state.p = rat_list_from_json(j.at("p"));
    if (in.exact_state.y.size() != t.size() || in.exact_state.p.size() != t.size())
        throw std::invalid_argument("state file: y and p must have the same length as t");
    for (const auto& v : in.exact_state.y) in.float_state.y.push_back(rat_to_double(v));
    for (const auto& v : in.exact_state.p) in.float_state.p.push_back(rat_to_double(v));
    return in;
}

void write_garnier_csv(const std::string& path, const garnier::GarnierData& data,
                       const garnier::Trajectory& traj) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << "t";
    for (int i = 1; i <= data.n; ++i) out << ",y" << i;
    for (int i = 1; i <= data.n; ++i) out << ",p" << i;
    for (int i = 1; i <= data.n; ++i) out << ",G" << i;
    out << "\n";
    char buf[64];
    auto emit = [&](double x) {
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        out << "," << buf;
    };
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
        std::snprintf(buf, sizeof(buf), "%.17g", traj.times[s]);
        out << buf;
        for (double v : traj.states[s].y) emit(v);
        for (double v : traj.states[s].p) emit(v);
        for (double v : traj.hamiltonians[s]) emit(v);
        out << "\n";
    }
}

// --------------------------------------------------------------- cm pieces

struct CMInput {
    elliptic::Torus torus;
    cm::CMState state;
};

CMInput load_cm_state(const std::string& path) {
    nlohmann::json j = load_json_file(path);
    elliptic::Torus torus(complex_from_json(j.at("tau")));
    cm::CMState state;
    state.coupling = complex_from_json(j.at("c"));
    for (const auto& v : j.at("q")) state.q.push_back(complex_from_json(v));
    for (const auto& v : j.at("p")) state.p.push_back(complex_from_json(v));
    return {torus, std::move(state)};
}

void write_cm_csv(const std::string& path, const cm::CMTrajectory& traj) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    const int n = traj.states.empty() ? 0 : traj.states.front().n();
    const std::size_t hk = traj.hamiltonians.empty() ? 0 : traj.hamiltonians.front().size();
    out << "t";
    for (int i = 1; i <= n; ++i) out << ",re_q" << i << ",im_q" << i;
    for (int i = 1; i <= n; ++i) out << ",re_p" << i << ",im_p" << i;
    for (std::size_t k = 1; k <= hk; ++k) out << ",re_H" << k << ",im_H" << k;
    out << "\n";
    char buf[64];
    auto emit = [&](double x) {
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        out << "," << buf;
    };
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
        std::snprintf(buf, sizeof(buf), "%.17g", traj.times[s]);
        out << buf;
        for (const auto& z : traj.states[s].q) {
            emit(z.real());
            emit(z.imag());
        }
        for (const auto& z : traj.states[s].p) {
            emit(z.real());
            emit(z.imag());
        }
        for (const auto& h : traj.hamiltonians[s]) {
            emit(h.real());
            emit(h.imag());
        }
        out << "\n";
    }
}

// series helpers
exact::Series series_from_json(const nlohmann::json& j, int default_order) {
    std::vector<Rat> coeffs;
    int order = default_order;
    if (j.is_array()) {
        coeffs = rat_list_from_json(j);
        order = std::max<int>(static_cast<int>(coeffs.size()) - 1, 1);
    } else {
        coeffs = rat_list_from_json(j.at("coeffs"));
        order = j.contains("order") ? j.at("order").get<int>()
                                    : std::max<int>(static_cast<int>(coeffs.size()) - 1, 1);
    }
    return exact::Series(std::move(coeffs), order);
}

Json series_to_json(const exact::Series& s) {
    Json j = Json::object();
    Json arr = Json::array();
    for (const auto& c : s.coeffs()) arr.push_back(rat_to_string(c));
    j["coeffs"] = arr;
    j["order"] = s.order();
    return j;
}

// ------------------------------------------------------------- subcommands

int cmd_classify_p1(int m, const std::string& coeffs_csv, std::ostream& out) {
    std::vector<Rat> coeffs =
        coeffs_csv.empty() ? std::vector<Rat>{} : parse_rat_list(coeffs_csv);
    bundles::TransitionData data(m, coeffs);
    bundles::SplittingType split = bundles::splitting_type(data);
    Json doc = report::make_document("classify-p1");
    doc["m"] = m;
    doc["k"] = split.k;
    doc["type"] = "O(" + std::to_string(split.k) + ")+O(" + std::to_string(split.m - split.k) + ")";
    if (m % 2 == 0 && m >= 2) {
        std::vector<Rat> window(coeffs.begin(), coeffs.end());
        doc["hankel"] = rat_to_string(bundles::hankel_determinant(window));
    } else {
        doc["hankel"] = nullptr;
    }
    out << report::dump(doc);
    return kExitPass;
}

int cmd_garnier_check(int n, bool twisted, const std::string& points_csv, std::ostream& out) {
    garnier::GarnierData data = points_csv.empty()
                                    ? garnier::GarnierData::equally_spaced(n)
                                    : garnier::GarnierData::untwisted(parse_rat_list(points_csv));
    if (data.n != n && !points_csv.empty())
        throw std::invalid_argument("garnier check: --points length disagrees with --n");
    auto twist = twisted ? garnier::TwistSymbols::symbolic : garnier::TwistSymbols::numeric;
    garnier::InvolutionReport rep = garnier::check_involution(data, twist);

    Json doc = report::make_document("garnier-check");
    doc["n"] = n;
    doc["twisted"] = twisted;
    Json pairs = Json::array();
    for (const auto& pr : rep.pairs) {
        Json e = Json::object();
        e["i"] = pr.i;
        e["j"] = pr.j;
        e["zero"] = pr.zero;
        pairs.push_back(e);
    }
    doc["pairs"] = pairs;
    doc["all_zero"] = rep.all_zero;
    out << report::dump(doc);
    return rep.all_zero ? kExitPass : kExitCheckFailed;
}

int cmd_garnier_flow(const std::string& data_path, int h_index, double t_end, double step,
                     const std::string& csv_path, const RunConfig& config, std::ostream& out) {
    GarnierInput in = load_garnier_state(data_path);
    garnier::Trajectory traj =
        garnier::hamilton_flow(in.data, h_index, in.float_state, t_end, step);
    std::string csv = csv_path.empty()
                          ? (config.output_csv.empty() ? "garnier_flow.csv" : config.output_csv)
                          : csv_path;
    write_garnier_csv(csv, in.data, traj);

    Json doc = report::make_document("garnier-flow");
    doc["hamiltonian"] = h_index;
    doc["steps"] = static_cast<long>(traj.times.size()) - 1;
    doc["csv"] = csv;
    const auto& h0 = traj.hamiltonians.front();
    Json drifts = Json::array();
    double worst = 0.0;
    for (std::size_t j = 0; j < h0.size(); ++j) {
        double d = 0.0;
        for (const auto& h : traj.hamiltonians) d = std::max(d, std::abs(h[j] - h0[j]));
        drifts.push_back(d);
        worst = std::max(worst, d);
    }
    doc["hamiltonian_drift"] = drifts;
    auto c0 = garnier::moment_constraints(traj.states.front());
    double cworst = 0.0;
    for (const auto& s : traj.states) {
        auto c = garnier::moment_constraints(s);
        for (int k = 0; k < 3; ++k) cworst = std::max(cworst, std::abs(c[k] - c0[k]));
    }
    doc["constraint_drift"] = cworst;
    bool pass = worst < config.drift_tol && cworst < config.drift_tol;
    doc["pass"] = pass;
    doc["drift_tol"] = config.drift_tol;
    out << report::dump(doc);
    return pass ? kExitPass : kExitCheckFailed;
}

int cmd_garnier_spectral(const std::string& data_path, std::ostream& out) {
    GarnierInput in = load_garnier_state(data_path);
    spectral::SpectralCurve curve = spectral::spectral_curve(in.data, in.exact_state);
    Json doc = report::make_document("garnier-spectral");
    doc["a"] = poly_coeff_json(curve.a, spectral::z_var());
    doc["b"] = poly_coeff_json(curve.b, spectral::z_var());
    if (curve.degenerate || curve.genus < 0)
        doc["genus"] = nullptr;
    else
        doc["genus"] = curve.genus;
    doc["degenerate"] = curve.degenerate;
    out << report::dump(doc);
    return kExitPass;
}

int cmd_cm_flow(const std::string& data_path, double t_end, double step,
                const std::string& csv_path, const RunConfig& config, std::ostream& out) {
    CMInput in = load_cm_state(data_path);
    elliptic::WpEvaluator wp(in.torus);
    cm::CMFlowResult result = cm::cm_flow(in.state, wp, t_end, step);
    std::string csv = csv_path.empty()
                          ? (config.output_csv.empty() ? "cm_flow.csv" : config.output_csv)
                          : csv_path;
    write_cm_csv(csv, result.trajectory);

    Json doc = report::make_document("cm-flow");
    doc["steps"] = static_cast<long>(result.trajectory.times.size()) - 1;
    doc["csv"] = csv;
    doc["collided"] = result.collided;
    if (result.collided) doc["collision_step"] = static_cast<long>(result.collision_step);
    Json drift = Json::array();
    for (double d : result.drift) drift.push_back(d);
    doc["hamiltonian_drift"] = drift;
    // H_1, H_2 at drift_tol; the fit-extracted H_3 at 10x
    bool pass = !result.collided;
    for (std::size_t k = 0; k < result.drift.size(); ++k)
        pass = pass && result.drift[k] < (k < 2 ? config.drift_tol : 10.0 * config.drift_tol);
    doc["pass"] = pass;
    doc["drift_tol"] = config.drift_tol;
    out << report::dump(doc);
    return pass ? kExitPass : kExitCheckFailed;
}

int cmd_cm_verify(double tol, std::ostream& out) {
    Json doc = report::make_document("cm-verify");
    doc["tol"] = tol;
    Json tori = Json::array();
    bool all_pass = true;
    const std::vector<elliptic::Complex> taus = {
        {0.0, 1.0}, {0.5, 1.0}, {0.0, 2.0}};
    for (const auto& tau : taus) {
        elliptic::Torus torus(tau);
        elliptic::WpEvaluator wp(torus);
        Json entry = Json::object();
        entry["tau"] = complex_to_json(tau);

        std::mt19937 rng(3u);
        std::uniform_real_distribution<double> unif(0.07, 0.43);
        double e_odd = 0.0, e_period = 0.0, e_quasi = 0.0, e_lame = 0.0;
        const elliptic::Complex ipi(0.0, 3.14159265358979323846);
        for (int s = 0; s < 100; ++s) {
            elliptic::Complex z(unif(rng), 0.0);
            z += unif(rng) * tau;
            elliptic::Complex th = elliptic::theta(z, torus);
            e_odd = std::max(e_odd, std::abs(elliptic::theta(-z, torus) + th));
            e_period = std::max(e_period, std::abs(elliptic::theta(z + 1.0, torus) + th));
            elliptic::Complex factor = -std::exp(-ipi * tau - 2.0 * ipi * z);
            e_quasi = std::max(e_quasi,
                               std::abs(elliptic::theta(z + tau, torus) - factor * th));
            if (s % 10 == 0) {
                elliptic::Complex a(unif(rng), unif(rng) * tau.imag() * 0.5);
                elliptic::Complex h = elliptic::lame_hermite(z, a, torus);
                e_lame = std::max(e_lame,
                                  std::abs(elliptic::lame_hermite(z + 1.0, a, torus) / h - 1.0));
                e_lame = std::max(e_lame,
                                  std::abs(elliptic::lame_hermite(z + tau, a, torus) / h - 1.0));
            }
        }
        entry["theta_odd"] = e_odd;
        entry["theta_period"] = e_period;
        entry["theta_quasi_period"] = e_quasi;
        entry["lame_periodicity"] = e_lame;

        auto samples = elliptic::random_zq_samples(torus, 100, 17u);
        double e_identity = elliptic::theta_wp_identity_error(wp, samples);
        entry["theta_wp_identity"] = e_identity;

        double e_ode = elliptic::wp_ode_residual(wp);
        entry["wp_ode_residual"] = e_ode;

        double e_even = 0.0;
        for (int s = 0; s < 25; ++s) {
            elliptic::Complex z(unif(rng), 0.0);
            z += unif(rng) * tau;
            e_even = std::max(e_even, std::abs(wp.wp(z) - wp.wp(-z)));
        }
        entry["wp_even"] = e_even;

        bool pass = e_odd < tol && e_period < tol && e_quasi < tol && e_lame < tol &&
                    e_identity < tol && e_even < tol && e_ode < 1e-8;
        entry["pass"] = pass;
        all_pass = all_pass && pass;
        tori.push_back(entry);
    }
    doc["tori"] = tori;
    doc["pass"] = all_pass;
    out << report::dump(doc);
    return all_pass ? kExitPass : kExitCheckFailed;
}

int cmd_gaudin_check(const std::string& dims_csv, const std::string& points_csv,
                     std::ostream& out) {
    std::vector<int> dims = parse_int_list(dims_csv);
    std::vector<Rat> points = parse_rat_list(points_csv);
    gaudin::GaudinFamily family = gaudin::gaudin_operators(dims, points);
    gaudin::CommutativityReport rep = gaudin::commutativity_check(family);
    Json doc = report::make_document("gaudin-check");
    Json d = Json::array();
    for (int x : dims) d.push_back(x);
    doc["dims"] = d;
    doc["points"] = rat_vector_to_json(points);
    Json pairs = Json::array();
    for (const auto& pr : rep.pairs) {
        Json e = Json::object();
        e["i"] = pr.i;
        e["j"] = pr.j;
        e["zero"] = pr.zero;
        pairs.push_back(e);
    }
    doc["pairs"] = pairs;
    doc["diagonal_sl2"] = rep.diagonal_sl2 ? "pass" : "fail";
    doc["all_zero"] = rep.all_zero;
    out << report::dump(doc);
    return rep.all_zero ? kExitPass : kExitCheckFailed;
}

int cmd_gaudin_spectrum(const std::string& dims_csv, const std::string& points_csv,
                        std::ostream& out) {
    std::vector<int> dims = parse_int_list(dims_csv);
    std::vector<Rat> points = parse_rat_list(points_csv);
    gaudin::SpectrumReport rep = gaudin::gaudin_spectrum(dims, points);
    Json doc = report::make_document("gaudin-spectrum");
    Json d = Json::array();
    for (int x : dims) d.push_back(x);
    doc["dims"] = d;
    doc["points"] = rat_vector_to_json(points);
    doc["invariant_dimension"] = rep.invariant_dimension;
    Json polys = Json::array();
    for (const auto& cp : rep.char_polys) polys.push_back(rat_vector_to_json(cp));
    doc["char_polys"] = polys;
    out << report::dump(doc);
    return kExitPass;
}

int cmd_oper_schwarzian(const std::string& coeffs_csv, int order, std::ostream& out) {
    std::vector<Rat> coeffs = parse_rat_list(coeffs_csv);
    int ord = order > 0 ? order : std::max<int>(static_cast<int>(coeffs.size()) - 1, 4);
    exact::Series s(coeffs, ord);
    exact::Series d = opers::schwarzian(s);
    Json doc = report::make_document("oper-schwarzian");
    doc["schwarzian"] = series_to_json(d);
    out << report::dump(doc);
    return kExitPass;
}

int cmd_oper_transform(const std::string& u_path, const std::string& s_path, int default_order,
                       std::ostream& out) {
    exact::Series u = series_from_json(load_json_file(u_path), default_order);
    exact::Series s = series_from_json(load_json_file(s_path), default_order);
    opers::HillOperator op{u};
    opers::HillOperator res = opers::transform_hill(op, s);
    Json doc = report::make_document("oper-transform");
    doc["potential"] = series_to_json(res.potential);
    out << report::dump(doc);
    return kExitPass;
}

int cmd_dims(const std::string& group, int n, int genus, std::ostream& out) {
    liedata::GroupFamily family = liedata::family_from_string(group);
    liedata::GroupData data = liedata::group_data(family, n);
    Json doc = report::make_document("dims");
    doc["group"] = liedata::family_to_string(family) + std::to_string(n);
    Json degs = Json::array();
    for (int d : data.degrees) degs.push_back(d);
    doc["degrees"] = degs;
    doc["dim_g"] = data.dim_g;
    doc["dim_z"] = data.dim_z;
    doc["bun_dim"] = liedata::bun_dim(data.dim_g, data.dim_z, genus);
    doc["base_dim"] = spectral::hitchin_base_dim(data.degrees, genus);
    out << report::dump(doc);
    return kExitPass;
}

// --------------------------------------------------------------- verify-all

using CheckFn = std::function<void(Json&)>;

Json run_check(const std::string& name, const CheckFn& body) {
    Json entry = Json::object();
    entry["name"] = name;
    try {
        body(entry);
    } catch (const std::exception& e) {
        entry["pass"] = false;
        entry["error"] = e.what();
    }
    return entry;
}

exact::Polynomial random_poly(std::mt19937& rng, const std::vector<Var>& vars, int max_terms,
                              int max_degree) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    std::vector<exact::Polynomial::Term> terms;
    int count = nterms(rng);
    for (int t = 0; t < count; ++t) {
        exact::Monomial m;
        int d = deg(rng);
        for (int k = 0; k < d; ++k) m = m * exact::Monomial(vars[pick(rng)]);
        terms.push_back({m, Rat(coeff(rng))});
    }
    return exact::Polynomial::from_terms(std::move(terms));
}

void check_exactalg(Json& entry, bool quick) {
    std::mt19937 rng(101u);
    Var y1 = var("y1"), p1 = var("p1"), y2 = var("y2"), p2 = var("p2");
    std::vector<Var> vars = {y1, p1, y2, p2};
    std::vector<exact::CanonicalPair> pairs = {{y1, p1}, {y2, p2}};
    const int rounds = quick ? 6 : 20;
    bool ok = true;
    for (int r = 0; r < rounds && ok; ++r) {
        exact::RatFunc f(random_poly(rng, vars, 4, 3));
        exact::RatFunc g(random_poly(rng, vars, 4, 3));
        exact::RatFunc h(random_poly(rng, vars, 4, 3));
        // antisymmetry and derivation property
        ok = ok && (exact::poisson_bracket(f, g, pairs) +
                    exact::poisson_bracket(g, f, pairs)).is_zero();
        ok = ok && (exact::poisson_bracket(f, g * h, pairs) -
                    exact::poisson_bracket(f, g, pairs) * h -
                    g * exact::poisson_bracket(f, h, pairs)).is_zero();
        // Jacobi
        exact::RatFunc jac = exact::poisson_bracket(f, exact::poisson_bracket(g, h, pairs), pairs) +
                             exact::poisson_bracket(g, exact::poisson_bracket(h, f, pairs), pairs) +
                             exact::poisson_bracket(h, exact::poisson_bracket(f, g, pairs), pairs);
        ok = ok && jac.is_zero();
        // field axioms of the normal form
        if (!g.is_zero()) ok = ok && ((f * g) / g == f);
        ok = ok && (f - f).is_zero();
    }
    // canonical pair and Weyl relation
    ok = ok && exact::poisson_bracket(exact::RatFunc::variable(p1), exact::RatFunc::variable(y1),
                                      pairs) == exact::RatFunc::constant(Rat(1));
    exact::WeylElement d1 = exact::WeylElement::derivation(1);
    exact::WeylElement x1 = exact::WeylElement::coordinate(1);
    ok = ok && exact::commutator(d1, x1) == exact::WeylElement::scalar(exact::RatFunc::constant(Rat(1)));
    entry["pass"] = ok;
}

void check_bundles(Json& entry, bool quick) {
    std::mt19937 rng(202u);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    const int m_max = quick ? 5 : 8;
    const int per_m = quick ? 25 : 60;
    bool ok = true;
    long tested = 0;
    for (int m = 2; m <= m_max && ok; ++m) {
        for (int trial = 0; trial < per_m && ok; ++trial) {
            std::vector<Rat> coeffs;
            for (int i = 1; i < m; ++i) coeffs.push_back(rat(num(rng), den(rng)));
            bundles::TransitionData data(m, coeffs);
            bundles::SplittingType split = bundles::splitting_type(data);
            int oracle_k = 0;
            for (int r = m; r >= (m + 1) / 2; --r)
                if (bundles::hom_dimension_oracle(r, data) > 0) {
                    oracle_k = r;
                    break;
                }
            ok = ok && split.k == oracle_k;
            if (m % 2 == 0)
                ok = ok && ((sgn(bundles::hankel_determinant(coeffs)) != 0) == (split.k == m / 2));
            ++tested;
        }
    }
    entry["cases"] = tested;
    entry["pass"] = ok;
}

void check_garnier(Json& entry, bool quick) {
    bool ok = true;
    for (int n : quick ? std::vector<int>{4} : std::vector<int>{4, 5}) {
        auto data = garnier::GarnierData::equally_spaced(n);
        ok = ok && garnier::check_involution(data).all_zero;
        ok = ok && garnier::check_involution(data, garnier::TwistSymbols::symbolic).all_zero;
        ok = ok && garnier::sum_identities_check(data).all_pass();
    }
    entry["pass"] = ok;
}

void check_spectral(Json& entry, bool quick) {
    std::mt19937 rng(303u);
    bool ok = true;
    for (int n = 4; n <= (quick ? 5 : 6) && ok; ++n) {
        auto data = garnier::GarnierData::equally_spaced(n);
        garnier::PhaseState state = garnier::random_admissible_state(data, rng);
        spectral::SpectralCurve curve = spectral::spectral_curve(data, state);
        ok = ok && !curve.degenerate && curve.genus == n - 3 &&
             curve.a.degree_in(spectral::z_var()) == static_cast<std::uint32_t>(n - 4);
    }
    for (int n = 1; n <= 4 && ok; ++n)
        for (int g = 2; g <= 3 && ok; ++g)
            ok = ok && spectral::riemann_hurwitz_genus(n, g, 2 * n * (g - 1)) == n * n * (g - 1) + 1;
    entry["pass"] = ok;
}

void check_liedata(Json& entry, bool quick) {
    bool ok = true;
    const int n_max = quick ? 4 : 8;
    for (int n = 1; n <= n_max && ok; ++n) {
        for (auto family : {liedata::GroupFamily::GL, liedata::GroupFamily::SL}) {
            auto data = liedata::group_data(family, n);
            long sum = 0;
            for (int d : data.degrees) sum += 2 * d - 1;
            ok = ok && sum == data.dim_g;
            if (data.degrees.empty()) continue;
            for (int g = 2; g <= 4; ++g)
                ok = ok && spectral::hitchin_base_dim(data.degrees, g) ==
                               liedata::bun_dim(data.dim_g, data.dim_z, g);
        }
    }
    entry["pass"] = ok;
}

void check_gaudin_matrix(Json& entry, bool quick) {
    bool ok = true;
    std::vector<std::vector<int>> cases = {{2, 2}, {2, 2, 2}, {2, 2, 3}};
    if (!quick) cases.push_back({2, 2, 2, 2});
    for (const auto& dims : cases) {
        std::vector<Rat> points;
        for (std::size_t i = 0; i < dims.size(); ++i)
            points.push_back(rat(static_cast<long>(2 * i) + (i % 2 ? 1 : 0), i % 3 + 1));
        auto family = gaudin::gaudin_operators(dims, points);
        ok = ok && gaudin::commutativity_check(family).all_zero;
    }
    entry["pass"] = ok;
}

void check_gaudin_weyl(Json& entry, bool quick) {
    const int n = quick ? 3 : 4;
    bool ok = true;
    std::vector<exact::WeylElement> g;
    for (int i = 1; i <= n; ++i) g.push_back(gaudin::gaudin_weyl(n, i));
    for (int i = 0; i < n && ok; ++i)
        for (int j = i + 1; j < n && ok; ++j)
            ok = ok && exact::commutator(g[static_cast<std::size_t>(i)],
                                         g[static_cast<std::size_t>(j)]).is_zero();
    entry["pass"] = ok;
}

void check_elliptic(Json& entry, bool quick, double tol) {
    elliptic::WpOptions opt;
    opt.eisenstein_m0 = quick ? 160 : 625;
    bool ok = true;
    const std::vector<elliptic::Complex> taus =
        quick ? std::vector<elliptic::Complex>{{0.0, 1.0}}
              : std::vector<elliptic::Complex>{{0.0, 1.0}, {0.5, 1.0}, {0.0, 2.0}};
    double worst_identity = 0.0, worst_ode = 0.0;
    for (const auto& tau : taus) {
        elliptic::Torus torus(tau);
        elliptic::WpEvaluator wp(torus, opt);
        auto samples = elliptic::random_zq_samples(torus, quick ? 25 : 100, 23u);
        double e = elliptic::theta_wp_identity_error(wp, samples);
        worst_identity = std::max(worst_identity, e);
        double ode = elliptic::wp_ode_residual(wp);
        worst_ode = std::max(worst_ode, ode);
        ok = ok && e < tol && ode < 1e-8;
    }
    entry["theta_wp_identity"] = worst_identity;
    entry["wp_ode_residual"] = worst_ode;
    entry["pass"] = ok;
}

void check_cm(Json& entry, bool quick, double drift_tol) {
    elliptic::Torus torus({0.0, 1.0});
    elliptic::WpOptions opt;
    opt.eisenstein_m0 = quick ? 160 : 625;
    elliptic::WpEvaluator wp(torus, opt);
    cm::CMState state;
    // imaginary coupling = repulsive potential; the dynamics stays real
    state.q = {{0.15, 0.0}, {0.62, 0.0}};
    state.p = {{0.24, 0.0}, {-0.19, 0.0}};
    state.coupling = {0.0, 0.35};
    double t_end = quick ? 0.2 : 1.0;
    auto result = cm::cm_flow(state, wp, t_end, 1e-3);
    double worst = 0.0;
    for (double d : result.drift) worst = std::max(worst, d);
    entry["h_drift"] = worst;
    double spread = cm::tr_phi2_constancy(state, wp);
    entry["tr_phi2_spread"] = spread;
    entry["pass"] = !result.collided && worst < drift_tol && spread < 1e-8;
}

void check_opers(Json& entry, bool quick) {
    std::mt19937 rng(404u);
    std::uniform_int_distribution<int> coeff(-4, 4);
    bool ok = true;
    // Moebius jets have vanishing Schwarzian
    exact::Series mob = exact::Series::mobius(rat(2), rat(0), rat(1), rat(3));
    ok = ok && opers::schwarzian(mob).is_zero();
    // cocycle D(s o r) = (D(s) o r) r'^2 + D(r)
    const int rounds = quick ? 4 : 10;
    for (int t = 0; t < rounds && ok; ++t) {
        std::vector<Rat> sc{Rat(0), Rat(1)};
        std::vector<Rat> rc{Rat(0), Rat(1)};
        for (int k = 2; k <= exact::kDefaultSeriesOrder; ++k) {
            sc.push_back(Rat(coeff(rng)));
            rc.push_back(Rat(coeff(rng)));
        }
        exact::Series s(sc, exact::kDefaultSeriesOrder);
        exact::Series r(rc, exact::kDefaultSeriesOrder);
        exact::Series lhs = opers::schwarzian(exact::series_compose(s, r));
        exact::Series rp = r.derivative();
        int k = lhs.order();
        exact::Series rhs = exact::series_compose(opers::schwarzian(s), r.truncated(k + 3)) *
                                (rp * rp).truncated(k) +
                            opers::schwarzian(r).truncated(k);
        ok = ok && (lhs - rhs.truncated(k)).is_zero();
    }
    // Wronskian of the normalized solutions is exactly 1
    std::vector<Rat> uc;
    for (int k = 0; k <= 8; ++k) uc.push_back(Rat(coeff(rng)));
    opers::HillOperator op{exact::Series(uc, 8)};
    auto [psi1, psi2] = opers::solve_hill(op);
    exact::Series wr = opers::wronskian(psi1, psi2);
    ok = ok && wr == exact::Series::constant(Rat(1), wr.order());
    entry["pass"] = ok;
}

int cmd_verify_all(bool quick, const RunConfig& config, std::ostream& out) {
    Json doc = report::make_document("verify-all");
    doc["quick"] = quick;
    Json checks = Json::array();
    checks.push_back(run_check("exactalg", [&](Json& e) { check_exactalg(e, quick); }));
    checks.push_back(run_check("bundles-p1", [&](Json& e) { check_bundles(e, quick); }));
    checks.push_back(run_check("garnier", [&](Json& e) { check_garnier(e, quick); }));
    checks.push_back(run_check("spectral", [&](Json& e) { check_spectral(e, quick); }));
    checks.push_back(run_check("liedata", [&](Json& e) { check_liedata(e, quick); }));
    checks.push_back(run_check("gaudin-matrix", [&](Json& e) { check_gaudin_matrix(e, quick); }));
    checks.push_back(run_check("gaudin-weyl", [&](Json& e) { check_gaudin_weyl(e, quick); }));
    checks.push_back(
        run_check("elliptic", [&](Json& e) { check_elliptic(e, quick, config.identity_tol); }));
    checks.push_back(run_check("cm", [&](Json& e) { check_cm(e, quick, config.drift_tol); }));
    checks.push_back(run_check("opers", [&](Json& e) { check_opers(e, quick); }));
    bool all = true;
    for (const auto& c : checks) all = all && c.contains("pass") && c["pass"].get<bool>();
    doc["checks"] = checks;
    doc["pass"] = all;
    out << report::dump(doc);
    return all ? kExitPass : kExitCheckFailed;
}

} // namespace

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hitchinlab: exact and numerical workbench for Garnier, Calogero-Moser,\n"
                 "Gaudin and Hill-operator calculus"};
    app.require_subcommand(1);
    // keep -h free for value flags like `garnier flow --h`
    app.set_help_flag("--help", "print help");

    RunConfig config;
    std::string config_path;
    app.add_option("--config", config_path, "configuration file (.json or .toml)");
    // tolerate --config appearing before the subcommand by pre-scanning
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--config") config = load_config_file(args[i + 1], config);
    apply_environment(config);

    double opt_identity_tol = config.identity_tol;
    double opt_drift_tol = config.drift_tol;
    int opt_parallel = config.parallelism;

    app.add_option("--identity-tol", opt_identity_tol, "float tolerance for identity checks");
    app.add_option("--drift-tol", opt_drift_tol, "tolerance for conservation drift");
    app.add_option("--parallel", opt_parallel, "OpenMP thread count (0 = default)");

    // classify-p1
    auto* classify = app.add_subcommand("classify-p1", "splitting type of a rank-2 bundle on P^1");
    int cp_m = 2;
    std::string cp_coeffs;
    classify->add_option("--m", cp_m, "degree of the determinant (z^m block)")->required();
    classify->add_option("--coeffs", cp_coeffs, "a_1,...,a_{m-1} as rationals")->required();

    // garnier
    auto* gar = app.add_subcommand("garnier", "Garnier system checks, flows and spectral curves");
    gar->require_subcommand(1);
    auto* gar_check = gar->add_subcommand("check", "exact pairwise involution of the hamiltonians");
    int gc_n = 4;
    bool gc_twisted = false;
    std::string gc_points;
    gar_check->add_option("--n", gc_n, "number of marked points")->required();
    gar_check->add_flag("--twisted", gc_twisted, "fully symbolic twist parameters");
    gar_check->add_option("--points", gc_points, "marked points (default 0,1,...,n-1)");

    auto* gar_flow = gar->add_subcommand("flow", "implicit-midpoint flow of one hamiltonian");
    gar_flow->set_help_flag("--help", "print help");
    std::string gf_data, gf_csv;
    int gf_h = 1;
    double gf_tend = 1.0, gf_step = config.integrator_step;
    gar_flow->add_option("--data", gf_data, "state JSON {t, lambda, y, p}")->required();
    gar_flow->add_option("--h", gf_h, "hamiltonian index (1-based)");
    gar_flow->add_option("--t-end", gf_tend, "integration time");
    gar_flow->add_option("--step", gf_step, "step size");
    gar_flow->add_option("--out-csv", gf_csv, "trajectory CSV path");

    auto* gar_spec = gar->add_subcommand("spectral", "spectral curve of an exact state");
    std::string gs_data;
    gar_spec->add_option("--data", gs_data, "state JSON {t, lambda, y, p}")->required();

    // cm
    auto* cmc = app.add_subcommand("cm", "elliptic Calogero-Moser flows and identity checks");
    cmc->require_subcommand(1);
    auto* cm_flow_cmd = cmc->add_subcommand("flow", "H_2 flow with conservation report");
    std::string cf_data, cf_csv;
    double cf_tend = 1.0, cf_step = config.integrator_step;
    cm_flow_cmd->add_option("--data", cf_data, "state JSON {tau, c, q, p}")->required();
    cm_flow_cmd->add_option("--t-end", cf_tend, "integration time");
    cm_flow_cmd->add_option("--step", cf_step, "step size");
    cm_flow_cmd->add_option("--out-csv", cf_csv, "trajectory CSV path");

    auto* cm_verify_cmd = cmc->add_subcommand("verify", "theta / wp identity suite");
    double cv_tol = opt_identity_tol;
    cm_verify_cmd->add_option("--tol", cv_tol, "identity tolerance");

    // gaudin
    auto* gau = app.add_subcommand("gaudin", "quantum Gaudin hamiltonians");
    gau->require_subcommand(1);
    auto* gau_check = gau->add_subcommand("check", "exact commutativity report");
    std::string ga_dims, ga_points;
    gau_check->add_option("--dims", ga_dims, "site dimensions, e.g. 2,2,3")->required();
    gau_check->add_option("--points", ga_points, "marked points, e.g. 0,1,3")->required();
    auto* gau_spec = gau->add_subcommand("spectrum", "joint spectrum on the invariant subspace");
    std::string gsp_dims, gsp_points;
    gau_spec->add_option("--dims", gsp_dims, "site dimensions")->required();
    gau_spec->add_option("--points", gsp_points, "marked points")->required();

    // oper
    auto* oper = app.add_subcommand("oper", "Schwarzian and Hill-operator calculus");
    oper->require_subcommand(1);
    auto* oper_schw = oper->add_subcommand("schwarzian", "Schwarzian derivative of a series");
    std::string os_series;
    int os_order = 0;
    oper_schw->add_option("--series", os_series, "coefficients c0,c1,... of s(t)")->required();
    oper_schw->add_option("--order", os_order, "truncation order (default from the list)");
    auto* oper_tr = oper->add_subcommand("transform", "Hill potential under t -> s(t)");
    std::string ot_u, ot_s;
    oper_tr->add_option("--u", ot_u, "potential JSON {coeffs, order}")->required();
    oper_tr->add_option("--s", ot_s, "coordinate change JSON {coeffs, order}")->required();

    // dims
    auto* dims_cmd = app.add_subcommand("dims", "Chevalley degrees and dimension bookkeeping");
    std::string dm_group = "SL";
    int dm_n = 2, dm_genus = 2;
    dims_cmd->add_option("--group", dm_group, "GL, SL or PGL")->required();
    dims_cmd->add_option("--n", dm_n, "rank parameter")->required();
    dims_cmd->add_option("--genus", dm_genus, "curve genus (>= 2)");

    // verify-all
    auto* verify = app.add_subcommand("verify-all", "run every module invariant suite");
    bool va_quick = false;
    verify->add_flag("--quick", va_quick, "reduced sizes");

    std::vector<const char*> argv;
    argv.push_back("hitchinlab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    config.identity_tol = opt_identity_tol;
    config.drift_tol = opt_drift_tol;
    config.parallelism = opt_parallel;
    try {
        config.validate();
        if (config.parallelism > 0) omp_set_num_threads(config.parallelism);

        if (*classify) return cmd_classify_p1(cp_m, cp_coeffs, out);
        if (*gar_check) return cmd_garnier_check(gc_n, gc_twisted, gc_points, out);
        if (*gar_flow) return cmd_garnier_flow(gf_data, gf_h, gf_tend, gf_step, gf_csv, config, out);
        if (*gar_spec) return cmd_garnier_spectral(gs_data, out);
        if (*cm_flow_cmd) return cmd_cm_flow(cf_data, cf_tend, cf_step, cf_csv, config, out);
        if (*cm_verify_cmd) return cmd_cm_verify(cv_tol, out);
        if (*gau_check) return cmd_gaudin_check(ga_dims, ga_points, out);
        if (*gau_spec) return cmd_gaudin_spectrum(gsp_dims, gsp_points, out);
        if (*oper_schw) return cmd_oper_schwarzian(os_series, os_order, out);
        if (*oper_tr) return cmd_oper_transform(ot_u, ot_s, config.series_order, out);
        if (*dims_cmd) return cmd_dims(dm_group, dm_n, dm_genus, out);
        if (*verify) return cmd_verify_all(va_quick, config, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    err << "error: no subcommand selected\n";
    return kExitUsage;
}

int dispatch(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    return dispatch(std::move(args), std::cout, std::cerr);
}

} // namespace hitchinlab::cli
