#ifndef HITCHINLAB_GARNIER_HPP
#define HITCHINLAB_GARNIER_HPP

#include <array>
#include <random>
#include <vector>

#include "hitchinlab/flow.hpp"
#include "hitchinlab/poisson.hpp"
#include "hitchinlab/ratfunc.hpp"

namespace hitchinlab::garnier {

using exact::Polynomial;
using exact::RatFunc;

// Marked points and residue eigenvalues; all twists zero is the plain
// Garnier system.
struct GarnierData {
    int n = 0;
    std::vector<Rat> points; // t_1..t_N, pairwise distinct
    std::vector<Rat> twists; // lambda_1..lambda_N

    GarnierData(std::vector<Rat> points_, std::vector<Rat> twists_);
    static GarnierData untwisted(std::vector<Rat> points_);
    // untwisted with t_i = i-1 for i = 1..n
    static GarnierData equally_spaced(int n);
    bool untwisted() const;
};

struct PhaseState {
    std::vector<Rat> y, p;
};

struct PhaseStateF {
    std::vector<double> y, p;
};

// whether lambda_i enter formulas as the numeric twists of the data or as
// free symbols lam1..lamN
enum class TwistSymbols { numeric, symbolic };

Var y_var(int i); // y1.. (1-based)
Var p_var(int i);
Var lam_var(int i);

// 2x2 trace-free residue matrix with entries in Q(y_i, p_i[, lam_i])
struct ResidueMatrix {
    RatFunc entry[2][2];
    RatFunc trace() const { return entry[0][0] + entry[1][1]; }
    RatFunc det() const { return entry[0][0] * entry[1][1] - entry[0][1] * entry[1][0]; }
};

RatFunc trace_product(const ResidueMatrix& a, const ResidueMatrix& b);

std::vector<ResidueMatrix> residue_matrices(const GarnierData& data,
                                            TwistSymbols twist = TwistSymbols::numeric);

// G_i = sum_{j != i} [ (y_i-y_j)^2 p_i p_j - 2 (lam_i p_j - lam_j p_i)(y_i-y_j)
//                      - 2 lam_i lam_j ] / (t_j - t_i)
std::vector<RatFunc> garnier_hamiltonians(const GarnierData& data,
                                          TwistSymbols twist = TwistSymbols::numeric);

std::vector<exact::CanonicalPair> canonical_pairs(int n);

struct PairResult {
    int i = 0, j = 0;
    bool zero = false;
};

struct InvolutionReport {
    std::vector<PairResult> pairs;
    bool all_zero = false;
};

// exact {G_i, G_j} for all i < j; n capped to keep the symbolic run bounded
InvolutionReport check_involution(const GarnierData& data,
                                  TwistSymbols twist = TwistSymbols::numeric,
                                  int exact_bound = 6);

std::array<Rat, 3> moment_constraints(const PhaseState& state);
std::array<double, 3> moment_constraints(const PhaseStateF& state);

struct SumIdentitiesReport {
    // reductions of sum G_i, sum t_i G_i, sum t_i^2 G_i mod the constraint ideal
    std::array<bool, 3> reduction_zero{};
    bool on_shell_zero = false; // sum G_i at sampled admissible states
    bool all_pass() const {
        return reduction_zero[0] && reduction_zero[1] && reduction_zero[2] && on_shell_zero;
    }
};

SumIdentitiesReport sum_identities_check(const GarnierData& data);

// sum_i G_i evaluated at an arbitrary state (nonzero off shell)
Rat hamiltonian_sum_at(const GarnierData& data, const PhaseState& state);

// generic admissible state: y distinct, free p_1..p_{N-3}, last three solved
// from the moment constraints
PhaseState random_admissible_state(const GarnierData& data, std::mt19937& rng);

struct Trajectory {
    std::vector<double> times;
    std::vector<PhaseStateF> states;
    std::vector<std::vector<double>> hamiltonians; // all G_j at each step
};

struct FlowOptions {
    flow::StepOptions step;
};

// implicit-midpoint flow of G_{h_index} (1-based); records every G_j
Trajectory hamilton_flow(const GarnierData& data, int h_index, const PhaseStateF& initial,
                         double t_end, double step_size, const FlowOptions& opt = {});

} // namespace hitchinlab::garnier

#endif
