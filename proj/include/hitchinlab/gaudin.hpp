#ifndef HITCHINLAB_GAUDIN_HPP
#define HITCHINLAB_GAUDIN_HPP

#include <vector>

#include "hitchinlab/ratmatrix.hpp"
#include "hitchinlab/weyl.hpp"

namespace hitchinlab::gaudin {

using exact::RatMatrix;
using exact::WeylElement;

// d-dimensional irreducible sl2 representation in the weight basis (highest
// weight first): H = diag(d-1, d-3, ..., 1-d), F v_k = v_{k+1},
// E v_k = k (d-k) v_{k-1}.
struct Sl2Irrep {
    int d = 0;
    RatMatrix e, f, h;
};

Sl2Irrep sl2_irrep(int d);

// Casimir C = EF + FE + H^2/2 of one irrep
RatMatrix casimir(const Sl2Irrep& rep);

// X acting in one slot of the tensor product, identity elsewhere (1-based slot)
RatMatrix op_at(const std::vector<int>& dims, int slot, const RatMatrix& m);

// diagonal action of e, f or h across all slots
RatMatrix diagonal_action(const std::vector<int>& dims, char generator);

// Omega = e x f + f x e + 1/2 h x h placed in slots (i, j), i < j
RatMatrix casimir_action(const std::vector<int>& dims, int i, int j);

struct GaudinFamily {
    std::vector<int> dims;
    std::vector<Rat> points;
    std::vector<RatMatrix> operators; // G_i = sum_{j != i} Omega_ij / (t_i - t_j)
};

GaudinFamily gaudin_operators(const std::vector<int>& dims, const std::vector<Rat>& points,
                              const Rat& scale = Rat(1));

struct CommutativityReport {
    struct Pair {
        int i = 0, j = 0;
        bool zero = false;
    };
    std::vector<Pair> pairs;
    bool diagonal_sl2 = false; // every G_i commutes with the diagonal e, f, h
    bool all_zero = false;
};

CommutativityReport commutativity_check(const GaudinFamily& family);

// G_i realized in the Weyl algebra through f -> -d_x, h -> 2x d_x + Lambda,
// e -> x^2 d_x + Lambda x at each site, with symbolic Lambda_i and t_i
WeylElement gaudin_weyl(int n_sites, int i);

// the three substituted generators at one site
WeylElement weyl_e(int site);
WeylElement weyl_f(int site);
WeylElement weyl_h(int site);

struct SpectrumReport {
    int invariant_dimension = 0;
    // characteristic polynomial coefficients (c_0..c_k, monic) of each G_i
    // restricted to the sl2-invariant subspace
    std::vector<std::vector<Rat>> char_polys;
};

SpectrumReport gaudin_spectrum(const std::vector<int>& dims, const std::vector<Rat>& points);

} // namespace hitchinlab::gaudin

#endif
