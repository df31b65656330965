#ifndef HITCHINLAB_BUNDLES_P1_HPP
#define HITCHINLAB_BUNDLES_P1_HPP

#include <vector>

#include "hitchinlab/rat.hpp"

namespace hitchinlab::bundles {

// Rank-2 bundle on P^1 with clutching matrix [[1, f(z)], [0, z^m]],
// f = a_1 z + ... + a_{m-1} z^{m-1}. The constant and z^m coefficients are
// normalized away and therefore rejected as input.
struct TransitionData {
    int m = 2;
    std::vector<Rat> coeffs; // a_1..a_{m-1}

    TransitionData(int m_, std::vector<Rat> coeffs_);
    const Rat& a(int s) const; // a_s, zero outside 1..m-1
};

// E = O(k) + O(m-k) with k >= m-k
struct SplittingType {
    int m = 0;
    int k = 0;
};

// Hankel-rank classifier: smallest n >= ceil(m/2) whose n x (m-n) window
// matrix [a_{i+j-1}] has full rank m-n (the empty matrix at n = m counts as
// full rank).
SplittingType splitting_type(const TransitionData& data);

// determinant of the n x n Hankel matrix [a_{i+j-1}] from an odd-length
// coefficient list a_1..a_{2n-1}
Rat hankel_determinant(const std::vector<Rat>& coeffs);

// dim Hom(O(r), E) by explicitly solving the section equations of the
// clutching description; independent of the classifier above.
int hom_dimension_oracle(int r, const TransitionData& data);

// classify a batch; parallel version runs the loop under OpenMP
std::vector<SplittingType> classify_batch(const std::vector<TransitionData>& batch);
std::vector<SplittingType> classify_batch_serial(const std::vector<TransitionData>& batch);

} // namespace hitchinlab::bundles

#endif
