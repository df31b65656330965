#include "hitchinlab/bundles_p1.hpp"

#include <stdexcept>

#include "hitchinlab/ratmatrix.hpp"

namespace hitchinlab::bundles {

using exact::RatMatrix;

TransitionData::TransitionData(int m_, std::vector<Rat> coeffs_)
    : m(m_), coeffs(std::move(coeffs_)) {
    if (m < 2) throw std::invalid_argument("TransitionData: m must be >= 2");
    if (coeffs.size() != static_cast<std::size_t>(m - 1))
        throw std::invalid_argument("TransitionData: expected exactly m-1 coefficients a_1..a_{m-1}");
}

const Rat& TransitionData::a(int s) const {
    static const Rat zero(0);
    if (s < 1 || s > m - 1) return zero;
    return coeffs[static_cast<std::size_t>(s - 1)];
}

namespace {

// window matrix of the degree-n test: rows i=1..n, cols j=1..m-n, entry a_{i+j-1}
RatMatrix window_matrix(const TransitionData& data, int n) {
    int rows = n, cols = data.m - n;
    RatMatrix a(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            a.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                data.a(i + j - 1);
    return a;
}

} // namespace

SplittingType splitting_type(const TransitionData& data) {
    const int m = data.m;
    for (int n = (m + 1) / 2; n <= m; ++n) {
        if (n == m) return {m, m}; // empty window matrix
        RatMatrix a = window_matrix(data, n);
        if (exact::rank(a) == static_cast<std::size_t>(m - n)) return {m, n};
    }
    throw std::logic_error("splitting_type: unreachable");
}

Rat hankel_determinant(const std::vector<Rat>& coeffs) {
    if (coeffs.size() % 2 == 0)
        throw std::invalid_argument("hankel_determinant: need an odd number of coefficients a_1..a_{2n-1}");
    const std::size_t n = (coeffs.size() + 1) / 2;
    // elimination with exact pivoting
    RatMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h.at(i, j) = coeffs[i + j];
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = col; r < n; ++r)
            if (sgn(h.at(r, col)) != 0) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX) return Rat(0);
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(h.at(piv, c), h.at(col, c));
            det = -det;
        }
        det *= h.at(col, col);
        Rat inv = Rat(1) / h.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(h.at(r, col)) == 0) continue;
            Rat f = h.at(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) h.at(r, c) -= f * h.at(col, c);
        }
    }
    return det;
}

int hom_dimension_oracle(int r, const TransitionData& data) {
    const int m = data.m;
    // sections with y_inf = 0: x_inf may soak up degrees <= -r
    int free_x = r <= 0 ? 1 - r : 0;
    // y_inf has coefficients c_0..c_{m-r}; the polynomial condition on the
    // first component imposes one equation per forbidden degree e = 1..r-1
    int unknowns = m - r + 1;
    if (unknowns <= 0) return free_x;
    int equations = r - 1;
    if (equations <= 0) return free_x + unknowns;
    RatMatrix a(static_cast<std::size_t>(equations), static_cast<std::size_t>(unknowns));
    for (int e = 1; e <= equations; ++e)
        for (int v = 0; v <= m - r; ++v)
            a.at(static_cast<std::size_t>(e - 1), static_cast<std::size_t>(v)) = data.a(e + v);
    return free_x + unknowns - static_cast<int>(exact::rank(std::move(a)));
}

std::vector<SplittingType> classify_batch_serial(const std::vector<TransitionData>& batch) {
    std::vector<SplittingType> out(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) out[i] = splitting_type(batch[i]);
    return out;
}

std::vector<SplittingType> classify_batch(const std::vector<TransitionData>& batch) {
    std::vector<SplittingType> out(batch.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = splitting_type(batch[static_cast<std::size_t>(i)]);
    return out;
}

} // namespace hitchinlab::bundles
