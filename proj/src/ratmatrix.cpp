#include "hitchinlab/ratmatrix.hpp"

#include <stdexcept>

namespace hitchinlab::exact {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMatrix: shape mismatch in +");
    RatMatrix m(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
    return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("RatMatrix: shape mismatch in -");
    RatMatrix m(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
    return m;
}

RatMatrix RatMatrix::operator*(const Rat& c) const {
    RatMatrix m(*this);
    for (auto& x : m.data_) x *= c;
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

Rat RatMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::trace: not square");
    Rat t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

RatMatrix RatMatrix::kronecker(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Rat& f = a.at(i1, j1);
            if (sgn(f) == 0) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    m.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = f * b.at(i2, j2);
        }
    return m;
}

std::string RatMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += r == 0 ? "[" : " ";
        for (std::size_t c = 0; c < cols_; ++c) {
            s += rat_to_string(at(r, c));
            if (c + 1 < cols_) s += ", ";
        }
        s += r + 1 < rows_ ? ";\n" : "]";
    }
    return s;
}

RatMatrix mul_serial(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("RatMatrix: shape mismatch in *");
    RatMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& f = a.at(i, k);
            if (sgn(f) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rat& g = b.at(k, j);
                if (sgn(g) != 0) m.at(i, j) += f * g;
            }
        }
    return m;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("RatMatrix: shape mismatch in *");
    RatMatrix m(a.rows(), b.cols());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static) if (n >= 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto row = static_cast<std::size_t>(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& f = a.at(row, k);
            if (sgn(f) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rat& g = b.at(k, j);
                if (sgn(g) != 0) m.at(row, j) += f * g;
            }
        }
    }
    return m;
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = row; r < m.rows(); ++r)
            if (sgn(m.at(r, col)) != 0) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX) continue;
        if (piv != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
        Rat inv = Rat(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m.at(r, col)) == 0) continue;
            Rat f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(RatMatrix m) { return rref(m).size(); }

RatMatrix kernel_basis(RatMatrix m) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMatrix basis(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis.at(pivots[r], k) = -m.at(r, fc);
    }
    return basis;
}

RatMatrix solve_exact(const RatMatrix& b, const RatMatrix& y) {
    if (b.rows() != y.rows()) throw std::invalid_argument("solve_exact: shape mismatch");
    RatMatrix aug(b.rows(), b.cols() + y.cols());
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) aug.at(r, c) = b.at(r, c);
        for (std::size_t c = 0; c < y.cols(); ++c) aug.at(r, b.cols() + c) = y.at(r, c);
    }
    std::vector<std::size_t> pivots = rref(aug);
    for (auto p : pivots)
        if (p >= b.cols()) throw std::invalid_argument("solve_exact: inconsistent system");
    if (pivots.size() != b.cols())
        throw std::invalid_argument("solve_exact: matrix does not have full column rank");
    RatMatrix x(b.cols(), y.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < y.cols(); ++c) x.at(pivots[r], c) = aug.at(r, b.cols() + c);
    return x;
}

std::vector<Rat> char_poly(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: not square");
    const std::size_t n = a.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    RatMatrix m = RatMatrix(n, n); // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A * (M_{k-1} + c_{n-k+1} I)
        RatMatrix shifted = m;
        for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
        m = mul(a, shifted);
        c[n - k] = -m.trace() / Rat(static_cast<long>(k));
    }
    return c;
}

} // namespace hitchinlab::exact
