#ifndef HITCHINLAB_RATMATRIX_HPP
#define HITCHINLAB_RATMATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hitchinlab/rat.hpp"

namespace hitchinlab::exact {

// Dense matrix over exact rationals.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const Rat& c) const;
    bool is_zero() const;
    Rat trace() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // Kronecker product, row-major convention: (A kron B)[i1*rB+i2][j1*cB+j2]
    static RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

    std::string to_string() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

// Row-parallel product (OpenMP) and the serial reference it is tested against.
RatMatrix mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mul_serial(const RatMatrix& a, const RatMatrix& b);

inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
    return mul(a, b) - mul(b, a);
}

// rank over Q by Gaussian elimination (exact, no thresholds)
std::size_t rank(RatMatrix m);

// basis of the right kernel, one column per basis vector
RatMatrix kernel_basis(RatMatrix m);

// Solves B * X = Y for X, where B has full column rank; throws if the system
// is inconsistent.
RatMatrix solve_exact(const RatMatrix& b, const RatMatrix& y);

// characteristic polynomial coefficients c_0..c_n of det(lambda I - A),
// c_n = 1 (Faddeev-LeVerrier)
std::vector<Rat> char_poly(const RatMatrix& a);

} // namespace hitchinlab::exact

#endif
