#ifndef HITCHINLAB_SERIES_HPP
#define HITCHINLAB_SERIES_HPP

#include <string>
#include <vector>

#include "hitchinlab/rat.hpp"

namespace hitchinlab::exact {

inline constexpr int kDefaultSeriesOrder = 16;

// Truncated power series c0 + c1 t + ... + cK t^K with exact coefficients.
// The truncation order is part of the value; binary operations truncate to
// the smaller order, differentiation lowers it by one.
class Series {
  public:
    explicit Series(int order); // zero series
    Series(std::vector<Rat> coeffs, int order);

    static Series constant(const Rat& c, int order = kDefaultSeriesOrder);
    static Series identity(int order = kDefaultSeriesOrder); // t
    // (a t + b) / (c t + d) expanded at t = 0; requires d != 0
    static Series mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                         int order = kDefaultSeriesOrder);

    int order() const { return order_; }
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    Series truncated(int new_order) const;

    Series operator-() const;
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator*(const Rat& c) const;
    // requires o.coeff(0) != 0
    Series operator/(const Series& o) const;

    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series derivative() const; // order drops by 1
    Series reciprocal() const; // requires coeff(0) != 0
    // requires coeff(0) a square of a rational
    Series sqrt() const;
    Series pow(int e) const; // e >= 0

    std::string to_string() const;

  private:
    std::vector<Rat> coeffs_; // size order_+1
    int order_;
};

inline Series operator*(const Rat& c, const Series& s) { return s * c; }

// outer(inner(t)); requires inner constant term zero
Series series_compose(const Series& outer, const Series& inner);

// compositional inverse: g with g(f(t)) = t; requires f(0) = 0, f'(0) != 0
Series series_reversion(const Series& f);

} // namespace hitchinlab::exact

#endif
