#ifndef HITCHINLAB_WEYL_HPP
#define HITCHINLAB_WEYL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hitchinlab/ratfunc.hpp"

namespace hitchinlab::exact {

// x^a d^b in normal order (all x's to the left); sparse exponents keyed by a
// 1-based site index.
struct WeylMono {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> x; // sorted by site
    std::vector<std::pair<std::uint32_t, std::uint32_t>> d;

    bool operator<(const WeylMono& o) const;
    bool operator==(const WeylMono& o) const { return x == o.x && d == o.d; }
    std::string to_string() const;
};

// Element of the Weyl algebra in x_1..x_N with coefficients that are rational
// functions in commuting parameters. The relation [d_i, x_j] = delta_ij is
// applied on multiplication; values are always stored normally ordered.
class WeylElement {
  public:
    WeylElement() = default; // zero

    static WeylElement scalar(RatFunc c);
    static WeylElement coordinate(std::uint32_t site);
    static WeylElement derivation(std::uint32_t site);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<WeylMono, RatFunc>& terms() const { return terms_; }

    WeylElement operator-() const;
    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-(const WeylElement& o) const;
    WeylElement operator*(const WeylElement& o) const;
    WeylElement operator*(const RatFunc& c) const;
    WeylElement& operator+=(const WeylElement& o) { return *this = *this + o; }
    WeylElement& operator-=(const WeylElement& o) { return *this = *this - o; }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    // result of acting on the constant function 1 (derivative-free part left
    // over after applying every d); returned as a derivative-free element
    WeylElement apply_to_one() const;

    std::string to_string() const;

    void add_term(const WeylMono& m, const RatFunc& c);

  private:
    std::map<WeylMono, RatFunc> terms_;
};

inline WeylElement commutator(const WeylElement& a, const WeylElement& b) {
    return a * b - b * a;
}

} // namespace hitchinlab::exact

#endif
