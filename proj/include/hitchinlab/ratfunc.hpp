#ifndef HITCHINLAB_RATFUNC_HPP
#define HITCHINLAB_RATFUNC_HPP

#include <map>
#include <string>

#include "hitchinlab/polynomial.hpp"

namespace hitchinlab::exact {

// Quotient of polynomials kept in canonical form: gcd(num, den) = 1, den
// integer-primitive with positive leading coefficient. Equality is then
// structural; cross-multiplication is used only in tests as an oracle.
class RatFunc {
  public:
    RatFunc() = default; // zero
    RatFunc(Polynomial num, Polynomial den);
    /*implicit*/ RatFunc(Polynomial num);
    static RatFunc constant(const Rat& c) { return RatFunc(Polynomial::constant(c)); }
    static RatFunc variable(Var v) { return RatFunc(Polynomial::variable(v)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // throws unless den is constant
    Polynomial as_polynomial() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const; // throws on division by zero
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // quotient-rule derivative, reduced
    RatFunc derivative(Var v) const;

    // substitutes rational values; throws on a vanishing denominator
    RatFunc eval_partial(const std::map<Var, Rat>& values) const;
    Rat eval(const std::map<Var, Rat>& values) const;

    std::string to_string() const;

  private:
    void reduce();

    Polynomial num_;
    Polynomial den_ = Polynomial::constant(Rat(1));
};

} // namespace hitchinlab::exact

#endif
