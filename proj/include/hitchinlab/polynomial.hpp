#ifndef HITCHINLAB_POLYNOMIAL_HPP
#define HITCHINLAB_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hitchinlab/rat.hpp"
#include "hitchinlab/variables.hpp"

namespace hitchinlab::exact {

// Sparse monomial: (variable, exponent) pairs sorted by variable id, all
// exponents positive. The empty monomial is 1.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(Var v, std::uint32_t exp = 1);

    static Monomial one() { return Monomial{}; }

    bool is_one() const { return factors_.empty(); }
    std::uint32_t total_degree() const;
    std::uint32_t degree_in(Var v) const;
    const std::vector<std::pair<Var, std::uint32_t>>& factors() const { return factors_; }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    // requires this->divides == false handling by caller; quotient other/this
    Monomial divide_into(const Monomial& other) const;

    // graded lex: higher total degree first, ties broken lexicographically
    // with lower variable ids weighing more.
    static int compare(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

    std::string to_string() const;

  private:
    std::vector<std::pair<Var, std::uint32_t>> factors_;
};

// Multivariate polynomial over Rat. Terms are kept sorted in descending
// graded-lex order with nonzero coefficients, so equality is structural.
class Polynomial {
  public:
    struct Term {
        Monomial mono;
        Rat coeff;

        bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
    };

    Polynomial() = default;
    static Polynomial zero() { return Polynomial{}; }
    static Polynomial constant(const Rat& c);
    static Polynomial variable(Var v);
    static Polynomial term(const Rat& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // constant term as Rat; throws if not constant (use constant_part for the
    // coefficient of the unit monomial regardless).
    Rat as_constant() const;
    Rat constant_part() const;

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    const Term& leading_term() const;

    std::uint32_t total_degree() const; // 0 for the zero polynomial
    std::uint32_t degree_in(Var v) const;
    std::vector<Var> variables() const;
    bool depends_on(Var v) const { return degree_in(v) > 0; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial operator*(const Rat& c) const;
    Polynomial pow(std::uint32_t e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative(Var v) const;

    // Substitutes rational values for a subset of the variables.
    Polynomial eval_partial(const std::map<Var, Rat>& values) const;
    Rat eval(const std::map<Var, Rat>& values) const; // throws if a variable is left over

    // Dense coefficient list in v (index = exponent); entries are polynomials
    // in the remaining variables.
    std::vector<Polynomial> coefficients_in(Var v) const;
    static Polynomial from_coefficients(Var v, const std::vector<Polynomial>& coeffs);

    std::string to_string() const;

    // Assembles from arbitrary (monomial, coeff) pairs, merging duplicates.
    static Polynomial from_terms(std::vector<Term> terms);

  private:
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

// content/primitive decomposition over the integers: p == scale * primitive
// where primitive has coprime integer coefficients and positive leading one.
struct PrimitivePart {
    Polynomial primitive;
    Rat scale;
};
PrimitivePart primitive_decompose(const Polynomial& p);

// Quotient if g divides f exactly, nullopt otherwise.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

// gcd over Q[vars], returned integer-primitive with positive leading
// coefficient; gcd(0,0) = 0. Primitive pseudo-remainder sequences.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

} // namespace hitchinlab::exact

#endif
