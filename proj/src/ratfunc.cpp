#include "hitchinlab/ratfunc.hpp"

#include <stdexcept>

namespace hitchinlab::exact {

RatFunc::RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    reduce();
}

RatFunc::RatFunc(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(Rat(1))) {}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(Rat(1));
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *exact_divide(num_, g);
            den_ = *exact_divide(den_, g);
        }
    }
    // canonical scaling: den integer-primitive with positive leading coeff
    PrimitivePart pd = primitive_decompose(den_);
    den_ = pd.primitive;
    num_ = num_ * (Rat(1) / pd.scale);
}

Polynomial RatFunc::as_polynomial() const {
    if (!den_.is_constant())
        throw std::invalid_argument("RatFunc::as_polynomial: nontrivial denominator " + den_.to_string());
    return num_ * (Rat(1) / den_.as_constant());
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    // lcm-based addition keeps the intermediate gcd inputs small
    Polynomial g = poly_gcd(den_, o.den_);
    if (g.is_constant()) return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Polynomial da = *exact_divide(den_, g);
    Polynomial db = *exact_divide(o.den_, g);
    return RatFunc(num_ * db + o.num_ * da, da * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    // cross-reduce before multiplying
    Polynomial g1 = poly_gcd(num_, o.den_);
    Polynomial g2 = poly_gcd(o.num_, den_);
    Polynomial n1 = g1.is_constant() ? num_ : *exact_divide(num_, g1);
    Polynomial d2 = g1.is_constant() ? o.den_ : *exact_divide(o.den_, g1);
    Polynomial n2 = g2.is_constant() ? o.num_ : *exact_divide(o.num_, g2);
    Polynomial d1 = g2.is_constant() ? den_ : *exact_divide(den_, g2);
    RatFunc r;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    if (r.num_.is_zero()) return RatFunc();
    PrimitivePart pd = primitive_decompose(r.den_);
    r.den_ = pd.primitive;
    r.num_ = r.num_ * (Rat(1) / pd.scale);
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    RatFunc inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    return *this * inv;
}

RatFunc RatFunc::derivative(Var v) const {
    if (den_.is_constant())
        return RatFunc(num_.derivative(v), den_);
    Polynomial n = num_.derivative(v) * den_ - num_ * den_.derivative(v);
    return RatFunc(std::move(n), den_ * den_);
}

RatFunc RatFunc::eval_partial(const std::map<Var, Rat>& values) const {
    Polynomial n = num_.eval_partial(values);
    Polynomial d = den_.eval_partial(values);
    if (d.is_zero()) throw std::domain_error("RatFunc::eval_partial: denominator vanishes");
    return RatFunc(std::move(n), std::move(d));
}

Rat RatFunc::eval(const std::map<Var, Rat>& values) const {
    RatFunc r = eval_partial(values);
    if (!r.num_.is_constant() || !r.den_.is_constant())
        throw std::invalid_argument("RatFunc::eval: unbound variable in " + r.to_string());
    return r.num_.as_constant() / r.den_.as_constant();
}

std::string RatFunc::to_string() const {
    if (den_.is_constant() && den_.as_constant() == Rat(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace hitchinlab::exact
