#include "hitchinlab/series.hpp"

#include <stdexcept>

namespace hitchinlab::exact {

Series::Series(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("Series: order must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

Series::Series(std::vector<Rat> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
    if (order < 1) throw std::invalid_argument("Series: order must be >= 1");
    coeffs_.resize(static_cast<std::size_t>(order) + 1, Rat(0));
}

Series Series::constant(const Rat& c, int order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::identity(int order) {
    Series s(order);
    s.coeffs_[1] = Rat(1);
    return s;
}

Series Series::mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d, int order) {
    if (hitchinlab::is_zero(d)) throw std::invalid_argument("Series::mobius: d = 0 (pole at the origin)");
    if (hitchinlab::is_zero(a * d - b * c)) throw std::invalid_argument("Series::mobius: degenerate (ad - bc = 0)");
    // (a t + b) * sum_k (-c/d)^k t^k / d
    Series geo(order);
    Rat r = -c / d, p(1);
    for (int k = 0; k <= order; ++k) {
        geo.coeffs_[static_cast<std::size_t>(k)] = p / d;
        p *= r;
    }
    Series lin(order);
    lin.coeffs_[0] = b;
    lin.coeffs_[1] = a;
    return lin * geo;
}

const Rat& Series::coeff(int i) const {
    if (i < 0 || i > order_) throw std::out_of_range("Series::coeff: index beyond truncation order");
    return coeffs_[static_cast<std::size_t>(i)];
}

bool Series::is_zero() const {
    for (const auto& c : coeffs_)
        if (!hitchinlab::is_zero(c)) return false;
    return true;
}

Series Series::truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("Series::truncated: cannot raise order");
    Series s(new_order);
    for (int i = 0; i <= new_order; ++i) s.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    return s;
}

Series Series::operator-() const {
    Series s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

Series Series::operator+(const Series& o) const {
    int k = std::min(order_, o.order_);
    Series s(k);
    for (int i = 0; i <= k; ++i)
        s.coeffs_[static_cast<std::size_t>(i)] =
            coeffs_[static_cast<std::size_t>(i)] + o.coeffs_[static_cast<std::size_t>(i)];
    return s;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
    int k = std::min(order_, o.order_);
    Series s(k);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j)
            s.coeffs_[static_cast<std::size_t>(i + j)] +=
                coeffs_[static_cast<std::size_t>(i)] * o.coeffs_[static_cast<std::size_t>(j)];
    return s;
}

Series Series::operator*(const Rat& c) const {
    Series s(*this);
    for (auto& x : s.coeffs_) x *= c;
    return s;
}

Series Series::operator/(const Series& o) const { return *this * o.reciprocal().truncated(std::min(order_, o.order_)); }

Series Series::derivative() const {
    if (order_ < 2) throw std::invalid_argument("Series::derivative: order would drop below 1");
    Series s(order_ - 1);
    for (int i = 1; i <= order_; ++i)
        s.coeffs_[static_cast<std::size_t>(i - 1)] = coeffs_[static_cast<std::size_t>(i)] * Rat(i);
    return s;
}

Series Series::reciprocal() const {
    if (hitchinlab::is_zero(coeffs_[0]))
        throw std::invalid_argument("Series::reciprocal: zero constant term");
    Series s(order_);
    s.coeffs_[0] = Rat(1) / coeffs_[0];
    for (int k = 1; k <= order_; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j)
            acc += coeffs_[static_cast<std::size_t>(j)] * s.coeffs_[static_cast<std::size_t>(k - j)];
        s.coeffs_[static_cast<std::size_t>(k)] = -acc / coeffs_[0];
    }
    return s;
}

namespace {

// exact square root of a rational that must be a perfect square
Rat rat_sqrt(const Rat& q) {
    if (sgn(q) < 0) throw std::domain_error("Series::sqrt: negative constant term");
    mpz_class num_root, den_root;
    mpz_sqrt(num_root.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), q.get_den().get_mpz_t());
    if (q.get_num() != num_root * num_root || q.get_den() != den_root * den_root)
        throw std::domain_error("Series::sqrt: constant term is not a rational square");
    Rat r(num_root, den_root);
    r.canonicalize();
    return r;
}

} // namespace

Series Series::sqrt() const {
    Rat r0 = rat_sqrt(coeffs_[0]);
    if (hitchinlab::is_zero(r0)) throw std::domain_error("Series::sqrt: zero constant term");
    // s_k from (s^2)_k = c_k
    Series s(order_);
    s.coeffs_[0] = r0;
    for (int k = 1; k <= order_; ++k) {
        Rat acc(0);
        for (int j = 1; j < k; ++j)
            acc += s.coeffs_[static_cast<std::size_t>(j)] * s.coeffs_[static_cast<std::size_t>(k - j)];
        s.coeffs_[static_cast<std::size_t>(k)] = (coeffs_[static_cast<std::size_t>(k)] - acc) / (Rat(2) * r0);
    }
    return s;
}

Series Series::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Series::pow: negative exponent");
    Series out = Series::constant(Rat(1), order_);
    Series base(*this);
    while (e > 0) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return out;
}

std::string Series::to_string() const {
    std::string s;
    for (int i = 0; i <= order_; ++i) {
        if (hitchinlab::is_zero(coeffs_[static_cast<std::size_t>(i)])) continue;
        if (!s.empty()) s += " + ";
        s += rat_to_string(coeffs_[static_cast<std::size_t>(i)]);
        if (i >= 1) s += "*t";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    if (s.empty()) s = "0";
    return s + " + O(t^" + std::to_string(order_ + 1) + ")";
}

Series series_compose(const Series& outer, const Series& inner) {
    if (!is_zero(inner.coeff(0)))
        throw std::invalid_argument("series_compose: inner series has nonzero constant term");
    int k = std::min(outer.order(), inner.order());
    Series acc = Series::constant(outer.coeff(0), k);
    Series power = Series::constant(Rat(1), k);
    Series in = inner.truncated(k);
    for (int i = 1; i <= k; ++i) {
        power = power * in;
        acc = acc + power * outer.coeff(i);
    }
    return acc;
}

Series series_reversion(const Series& f) {
    if (!is_zero(f.coeff(0)))
        throw std::invalid_argument("series_reversion: constant term must vanish");
    if (is_zero(f.coeff(1)))
        throw std::invalid_argument("series_reversion: linear coefficient must be invertible");
    const int k = f.order();
    // build g order by order from g(f(t)) = t
    Series g(k);
    std::vector<Rat> gc(static_cast<std::size_t>(k) + 1, Rat(0));
    gc[1] = Rat(1) / f.coeff(1);
    for (int m = 2; m <= k; ++m) {
        // coefficient of t^m in sum_{j<m} g_j f^j must cancel
        Series power = Series::constant(Rat(1), k);
        Series acc(k);
        for (int j = 1; j < m; ++j) {
            power = power * f;
            acc = acc + power * gc[static_cast<std::size_t>(j)];
        }
        // f^m has leading coefficient f1^m at t^m
        Rat f1m(1);
        for (int i = 0; i < m; ++i) f1m *= f.coeff(1);
        gc[static_cast<std::size_t>(m)] = -acc.coeff(m) / f1m;
    }
    return Series(std::move(gc), k);
}

} // namespace hitchinlab::exact
