#include "hitchinlab/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hitchinlab::exact {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, std::uint32_t exp) {
    if (!v.valid()) throw std::invalid_argument("Monomial: invalid variable");
    if (exp > 0) factors_.push_back({v, exp});
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

std::uint32_t Monomial::degree_in(Var v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) out.factors_.push_back(*a++);
        else if (b->first < a->first) out.factors_.push_back(*b++);
        else {
            out.factors_.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end()) {
        while (b != other.factors_.end() && b->first < a->first) ++b;
        if (b == other.factors_.end() || b->first != a->first || b->second < a->second) return false;
        ++a;
    }
    return true;
}

Monomial Monomial::divide_into(const Monomial& other) const {
    Monomial out;
    auto a = factors_.begin();
    for (auto b = other.factors_.begin(); b != other.factors_.end(); ++b) {
        std::uint32_t e = b->second;
        if (a != factors_.end() && a->first == b->first) {
            if (a->second > e) throw std::invalid_argument("Monomial::divide_into: not divisible");
            e -= a->second;
            ++a;
        }
        if (e > 0) out.factors_.push_back({b->first, e});
    }
    if (a != factors_.end()) throw std::invalid_argument("Monomial::divide_into: not divisible");
    return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // lex on sorted factor lists: earliest variable with differing exponent
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first.id != j->first.id)
            // the monomial holding the earlier variable is lex-larger
            return i->first.id < j->first.id ? 1 : -1;
        if (i->second != j->second) return i->second > j->second ? 1 : -1;
        ++i, ++j;
    }
    if (i != a.factors_.end()) return 1;
    if (j != b.factors_.end()) return -1;
    return 0;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// -------------------------------------------------------------- Polynomial

namespace {

struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};

} // namespace

Polynomial Polynomial::constant(const Rat& c) {
    Polynomial p;
    if (!hitchinlab::is_zero(c)) p.terms_.push_back({Monomial::one(), c});
    return p;
}

Polynomial Polynomial::variable(Var v) {
    Polynomial p;
    p.terms_.push_back({Monomial(v), Rat(1)});
    return p;
}

Polynomial Polynomial::term(const Rat& c, const Monomial& m) {
    Polynomial p;
    if (!hitchinlab::is_zero(c)) p.terms_.push_back({m, c});
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rat Polynomial::as_constant() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::invalid_argument("Polynomial::as_constant: not constant");
    return terms_[0].coeff;
}

Rat Polynomial::constant_part() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Rat(0);
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("Polynomial::leading_term: zero polynomial");
    return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
    return terms_.empty() ? 0u : terms_.front().mono.total_degree();
}

std::uint32_t Polynomial::degree_in(Var v) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(v));
    return d;
}

std::vector<Var> Polynomial::variables() const {
    std::vector<Var> out;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono.factors())
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::map<Monomial, Rat, MonoGreater> acc;
    for (auto& t : terms) {
        if (hitchinlab::is_zero(t.coeff)) continue;
        auto [it, inserted] = acc.try_emplace(std::move(t.mono), t.coeff);
        if (!inserted) it->second += t.coeff;
    }
    Polynomial p;
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!hitchinlab::is_zero(c)) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        int c = Monomial::compare(a->mono, b->mono);
        if (c > 0) out.terms_.push_back(*a++);
        else if (c < 0) out.terms_.push_back(*b++);
        else {
            Rat s = a->coeff + b->coeff;
            if (!hitchinlab::is_zero(s)) out.terms_.push_back({a->mono, s});
            ++a, ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, terms_.end());
    out.terms_.insert(out.terms_.end(), b, o.terms_.end());
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial& Polynomial::operator+=(const Polynomial& o) { return *this = *this + o; }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this = *this - o; }
Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::map<Monomial, Rat, MonoGreater> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            Rat c = a.coeff * b.coeff;
            auto [it, inserted] = acc.try_emplace(std::move(m), c);
            if (!inserted) it->second += c;
        }
    Polynomial p;
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!hitchinlab::is_zero(c)) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    if (hitchinlab::is_zero(c)) return {};
    Polynomial p(*this);
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial out = constant(Rat(1));
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1u) out = out * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return out;
}

Polynomial Polynomial::derivative(Var v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        std::uint32_t e = t.mono.degree_in(v);
        if (e == 0) continue;
        Monomial m = Monomial(v, 1).divide_into(t.mono);
        out.push_back({m, t.coeff * Rat(static_cast<long>(e))});
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::eval_partial(const std::map<Var, Rat>& values) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        Monomial rest;
        for (const auto& [v, e] : t.mono.factors()) {
            auto it = values.find(v);
            if (it == values.end()) {
                rest = rest * Monomial(v, e);
            } else {
                Rat p(1);
                for (std::uint32_t k = 0; k < e; ++k) p *= it->second;
                c *= p;
            }
        }
        out.push_back({rest, c});
    }
    return from_terms(std::move(out));
}

Rat Polynomial::eval(const std::map<Var, Rat>& values) const {
    Polynomial p = eval_partial(values);
    if (!p.is_constant())
        throw std::invalid_argument("Polynomial::eval: unbound variable " + p.to_string());
    return p.as_constant();
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const {
    std::vector<Polynomial> coeffs(degree_in(v) + 1);
    for (const auto& t : terms_) {
        std::uint32_t e = t.mono.degree_in(v);
        Monomial rest = Monomial(v, e).divide_into(t.mono);
        coeffs[e] += Polynomial::term(t.coeff, rest);
    }
    return coeffs;
}

Polynomial Polynomial::from_coefficients(Var v, const std::vector<Polynomial>& coeffs) {
    Polynomial out;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        out += coeffs[e] * Polynomial::term(Rat(1), Monomial(v, static_cast<std::uint32_t>(e)));
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
        std::string c = rat_to_string(t.coeff);
        if (!s.empty()) {
            if (c[0] == '-') {
                s += " - ";
                c = c.substr(1);
            } else {
                s += " + ";
            }
        }
        if (t.mono.is_one()) s += c;
        else if (c == "1") s += t.mono.to_string();
        else if (c == "-1") s += "-" + t.mono.to_string();
        else s += c + "*" + t.mono.to_string();
    }
    return s;
}

// ------------------------------------------------------------ gcd machinery

PrimitivePart primitive_decompose(const Polynomial& p) {
    if (p.is_zero()) return {Polynomial::zero(), Rat(0)};
    mpz_class den_lcm = 1;
    for (const auto& t : p.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& t : p.terms()) {
        mpz_class scaled = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat scale(num_gcd, den_lcm);
    scale.canonicalize();
    if (sgn(p.leading_term().coeff) < 0) scale = -scale;
    Rat inv = Rat(1) / scale;
    return {p * inv, scale};
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) return std::nullopt;
    Polynomial r = f;
    std::vector<Polynomial::Term> q;
    const auto& glt = g.leading_term();
    while (!r.is_zero()) {
        const auto& rlt = r.leading_term();
        if (!glt.mono.divides(rlt.mono)) return std::nullopt;
        Polynomial::Term t{glt.mono.divide_into(rlt.mono), rlt.coeff / glt.coeff};
        r -= g * Polynomial::term(t.coeff, t.mono);
        q.push_back(std::move(t));
    }
    return Polynomial::from_terms(std::move(q));
}

namespace {

// pseudo-remainder of a by b in the variable v (deg_v a >= deg_v b > 0)
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Var v) {
    std::vector<Polynomial> ac = a.coefficients_in(v);
    std::vector<Polynomial> bc = b.coefficients_in(v);
    const std::size_t db = bc.size() - 1;
    const Polynomial& lb = bc.back();
    while (ac.size() > db && !(ac.size() == 1 && ac[0].is_zero())) {
        while (!ac.empty() && ac.back().is_zero()) ac.pop_back();
        if (ac.size() <= db) break;
        const std::size_t da = ac.size() - 1;
        Polynomial la = ac.back();
        // r <- lb*r - la*x^(da-db)*b
        for (auto& c : ac) c = c * lb;
        for (std::size_t i = 0; i <= db; ++i) ac[da - db + i] -= la * bc[i];
        if (!ac.back().is_zero())
            throw std::logic_error("pseudo_remainder: leading term failed to cancel");
        ac.pop_back();
    }
    while (!ac.empty() && ac.back().is_zero()) ac.pop_back();
    Polynomial out;
    for (std::size_t e = 0; e < ac.size(); ++e)
        out += ac[e] * Polynomial::term(Rat(1), Monomial(v, static_cast<std::uint32_t>(e)));
    return out;
}

Polynomial gcd_many(const std::vector<Polynomial>& ps) {
    Polynomial g;
    for (const auto& p : ps) {
        g = poly_gcd(g, p);
        if (!g.is_zero() && g.is_constant()) return Polynomial::constant(Rat(1));
    }
    return g;
}

} // namespace

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero()) return Polynomial::zero();
    if (f.is_zero()) return primitive_decompose(g).primitive;
    if (g.is_zero()) return primitive_decompose(f).primitive;
    if (f.is_constant() || g.is_constant()) return Polynomial::constant(Rat(1));

    Polynomial a = primitive_decompose(f).primitive;
    Polynomial b = primitive_decompose(g).primitive;

    // main variable: present in at least one; prefer one present in both with
    // small combined degree so the PRS stays short
    std::vector<Var> va = a.variables(), vb = b.variables();
    Var main{};
    std::uint32_t best = UINT32_MAX;
    for (Var v : va) {
        std::uint32_t da = a.degree_in(v), db = b.degree_in(v);
        if (db == 0) continue;
        if (da + db < best) best = da + db, main = v;
    }
    if (!main.valid()) return Polynomial::constant(Rat(1)); // disjoint variable sets

    std::vector<Polynomial> ac = a.coefficients_in(main);
    std::vector<Polynomial> bc = b.coefficients_in(main);
    Polynomial cont_a = gcd_many(ac);
    Polynomial cont_b = gcd_many(bc);
    Polynomial cont = poly_gcd(cont_a, cont_b);

    auto strip = [](const Polynomial& p, const Polynomial& c) {
        auto q = exact_divide(p, c);
        if (!q) throw std::logic_error("poly_gcd: content division failed");
        return *q;
    };
    a = strip(a, cont_a);
    b = strip(b, cont_b);
    if (a.degree_in(main) < b.degree_in(main)) std::swap(a, b);

    while (!b.is_zero()) {
        if (b.degree_in(main) == 0) {
            // a nonzero constant (in the main variable) ends the sequence
            a = Polynomial::constant(Rat(1));
            b = Polynomial::zero();
            break;
        }
        Polynomial r = pseudo_remainder(a, b, main);
        a = std::move(b);
        if (r.is_zero()) {
            b = Polynomial::zero();
        } else {
            std::vector<Polynomial> rc = r.coefficients_in(main);
            b = strip(r, gcd_many(rc));
        }
    }
    Polynomial result = cont * primitive_decompose(a).primitive;
    return primitive_decompose(result).primitive;
}

} // namespace hitchinlab::exact
