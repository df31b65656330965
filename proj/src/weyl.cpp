#include "hitchinlab/weyl.hpp"

#include <algorithm>

namespace hitchinlab::exact {

bool WeylMono::operator<(const WeylMono& o) const {
    if (x != o.x) return x < o.x;
    return d < o.d;
}

std::string WeylMono::to_string() const {
    std::string s;
    for (const auto& [i, e] : x) {
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (e > 1) s += "^" + std::to_string(e);
    }
    for (const auto& [i, e] : d) {
        if (!s.empty()) s += "*";
        s += "d" + std::to_string(i);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

void WeylElement::add_term(const WeylMono& m, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement WeylElement::scalar(RatFunc c) {
    WeylElement w;
    w.add_term(WeylMono{}, std::move(c));
    return w;
}

WeylElement WeylElement::coordinate(std::uint32_t site) {
    WeylElement w;
    w.add_term(WeylMono{{{site, 1}}, {}}, RatFunc::constant(Rat(1)));
    return w;
}

WeylElement WeylElement::derivation(std::uint32_t site) {
    WeylElement w;
    w.add_term(WeylMono{{}, {{site, 1}}}, RatFunc::constant(Rat(1)));
    return w;
}

WeylElement WeylElement::operator-() const {
    WeylElement w(*this);
    for (auto& [m, c] : w.terms_) c = -c;
    return w;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
    WeylElement w(*this);
    for (const auto& [m, c] : o.terms_) w.add_term(m, c);
    return w;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
    WeylElement w(*this);
    for (const auto& [m, c] : o.terms_) w.add_term(m, -c);
    return w;
}

WeylElement WeylElement::operator*(const RatFunc& c) const {
    if (c.is_zero()) return {};
    WeylElement w(*this);
    for (auto& [m, k] : w.terms_) k *= c;
    return w;
}

namespace {

std::uint32_t exp_of(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& v,
                     std::uint32_t site) {
    for (const auto& [s, e] : v)
        if (s == site) return e;
    return 0;
}

void set_exp(std::vector<std::pair<std::uint32_t, std::uint32_t>>& v, std::uint32_t site,
             std::uint32_t e) {
    for (auto it = v.begin(); it != v.end(); ++it) {
        if (it->first == site) {
            if (e == 0) v.erase(it);
            else it->second = e;
            return;
        }
        if (it->first > site) {
            if (e > 0) v.insert(it, {site, e});
            return;
        }
    }
    if (e > 0) v.push_back({site, e});
}

Rat contraction_coeff(std::uint32_t b, std::uint32_t c, std::uint32_t k) {
    // k! * C(b,k) * C(c,k)
    mpz_class f, bb, cc;
    mpz_fac_ui(f.get_mpz_t(), k);
    mpz_bin_uiui(bb.get_mpz_t(), b, k);
    mpz_bin_uiui(cc.get_mpz_t(), c, k);
    return Rat(f * bb * cc);
}

} // namespace

WeylElement WeylElement::operator*(const WeylElement& o) const {
    WeylElement out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            RatFunc coeff = ca * cb;
            // sites where a's derivatives meet b's coordinates
            std::vector<std::uint32_t> shared;
            for (const auto& [s, e] : ma.d)
                if (exp_of(mb.x, s) > 0) shared.push_back(s);

            // iterate over contraction orders k_s for every shared site
            std::vector<std::uint32_t> k(shared.size(), 0);
            while (true) {
                WeylMono m;
                m.x = ma.x;
                m.d = mb.d;
                Rat factor(1);
                // merge b's x and a's d exponents, minus contractions
                for (const auto& [s, e] : mb.x) {
                    std::uint32_t ks = 0;
                    for (std::size_t idx = 0; idx < shared.size(); ++idx)
                        if (shared[idx] == s) ks = k[idx];
                    set_exp(m.x, s, exp_of(m.x, s) + e - ks);
                }
                for (const auto& [s, e] : ma.d) {
                    std::uint32_t ks = 0;
                    for (std::size_t idx = 0; idx < shared.size(); ++idx)
                        if (shared[idx] == s) ks = k[idx];
                    set_exp(m.d, s, exp_of(m.d, s) + e - ks);
                }
                for (std::size_t idx = 0; idx < shared.size(); ++idx)
                    factor *= contraction_coeff(exp_of(ma.d, shared[idx]),
                                                exp_of(mb.x, shared[idx]), k[idx]);
                out.add_term(m, coeff * RatFunc::constant(factor));

                // advance the multi-index
                std::size_t pos = 0;
                while (pos < shared.size()) {
                    std::uint32_t kmax =
                        std::min(exp_of(ma.d, shared[pos]), exp_of(mb.x, shared[pos]));
                    if (k[pos] < kmax) {
                        ++k[pos];
                        break;
                    }
                    k[pos] = 0;
                    ++pos;
                }
                if (pos == shared.size()) break;
            }
        }
    }
    return out;
}

WeylElement WeylElement::apply_to_one() const {
    WeylElement out;
    for (const auto& [m, c] : terms_)
        if (m.d.empty()) out.add_term(m, c);
    return out;
}

std::string WeylElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")*" + m.to_string();
    }
    return s;
}

} // namespace hitchinlab::exact
