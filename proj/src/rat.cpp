#include "hitchinlab/rat.hpp"

namespace hitchinlab {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal literal: shift the point away
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        if (frac == 0) throw std::invalid_argument("rat_from_string: bad decimal '" + s + "'");
        mpz_class num;
        if (num.set_str(digits, 10) != 0)
            throw std::invalid_argument("rat_from_string: bad decimal '" + s + "'");
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10u, static_cast<unsigned long>(frac));
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("rat_from_string: zero denominator");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace hitchinlab
