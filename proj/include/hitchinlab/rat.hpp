#ifndef HITCHINLAB_RAT_HPP
#define HITCHINLAB_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hitchinlab {

// Exact rational scalar. mpq_class keeps gcd(|num|,den)=1 and den>0 as long
// as values are built through arithmetic or canonicalize().
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "num", "num/den" or a decimal like "-1.25".
Rat rat_from_string(const std::string& s);

// Serialized as "num" or "num/den", matching the report format.
std::string rat_to_string(const Rat& q);

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

} // namespace hitchinlab

#endif
