#ifndef MINMOD_RATIONAL_HPP
#define MINMOD_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace minmod {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// as long as every value goes through canonicalize(); the helpers below
// are the only constructors used in this codebase.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace minmod

#endif
