#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace enriques {

// Exact scalar types used throughout. All lattice arithmetic is integer;
// rationals appear only in enumeration centers, pivots and Seshadri bounds.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b)
{
    return boost::multiprecision::gcd(a, b);
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n)
{
    return boost::multiprecision::sqrt(n);
}

inline Int rat_numerator(const Rat& r)
{
    return boost::multiprecision::numerator(r);
}

inline Int rat_denominator(const Rat& r)
{
    return boost::multiprecision::denominator(r);
}

// floor of a rational; cpp_rational keeps the denominator positive.
inline Int rat_floor(const Rat& r)
{
    Int p = rat_numerator(r);
    Int q = rat_denominator(r);
    if (p >= 0)
        return p / q;
    return -((-p + q - 1) / q);
}

inline Int rat_ceil(const Rat& r)
{
    return -rat_floor(-r);
}

// Canonical text form: integers verbatim, proper fractions as "p/q".
inline std::string rat_to_string(const Rat& r)
{
    Int p = rat_numerator(r);
    Int q = rat_denominator(r);
    if (q == 1)
        return p.str();
    return p.str() + "/" + q.str();
}

} // namespace enriques
