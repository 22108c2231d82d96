#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace pdaw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den)
{
    return Rational(num, den);
}

inline BigInt numerator_of(const Rational& r)
{
    return boost::multiprecision::numerator(r);
}

inline BigInt denominator_of(const Rational& r)
{
    return boost::multiprecision::denominator(r);
}

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r)
{
    const BigInt den = denominator_of(r);
    if (den == 1)
        return numerator_of(r).str();
    return numerator_of(r).str() + "/" + den.str();
}

inline double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

inline BigInt pow_big(const BigInt& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

} // namespace pdaw
