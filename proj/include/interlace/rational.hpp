#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "interlace/errors.hpp"

namespace interlace {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (the backing type canonicalizes on every operation).
using BigRational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigRational& r) { return r.sign(); }
inline int sign_of(const BigInt& n) { return n.sign(); }

inline BigInt num(const BigRational& r) { return numerator(r); }
inline BigInt den(const BigRational& r) { return denominator(r); }

// 2^e as an exact integer; e >= 0.
inline BigInt pow2(long e) {
    BigInt one = 1;
    return one << e;
}

// 2^e as an exact rational; e may be negative.
inline BigRational pow2_rational(long e) {
    if (e >= 0) return BigRational(pow2(e));
    return BigRational(1, pow2(-e));
}

// Parses "p", "-p", or "p/q" (q > 0 after an optional leading sign on p).
BigRational parse_rational(const std::string& text);

// "p" when the denominator is 1, else "p/q".
std::string rational_str(const BigRational& r);

// Smallest integer b with b^root >= value; value >= 0, root >= 1.
BigInt ceil_nth_root(const BigInt& value, unsigned root);

} // namespace interlace
