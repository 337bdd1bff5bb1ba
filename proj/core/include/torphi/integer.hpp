#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace torphi {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Parses an optionally signed decimal integer; throws InputError otherwise.
Integer parseInteger(std::string_view text);

inline std::string toString(const Integer& x) { return x.get_str(); }
std::string toString(const Rational& x);
std::string toString(const IntVector& v);

/// Mathematical (non-negative) residue of x modulo m > 0.
Integer mod(const Integer& x, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// gcd of all entries; 0 for the empty or zero vector.
Integer content(const IntVector& v);

/// v / content(v); the zero vector is returned unchanged.
IntVector primitivePart(const IntVector& v);

bool isZero(const IntVector& v);

/// Deterministic primality for the sizes this library handles.
bool isPrime(const Integer& n);

/// Converts to int64, throwing ValidationError when out of range.
std::int64_t toInt64(const Integer& x, std::string_view what);

}  // namespace torphi
