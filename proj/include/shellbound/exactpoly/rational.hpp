#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace shellbound {

using BigInt = mpz_class;
// mpq_class keeps values canonical (lowest terms, positive denominator)
// after every arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

// Always "p/q", including q == 1.
std::string to_fraction_string(const Rational& r);

// Accepts "p/q" or "p".
Rational parse_rational(const std::string& text);

bool fits_int64(const BigInt& v);
std::int64_t to_int64(const BigInt& v);
static_assert(sizeof(long) == sizeof(std::int64_t), "mpz long conversions assume LP64");
inline BigInt from_int64(std::int64_t v) { return BigInt(static_cast<long>(v)); }

}  // namespace shellbound
