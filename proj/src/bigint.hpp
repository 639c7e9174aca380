#ifndef GRIDLOC_BIGINT_HPP
#define GRIDLOC_BIGINT_HPP

// Exact arithmetic substrate. Coordinates, ranks and moduli are unbounded
// integers end to end; clearances are exact rationals compared on squares.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gridloc {

using BigInt = mpz_class;
using Rational = mpq_class;

// mpz_class has no long long constructor; import 64-bit values portably.
inline BigInt from_int64(std::int64_t v) {
  std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1
                            : static_cast<std::uint64_t>(v);
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  return v < 0 ? BigInt(-r) : r;
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Nonnegative remainder, also for negative a.
inline BigInt big_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt floor_sqrt(const BigInt& a) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

// Smallest nonnegative integer f with f*f >= num/den (num >= 0, den > 0).
inline BigInt ceil_sqrt_rational(const BigInt& num, const BigInt& den) {
  if (num <= 0) return 0;
  BigInt f = floor_sqrt(ceil_div(num, den));
  while (f * f * den < num) ++f;
  while (f > 0 && (f - 1) * (f - 1) * den >= num) --f;
  return f;
}

inline std::string to_decimal(const BigInt& a) { return a.get_str(10); }

// Strict decimal integer: optional leading '-', digits only.
inline std::optional<BigInt> parse_decimal(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return std::nullopt;
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
  return BigInt(std::string(s), 10);
}

inline double rational_to_double(const Rational& q) { return q.get_d(); }

}  // namespace gridloc

#endif
