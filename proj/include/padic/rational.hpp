#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace padic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Valuations are plain integers; zero has valuation kInfinity.
constexpr long kInfinity = std::numeric_limits<long>::max();

/// Base class for all errors raised by the library. `code()` is a short
/// stable identifier (e.g. "NOT_IN_U") that the CLI and reports echo.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

bool is_prime(long p);
void require_prime(long p);

/// Exponent of p in x; kInfinity for x = 0.
long val_p(const Rational& x, long p);
long val_p(const Integer& x, long p);
long val_p(std::int64_t x, long p);

/// p-adic fractional part {x}_p, the unique r in [0,1) with p-power
/// denominator such that x - r lies in Z_(p).
Rational frac_p(const Rational& x, long p);

/// True iff the reduced denominator of x is a power of p (including 1).
bool has_p_power_denominator(const Rational& x, long p);

Integer ipow(long base, unsigned long exp);
Rational rpow(long base, long exp);

/// x mod m in [0, m) for m > 0.
inline std::int64_t mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

/// a·b mod m for residues below 2^62.
inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

/// x mod m in [0, m) for a 128-bit intermediate.
inline std::int64_t mod_reduce128(__int128 x, std::int64_t m) {
  __int128 r = x % m;
  return static_cast<std::int64_t>(r < 0 ? r + m : r);
}

/// Inverse of a unit u modulo m (gcd(u, m) = 1 required).
std::int64_t inv_mod(std::int64_t u, std::int64_t m);

/// Residue of a p-integral rational modulo m = p^k.
std::int64_t reduce_mod(const Rational& x, std::int64_t m);

std::int64_t ipow64(std::int64_t base, int exp);

/// "num/den" (or "num" when den = 1), decimal.
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view s);

}  // namespace padic
