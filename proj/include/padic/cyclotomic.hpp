#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "padic/rational.hpp"

namespace padic {

/// Exact element of Q(ζ_{p^k}).
///
/// Stored in the power basis {ζ^j : 0 <= j < φ(p^k)} modulo the p^k-th
/// cyclotomic polynomial. Every value is kept at the smallest level that
/// contains it, so two elements are equal iff level and coordinates agree.
class Cyclotomic {
 public:
  Cyclotomic() = default;  // rational zero, p unset (adopts the partner's p)
  Cyclotomic(long p, const Rational& r);
  static Cyclotomic zero(long p) { return Cyclotomic(p, Rational(0)); }
  static Cyclotomic one(long p) { return Cyclotomic(p, Rational(1)); }

  /// ζ_{p^k}^e.
  static Cyclotomic root_of_unity(long p, int level, std::int64_t exponent);

  /// Σ_r counts[r]·ζ_{p^k}^r with counts.size() == p^k.
  static Cyclotomic from_exponent_counts(long p, int level, std::span<const std::int64_t> counts);

  /// Coordinates at an explicit level (no descent); used by the serializer.
  static Cyclotomic from_coords(long p, int level, std::vector<Rational> coords);

  long p() const { return p_; }
  int level() const { return level_; }
  const std::vector<Rational>& coords() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return level_ == 0; }
  /// The rational value; throws unless is_rational().
  const Rational& rational() const;

  /// Coordinates after lifting to a level >= level().
  std::vector<Rational> coords_at(int level) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

  Cyclotomic inverse() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Human-readable root-of-unity expression, e.g. "1/2 - 3/4*z8^2".
  std::string pretty() const;
  /// Real and imaginary parts as doubles, for display only.
  double real_approx() const;
  double imag_approx() const;

 private:
  Cyclotomic(long p, int level, std::vector<Rational> coeffs);
  /// Reduces an exponent vector of length p^k (or longer) and descends.
  static Cyclotomic reduce_raw(long p, int level, std::vector<Rational> raw);
  void descend();
  void adopt_p(const Cyclotomic& o);

  long p_ = 0;
  int level_ = 0;
  std::vector<Rational> coeffs_{Rational(0)};
};

/// φ(p^k).
std::int64_t euler_phi_prime_power(long p, int k);

/// ψ(x) = exp(2πi·{x}_p); x must have a p-power denominator.
Cyclotomic psi(const Rational& x, long p);

}  // namespace padic
