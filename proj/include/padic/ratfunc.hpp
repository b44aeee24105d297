#pragma once

#include <map>
#include <string>
#include <vector>

#include "padic/cyclotomic.hpp"
#include "padic/series.hpp"

namespace padic {

/// Polynomial in t with rational coefficients, constant term 1.
using DenFactor = std::vector<Rational>;

/// Exact rational function N(t)/D(t) in t = p^{-s}.
///
/// N is a Laurent polynomial with cyclotomic coefficients; D is a product
/// of rational polynomials with constant term 1, kept as a factor multiset
/// so that sums of values sharing denominators (the usual case: geometric
/// closures 1/(1 - r t^k)) stay small. Equality is decided exactly by cross
/// multiplication, so the representation need not be reduced.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(long p);  // zero
  static RationalFunction constant(long p, const Cyclotomic& c);
  static RationalFunction constant(long p, const Rational& r);
  static RationalFunction monomial(long p, const Cyclotomic& c, long exponent);
  /// 1/(1 - r t^k), k > 0.
  static RationalFunction geometric(long p, const Rational& r, long k);
  /// Laurent polynomial Σ coeffs[i] t^{low+i}.
  static RationalFunction polynomial(long p, long low, std::vector<Cyclotomic> coeffs);

  long p() const { return p_; }
  bool is_zero() const { return num_.empty(); }
  bool is_polynomial() const { return den_.empty(); }
  long num_low() const { return low_; }
  const std::vector<Cyclotomic>& numerator() const { return num_; }
  const std::map<DenFactor, int>& denominator() const { return den_; }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  /// Division; the divisor's numerator must have rational coefficients.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  RationalFunction scaled(const Cyclotomic& c) const;
  RationalFunction scaled(const Rational& r) const;
  /// Multiplication by t^k.
  RationalFunction shifted(long k) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// Laurent expansion around t = 0, exact through t^order.
  TruncatedSeries to_series(long order) const;

  /// Value at t = c (c ≠ 0). Removable singularities are cancelled; a
  /// genuine pole throws Error("POLE").
  Cyclotomic evaluate_at(const Rational& c) const;

  /// The function t ↦ f(c/t).
  RationalFunction substitute_reciprocal(const Rational& c) const;

  std::string pretty() const;

 private:
  void trim();
  /// Cancels denominator factors that divide the numerator exactly.
  void reduce();

  long p_ = 0;
  long low_ = 0;
  std::vector<Cyclotomic> num_;
  std::map<DenFactor, int> den_;
};

std::string pretty_poly(const DenFactor& f);

/// γ_p(s) = (1 - t)/(1 - t^{-1}/p) with t = p^{-s}.
RationalFunction gamma_p(long p);
/// γ_p(-s) = (1 - t^{-1})/(1 - t/p).
RationalFunction gamma_p_reflected(long p);

}  // namespace padic
