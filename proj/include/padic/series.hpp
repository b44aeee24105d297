#pragma once

#include <string>
#include <vector>

#include "padic/cyclotomic.hpp"

namespace padic {

/// Laurent series in t = p^{-s} with cyclotomic coefficients, known exactly
/// through t^{trunc_order}. Coefficients above the order are unknown, not zero.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(long p, long trunc_order);
  /// Coefficients for exponents lead, lead+1, ...; entries above trunc_order are dropped.
  TruncatedSeries(long p, long lead, std::vector<Cyclotomic> coeffs, long trunc_order);

  static TruncatedSeries monomial(long p, const Cyclotomic& c, long exponent, long trunc_order);

  long p() const { return p_; }
  long lead() const { return lead_; }
  long trunc_order() const { return order_; }
  const std::vector<Cyclotomic>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^e; throws if e > trunc_order.
  Cyclotomic coeff(long e) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries scaled(const Cyclotomic& c) const;
  /// Multiplication by t^k; the order shifts with it.
  TruncatedSeries shifted(long k) const;
  TruncatedSeries truncated(long order) const;

  /// Exact structural equality (same order and coefficients).
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string pretty() const;

 private:
  void normalize();

  long p_ = 0;
  long lead_ = 0;
  std::vector<Cyclotomic> coeffs_;
  long order_ = 0;
};

enum class SeriesComparison { kEqual, kNotEqual, kInconclusive };

struct SeriesEquality {
  SeriesComparison outcome;
  long order_compared;  // min of the two truncation orders
  long first_mismatch;  // exponent of the first differing coefficient, if kNotEqual
};

/// Coefficientwise comparison up to the shared truncation order. If the
/// shared order is below `confidence_order` and no mismatch was found, the
/// outcome is kInconclusive.
SeriesEquality compare_up_to_order(const TruncatedSeries& a, const TruncatedSeries& b,
                                   long confidence_order);

}  // namespace padic
