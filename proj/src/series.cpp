#include "padic/series.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

TruncatedSeries::TruncatedSeries(long p, long trunc_order) : p_(p), order_(trunc_order) {}

TruncatedSeries::TruncatedSeries(long p, long lead, std::vector<Cyclotomic> coeffs, long trunc_order)
    : p_(p), lead_(lead), coeffs_(std::move(coeffs)), order_(trunc_order) {
  normalize();
}

TruncatedSeries TruncatedSeries::monomial(long p, const Cyclotomic& c, long exponent, long trunc_order) {
  return TruncatedSeries(p, exponent, {c}, trunc_order);
}

void TruncatedSeries::normalize() {
  if (lead_ > order_) {
    coeffs_.clear();
  } else if (static_cast<long>(coeffs_.size()) > order_ - lead_ + 1) {
    coeffs_.resize(static_cast<std::size_t>(order_ - lead_ + 1));
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t z = 0;
  while (z < coeffs_.size() && coeffs_[z].is_zero()) ++z;
  if (z > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(z));
    lead_ += static_cast<long>(z);
  }
  if (coeffs_.empty()) lead_ = 0;
}

Cyclotomic TruncatedSeries::coeff(long e) const {
  if (e > order_) throw Error("TRUNCATED", "coefficient above truncation order requested");
  if (e < lead_ || e >= lead_ + static_cast<long>(coeffs_.size())) return Cyclotomic::zero(p_);
  return coeffs_[static_cast<std::size_t>(e - lead_)];
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const long order = std::min(a.order_, b.order_);
  const long p = a.p_ != 0 ? a.p_ : b.p_;
  if (a.is_zero() && b.is_zero()) return TruncatedSeries(p, order);
  long lo;
  if (a.is_zero()) lo = b.lead_;
  else if (b.is_zero()) lo = a.lead_;
  else lo = std::min(a.lead_, b.lead_);
  if (lo > order) return TruncatedSeries(p, order);
  std::vector<Cyclotomic> c(static_cast<std::size_t>(order - lo + 1), Cyclotomic::zero(p));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    long e = a.lead_ + static_cast<long>(i);
    if (e <= order) c[static_cast<std::size_t>(e - lo)] += a.coeffs_[i];
  }
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
    long e = b.lead_ + static_cast<long>(i);
    if (e <= order) c[static_cast<std::size_t>(e - lo)] += b.coeffs_[i];
  }
  return TruncatedSeries(p, lo, std::move(c), order);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const long p = a.p_ != 0 ? a.p_ : b.p_;
  // The product is known through min(order_a + lead_b, order_b + lead_a).
  if (a.is_zero() || b.is_zero()) {
    // A zero series is O(t^{order+1}); use that as its effective lead.
    const long la = a.is_zero() ? a.order_ + 1 : a.lead_;
    const long lb = b.is_zero() ? b.order_ + 1 : b.lead_;
    return TruncatedSeries(p, std::min(a.order_ + lb, b.order_ + la));
  }
  const long order = std::min(a.order_ + b.lead_, b.order_ + a.lead_);
  const long lo = a.lead_ + b.lead_;
  if (lo > order) return TruncatedSeries(p, order);
  std::vector<Cyclotomic> c(static_cast<std::size_t>(order - lo + 1), Cyclotomic::zero(p));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      long e = lo + static_cast<long>(i + j);
      if (e > order) break;
      c[static_cast<std::size_t>(e - lo)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return TruncatedSeries(p, lo, std::move(c), order);
}

TruncatedSeries TruncatedSeries::scaled(const Cyclotomic& c) const {
  TruncatedSeries r = *this;
  for (auto& x : r.coeffs_) x *= c;
  r.normalize();
  return r;
}

TruncatedSeries TruncatedSeries::shifted(long k) const {
  TruncatedSeries r = *this;
  if (!r.coeffs_.empty()) r.lead_ += k;
  r.order_ += k;
  return r;
}

TruncatedSeries TruncatedSeries::truncated(long order) const {
  TruncatedSeries r = *this;
  r.order_ = std::min(order, order_);
  r.normalize();
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.order_ == b.order_ && a.lead_ == b.lead_ && a.coeffs_ == b.coeffs_;
}

std::string TruncatedSeries::pretty() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    long e = lead_ + static_cast<long>(i);
    if (!first) os << " + ";
    std::string c = coeffs_[i].pretty();
    bool compound = c.find_first_of("+ ") != std::string::npos || (c.size() > 1 && c.find('-', 1) != std::string::npos);
    if (compound) os << "(" << c << ")";
    else os << c;
    if (e != 0) os << "*t" << (e != 1 ? "^" + std::to_string(e) : "");
    first = false;
  }
  if (first) os << "0";
  os << " + O(t^" << order_ + 1 << ")";
  return os.str();
}

SeriesEquality compare_up_to_order(const TruncatedSeries& a, const TruncatedSeries& b,
                                   long confidence_order) {
  const long order = std::min(a.trunc_order(), b.trunc_order());
  long lo = std::min(a.is_zero() ? order : a.lead(), b.is_zero() ? order : b.lead());
  for (long e = lo; e <= order; ++e) {
    if (a.coeff(e) != b.coeff(e)) return {SeriesComparison::kNotEqual, order, e};
  }
  if (order < confidence_order) return {SeriesComparison::kInconclusive, order, 0};
  return {SeriesComparison::kEqual, order, 0};
}

}  // namespace padic
