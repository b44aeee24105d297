#include "padic/ratfunc.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace padic {
namespace {

using NumPoly = std::vector<Cyclotomic>;

DenFactor rpoly_mul(const DenFactor& a, const DenFactor& b) {
  DenFactor r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

DenFactor rpoly_product(const std::map<DenFactor, int>& den) {
  DenFactor r{Rational(1)};
  for (const auto& [f, m] : den)
    for (int i = 0; i < m; ++i) r = rpoly_mul(r, f);
  return r;
}

NumPoly num_mul_rpoly(const NumPoly& a, const DenFactor& f, long p) {
  if (a.empty()) return {};
  NumPoly r(a.size() + f.size() - 1, Cyclotomic::zero(p));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < f.size(); ++j)
      if (f[j] != 0) r[i + j] += a[i] * f[j];
  }
  return r;
}

Rational rpoly_eval(const DenFactor& f, const Rational& c) {
  Rational v = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * c + *it;
  return v;
}

/// Exact quotient of the polynomial part of a numerator by f, if any.
std::optional<NumPoly> try_divide(const NumPoly& a, const DenFactor& f, long p) {
  if (a.empty()) return NumPoly{};
  const std::size_t m = f.size() - 1;
  if (a.size() - 1 < m) return std::nullopt;
  NumPoly rem = a;
  NumPoly q(a.size() - m, Cyclotomic::zero(p));
  const Rational lead_inv = Rational(1) / f[m];
  for (std::size_t i = a.size() - 1; i + 1 > m; --i) {
    if (rem[i].is_zero()) {
      if (i == m) break;
      continue;
    }
    Cyclotomic coef = rem[i] * lead_inv;
    q[i - m] = coef;
    for (std::size_t j = 0; j <= m; ++j)
      if (f[j] != 0) rem[i - m + j] -= coef * f[j];
    if (i == m) break;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!rem[i].is_zero()) return std::nullopt;
  return q;
}

DenFactor normalized_factor(DenFactor f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

}  // namespace

RationalFunction::RationalFunction(long p) : p_(p) {}

RationalFunction RationalFunction::constant(long p, const Cyclotomic& c) { return monomial(p, c, 0); }

RationalFunction RationalFunction::constant(long p, const Rational& r) {
  return monomial(p, Cyclotomic(p, r), 0);
}

RationalFunction RationalFunction::monomial(long p, const Cyclotomic& c, long exponent) {
  RationalFunction f(p);
  f.low_ = exponent;
  f.num_ = {c};
  f.trim();
  return f;
}

RationalFunction RationalFunction::geometric(long p, const Rational& r, long k) {
  if (k <= 0) throw Error("ARITH", "geometric closure needs a positive step");
  RationalFunction f = constant(p, Rational(1));
  if (r == 0) return f;
  DenFactor d(static_cast<std::size_t>(k + 1));
  d[0] = 1;
  d[static_cast<std::size_t>(k)] = -r;
  f.den_[d] = 1;
  return f;
}

RationalFunction RationalFunction::polynomial(long p, long low, std::vector<Cyclotomic> coeffs) {
  RationalFunction f(p);
  f.low_ = low;
  f.num_ = std::move(coeffs);
  f.trim();
  return f;
}

void RationalFunction::trim() {
  while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
  std::size_t z = 0;
  while (z < num_.size() && num_[z].is_zero()) ++z;
  if (z > 0) {
    num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(z));
    low_ += static_cast<long>(z);
  }
  if (num_.empty()) {
    low_ = 0;
    den_.clear();
  }
}

void RationalFunction::reduce() {
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = try_divide(num_, it->first, p_);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0) it = den_.erase(it);
    else ++it;
  }
  trim();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (p_ == 0) p_ = o.p_;
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  NumPoly a = num_, b = o.num_;
  if (den_ != o.den_) {
    std::map<DenFactor, int> lcm = den_;
    for (const auto& [f, m] : o.den_) lcm[f] = std::max(lcm[f], m);
    std::map<DenFactor, int> fa, fb;
    for (const auto& [f, m] : lcm) {
      auto ia = den_.find(f);
      auto ib = o.den_.find(f);
      int ma = ia == den_.end() ? 0 : ia->second;
      int mb = ib == o.den_.end() ? 0 : ib->second;
      if (m > ma) fa[f] = m - ma;
      if (m > mb) fb[f] = m - mb;
    }
    a = num_mul_rpoly(a, rpoly_product(fa), p_);
    b = num_mul_rpoly(b, rpoly_product(fb), p_);
    den_ = std::move(lcm);
  }
  const long lo = std::min(low_, o.low_);
  const long hi = std::max(low_ + static_cast<long>(a.size()), o.low_ + static_cast<long>(b.size()));
  NumPoly sum(static_cast<std::size_t>(hi - lo), Cyclotomic::zero(p_));
  for (std::size_t i = 0; i < a.size(); ++i) sum[static_cast<std::size_t>(low_ - lo) + i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) sum[static_cast<std::size_t>(o.low_ - lo) + i] += b[i];
  num_ = std::move(sum);
  low_ = lo;
  trim();
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (p_ == 0) p_ = o.p_;
  if (is_zero() || o.is_zero()) {
    num_.clear();
    trim();
    return *this;
  }
  NumPoly r(num_.size() + o.num_.size() - 1, Cyclotomic::zero(p_));
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.num_.size(); ++j)
      if (!o.num_[j].is_zero()) r[i + j] += num_[i] * o.num_[j];
  }
  num_ = std::move(r);
  low_ += o.low_;
  for (const auto& [f, m] : o.den_) den_[f] += m;
  trim();
  reduce();
  return *this;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error("ARITH", "division by the zero rational function");
  for (const auto& c : b.num_)
    if (!c.is_rational()) throw Error("ARITH", "divisor numerator must have rational coefficients");
  const Rational lead = b.num_.front().rational();
  DenFactor q(b.num_.size());
  for (std::size_t i = 0; i < b.num_.size(); ++i) q[i] = b.num_[i].rational() / lead;
  RationalFunction r = a;
  if (r.is_zero()) return r;
  r.num_ = num_mul_rpoly(r.num_, rpoly_product(b.den_), r.p_);
  for (auto& c : r.num_) c *= Rational(1) / lead;
  r.low_ -= b.low_;
  if (q.size() > 1) r.den_[normalized_factor(q)] += 1;
  r.trim();
  r.reduce();
  return r;
}

RationalFunction RationalFunction::scaled(const Cyclotomic& c) const {
  RationalFunction r = *this;
  for (auto& x : r.num_) x *= c;
  r.trim();
  return r;
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
  return scaled(Cyclotomic(p_, c));
}

RationalFunction RationalFunction::shifted(long k) const {
  RationalFunction r = *this;
  if (!r.num_.empty()) r.low_ += k;
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return a.low_ == b.low_ && a.num_ == b.num_;
  NumPoly l = num_mul_rpoly(a.num_, rpoly_product(b.den_), a.p_ ? a.p_ : b.p_);
  NumPoly r = num_mul_rpoly(b.num_, rpoly_product(a.den_), a.p_ ? a.p_ : b.p_);
  RationalFunction x = RationalFunction::polynomial(a.p_, a.low_, std::move(l));
  RationalFunction y = RationalFunction::polynomial(b.p_, b.low_, std::move(r));
  return x.low_ == y.low_ && x.num_ == y.num_;
}

TruncatedSeries RationalFunction::to_series(long order) const {
  if (is_zero()) return TruncatedSeries(p_, order);
  const long len = order - low_ + 1;
  if (len <= 0) return TruncatedSeries(p_, order);
  DenFactor d = rpoly_product(den_);
  std::vector<Rational> inv(static_cast<std::size_t>(len));
  inv[0] = 1;
  for (long k = 1; k < len; ++k) {
    Rational s = 0;
    for (long j = 1; j <= k && j < static_cast<long>(d.size()); ++j)
      s -= d[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = s;
  }
  std::vector<Cyclotomic> c(static_cast<std::size_t>(len), Cyclotomic::zero(p_));
  for (std::size_t i = 0; i < num_.size() && static_cast<long>(i) < len; ++i) {
    if (num_[i].is_zero()) continue;
    for (long k = static_cast<long>(i); k < len; ++k)
      if (inv[static_cast<std::size_t>(k) - i] != 0) c[static_cast<std::size_t>(k)] += num_[i] * inv[static_cast<std::size_t>(k) - i];
  }
  return TruncatedSeries(p_, low_, std::move(c), order);
}

Cyclotomic RationalFunction::evaluate_at(const Rational& c) const {
  if (c == 0) throw Error("ARITH", "evaluation at t = 0 of a Laurent expression");
  RationalFunction f = *this;
  f.reduce();
  if (f.is_zero()) return Cyclotomic::zero(p_);
  const DenFactor linear{Rational(1), -Rational(1) / c};  // ∝ (t - c)
  std::map<DenFactor, int> den;
  for (const auto& [fac, m] : f.den_) {
    DenFactor g = fac;
    for (int i = 0; i < m; ++i) {
      DenFactor cur = g;
      while (rpoly_eval(cur, c) == 0) {
        auto q = try_divide(f.num_, linear, p_);
        if (!q) throw Error("POLE", "rational function has a pole at t = " + to_string(c));
        f.num_ = std::move(*q);
        // cur / (1 - t/c), exact since cur(c) = 0
        NumPoly as_num(cur.size(), Cyclotomic::zero(p_));
        for (std::size_t k = 0; k < cur.size(); ++k) as_num[k] = Cyclotomic(p_, cur[k]);
        auto qq = try_divide(as_num, linear, p_);
        DenFactor next(qq->size());
        for (std::size_t k = 0; k < qq->size(); ++k) next[k] = qq->at(k).rational();
        cur = next;
      }
      if (cur.size() > 1) den[cur] += 1;
    }
  }
  Cyclotomic v = Cyclotomic::zero(p_);
  for (std::size_t i = 0; i < f.num_.size(); ++i) {
    Rational power = 1;
    long e = f.low_ + static_cast<long>(i);
    Rational base = e >= 0 ? c : Rational(1) / c;
    for (long k = 0; k < (e >= 0 ? e : -e); ++k) power *= base;
    v += f.num_[i] * power;
  }
  Rational d = 1;
  for (const auto& [fac, m] : den)
    for (int i = 0; i < m; ++i) d *= rpoly_eval(fac, c);
  return v * (Rational(1) / d);
}

RationalFunction RationalFunction::substitute_reciprocal(const Rational& c) const {
  if (c == 0) throw Error("ARITH", "substitution t -> 0/t");
  RationalFunction r(p_);
  if (is_zero()) return r;
  // numerator: a t^e -> a c^e t^{-e}
  const long hi = low_ + static_cast<long>(num_.size()) - 1;
  NumPoly n(num_.size(), Cyclotomic::zero(p_));
  for (std::size_t i = 0; i < num_.size(); ++i) {
    long e = low_ + static_cast<long>(i);
    Rational ce = 1;
    for (long k = 0; k < (e >= 0 ? e : -e); ++k) ce *= c;
    if (e < 0) ce = Rational(1) / ce;
    n[static_cast<std::size_t>(hi - e)] = num_[i] * ce;
  }
  r.num_ = std::move(n);
  r.low_ = -hi;
  for (const auto& [f, m] : den_) {
    const std::size_t deg = f.size() - 1;
    Rational cpow = 1;
    DenFactor g(f.size());
    for (std::size_t i = 0; i <= deg; ++i) {
      g[deg - i] = f[i] * cpow;
      cpow *= c;
    }
    Rational lead = g[0];
    for (auto& x : g) x /= lead;
    for (int k = 0; k < m; ++k) {
      r = r * RationalFunction::monomial(p_, Cyclotomic(p_, Rational(1) / lead), static_cast<long>(deg));
      r.den_[g] += 1;
    }
  }
  r.trim();
  r.reduce();
  return r;
}

std::string pretty_poly(const DenFactor& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    Rational c = f[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (i == 0) os << to_string(a);
    else {
      if (a != 1) os << to_string(a) << "*";
      os << "t" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    first = false;
  }
  return first ? "0" : os.str();
}

std::string RationalFunction::pretty() const {
  std::ostringstream os;
  if (is_zero()) return "0";
  os << "(";
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i].is_zero()) continue;
    long e = low_ + static_cast<long>(i);
    if (!first) os << " + ";
    std::string c = num_[i].pretty();
    bool compound = c.find(' ') != std::string::npos;
    os << (compound ? "(" + c + ")" : c);
    if (e != 0) os << "*t" << (e != 1 ? "^" + std::to_string(e) : "");
    first = false;
  }
  os << ")";
  for (const auto& [f, m] : den_) {
    os << " / (" << pretty_poly(f) << ")";
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

RationalFunction gamma_p(long p) {
  // (1 - t)/(1 - t^{-1}/p) = -p·t(1 - t)/(1 - p·t)
  RationalFunction num = RationalFunction::polynomial(
      p, 1, {Cyclotomic(p, Rational(-p)), Cyclotomic(p, Rational(p))});
  return num * RationalFunction::geometric(p, Rational(p), 1);
}

RationalFunction gamma_p_reflected(long p) {
  RationalFunction num = RationalFunction::polynomial(p, -1, {Cyclotomic(p, Rational(-1)), Cyclotomic::one(p)});
  return num * RationalFunction::geometric(p, Rational(1, p), 1);
}

}  // namespace padic
