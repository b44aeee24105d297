#include "padic/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace padic {

std::int64_t euler_phi_prime_power(long p, int k) {
  if (k == 0) return 1;
  return ipow64(p, k) - ipow64(p, k - 1);
}

Cyclotomic psi(const Rational& x, long p) {
  if (!has_p_power_denominator(x, p))
    throw Error("ARITH", "psi argument " + to_string(x) + " has a denominator prime to p");
  Rational f = frac_p(x, p);
  if (f == 0) return Cyclotomic::one(p);
  const long k = val_p(Integer(f.get_den()), p);
  return Cyclotomic::root_of_unity(p, static_cast<int>(k), Integer(f.get_num()).get_si());
}

Cyclotomic::Cyclotomic(long p, const Rational& r) : p_(p), level_(0), coeffs_{r} {}

Cyclotomic::Cyclotomic(long p, int level, std::vector<Rational> coeffs)
    : p_(p), level_(level), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::reduce_raw(long p, int level, std::vector<Rational> raw) {
  const std::int64_t n = ipow64(p, level);
  std::vector<Rational> a(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < raw.size(); ++e) a[e % static_cast<std::size_t>(n)] += raw[e];
  if (level == 0) return Cyclotomic(p, 0, std::move(a));
  const std::int64_t phi = euler_phi_prime_power(p, level);
  const std::int64_t step = ipow64(p, level - 1);
  // ζ^φ = -Σ_{j=0}^{p-2} ζ^{j p^{k-1}}
  for (std::int64_t e = n - 1; e >= phi; --e) {
    if (a[e] == 0) continue;
    Rational c = a[e];
    a[e] = 0;
    for (long j = 0; j <= p - 2; ++j) a[e - phi + j * step] -= c;
  }
  a.resize(static_cast<std::size_t>(phi));
  Cyclotomic out(p, level, std::move(a));
  out.descend();
  return out;
}

void Cyclotomic::descend() {
  while (level_ >= 1) {
    if (level_ == 1) {
      for (std::size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) return;
      coeffs_.resize(1);
      level_ = 0;
      return;
    }
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
      if (j % static_cast<std::size_t>(p_) != 0 && coeffs_[j] != 0) return;
    std::vector<Rational> lower(static_cast<std::size_t>(euler_phi_prime_power(p_, level_ - 1)));
    for (std::size_t j = 0; j < lower.size(); ++j) lower[j] = coeffs_[j * static_cast<std::size_t>(p_)];
    coeffs_ = std::move(lower);
    --level_;
  }
}

Cyclotomic Cyclotomic::root_of_unity(long p, int level, std::int64_t exponent) {
  const std::int64_t n = ipow64(p, level);
  std::vector<Rational> raw(static_cast<std::size_t>(n));
  raw[static_cast<std::size_t>(mod(exponent, n))] = 1;
  return reduce_raw(p, level, std::move(raw));
}

Cyclotomic Cyclotomic::from_exponent_counts(long p, int level, std::span<const std::int64_t> counts) {
  std::vector<Rational> raw(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) raw[i] = Rational(static_cast<long>(counts[i]));
  return reduce_raw(p, level, std::move(raw));
}

Cyclotomic Cyclotomic::from_coords(long p, int level, std::vector<Rational> coords) {
  if (static_cast<std::int64_t>(coords.size()) != euler_phi_prime_power(p, level))
    throw Error("PARSE", "cyclotomic coordinate count does not match level");
  Cyclotomic c(p, level, std::move(coords));
  c.descend();
  return c;
}

bool Cyclotomic::is_zero() const { return level_ == 0 && coeffs_[0] == 0; }

const Rational& Cyclotomic::rational() const {
  if (level_ != 0) throw Error("ARITH", "cyclotomic value is not rational");
  return coeffs_[0];
}

std::vector<Rational> Cyclotomic::coords_at(int level) const {
  if (level < level_) throw Error("ARITH", "cannot lower cyclotomic level");
  std::vector<Rational> out(static_cast<std::size_t>(euler_phi_prime_power(p_ == 0 ? 2 : p_, level)));
  if (level == level_) return coeffs_;
  const std::size_t stride = level_ == 0 ? 0 : static_cast<std::size_t>(ipow64(p_, level - level_));
  if (level_ == 0) {
    out[0] = coeffs_[0];
    return out;
  }
  for (std::size_t j = 0; j < coeffs_.size(); ++j) out[j * stride] = coeffs_[j];
  return out;
}

void Cyclotomic::adopt_p(const Cyclotomic& o) {
  if (p_ == 0) p_ = o.p_;
  if (o.p_ != 0 && p_ != o.p_) throw Error("ARITH", "mixing cyclotomics of different primes");
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  adopt_p(o);
  const int lvl = std::max(level_, o.level_);
  std::vector<Rational> a = coords_at(lvl);
  std::vector<Rational> b = o.coords_at(lvl);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  level_ = lvl;
  coeffs_ = std::move(a);
  descend();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  if (r == 0) {
    level_ = 0;
    coeffs_.assign(1, Rational(0));
    return *this;
  }
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  adopt_p(o);
  if (o.level_ == 0) return *this *= o.coeffs_[0];
  if (level_ == 0) {
    Rational r = coeffs_[0];
    *this = o;
    return *this *= r;
  }
  const int lvl = std::max(level_, o.level_);
  std::vector<Rational> a = coords_at(lvl);
  std::vector<Rational> b = o.coords_at(lvl);
  std::vector<Rational> raw(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) raw[i + j] += a[i] * b[j];
  }
  *this = reduce_raw(p_, lvl, std::move(raw));
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("ARITH", "division by zero cyclotomic");
  if (level_ == 0) return Cyclotomic(p_, Rational(1) / coeffs_[0]);
  // Solve (α·) x = 1 in the power basis by Gauss-Jordan elimination.
  const std::size_t n = coeffs_.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    Cyclotomic basis = root_of_unity(p_, level_, static_cast<std::int64_t>(j));
    Cyclotomic col = *this * basis;
    std::vector<Rational> c = col.coords_at(level_);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = c[i];
  }
  m[0][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    Rational inv = Rational(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  Cyclotomic out(p_, level_, std::move(x));
  out.descend();
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.level_ != b.level_) return false;
  if (a.level_ > 0 && a.p_ != b.p_) return false;
  return a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::pretty() const {
  if (level_ == 0) return to_string(coeffs_[0]);
  std::ostringstream os;
  const std::int64_t n = ipow64(p_, level_);
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    Rational c = coeffs_[j];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (j == 0) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << "z" << n;
      if (j != 1) os << "^" << j;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

double Cyclotomic::real_approx() const {
  if (level_ == 0) return coeffs_[0].get_d();
  const double n = static_cast<double>(ipow64(p_, level_));
  double s = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    s += coeffs_[j].get_d() * std::cos(2 * std::numbers::pi * static_cast<double>(j) / n);
  return s;
}

double Cyclotomic::imag_approx() const {
  if (level_ == 0) return 0.0;
  const double n = static_cast<double>(ipow64(p_, level_));
  double s = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    s += coeffs_[j].get_d() * std::sin(2 * std::numbers::pi * static_cast<double>(j) / n);
  return s;
}

}  // namespace padic
