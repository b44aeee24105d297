#include "padic/lattice.hpp"

#include <algorithm>

namespace padic {

long vec_valuation(const LatticeVector& y, long p) {
  long v = kInfinity;
  for (const auto& c : y) v = std::min(v, val_p(c, p));
  return v;
}

Rational vec_norm(const LatticeVector& y, long p) {
  long v = vec_valuation(y, p);
  if (v == kInfinity) return Rational(0);
  return rpow(p, -v);
}

Rational pairing(const LatticeVector& z, const GramMatrix& g, const LatticeVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (g[i][j] != 0 && y[j] != 0) s += z[i] * g[i][j] * y[j];
  }
  return s;
}

bool dual_membership(const LatticeVector& y, const GramMatrix& g, long p) {
  for (const auto& c : mat_vec(g, y))
    if (val_p(c, p) < 0) return false;
  return true;
}

ResidueVec reduce(const LatticeVector& y, long p, int level) {
  ResidueVec r;
  r.level = level;
  const std::int64_t m = ipow64(p, level);
  for (const auto& c : y) {
    if (val_p(c, p) < 0) throw Error("ARITH", "reduction of a non-integral vector");
    r.coords.push_back(reduce_mod(c, m));
  }
  return r;
}

LatticeVector lift(const ResidueVec& r) {
  LatticeVector y;
  for (auto c : r.coords) y.emplace_back(static_cast<long>(c));
  return y;
}

LatticeVector scale(const LatticeVector& y, const Rational& c) {
  LatticeVector r = y;
  for (auto& x : r) x *= c;
  return r;
}

LatticeVector primitive_part(const LatticeVector& y, long p) {
  long v = vec_valuation(y, p);
  if (v == kInfinity) throw Error("ARITH", "primitive part of the zero vector");
  return scale(y, rpow(p, -v));
}

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix c(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

LatticeVector mat_vec(const RatMatrix& a, const LatticeVector& v) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0 && v[j] != 0) r[i] += a[i][j] * v[j];
  return r;
}

RatMatrix transpose(const RatMatrix& a) {
  if (a.empty()) return {};
  RatMatrix t(a[0].size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RatMatrix mat_inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix m = a;
  RatMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw Error("ARITH", "singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational f = Rational(1) / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational g = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= g * m[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

Rational determinant(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix m = a;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det;
}

bool is_symmetric(const RatMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) return false;
  return true;
}

SmithForm smith_local(const RatMatrix& a, long p) {
  const std::size_t r = a.size(), c = r == 0 ? 0 : a[0].size();
  RatMatrix d = a;
  SmithForm out;
  out.U = identity_matrix(r);
  out.V = identity_matrix(c);
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    long best = kInfinity;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        long v = val_p(d[i][j], p);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best == kInfinity) break;
    std::swap(d[t], d[bi]);
    std::swap(out.U[t], out.U[bi]);
    for (std::size_t i = 0; i < r; ++i) std::swap(d[i][t], d[i][bj]);
    for (std::size_t i = 0; i < c; ++i) std::swap(out.V[i][t], out.V[i][bj]);
    const Rational unit_inv = rpow(p, best) / d[t][t];
    for (auto& x : d[t]) x *= unit_inv;
    for (auto& x : out.U[t]) x *= unit_inv;
    for (std::size_t i = t + 1; i < r; ++i) {
      if (d[i][t] == 0) continue;
      Rational f = d[i][t] / d[t][t];
      for (std::size_t j = 0; j < c; ++j) d[i][j] -= f * d[t][j];
      for (std::size_t j = 0; j < r; ++j) out.U[i][j] -= f * out.U[t][j];
    }
    for (std::size_t j = t + 1; j < c; ++j) {
      if (d[t][j] == 0) continue;
      Rational f = d[t][j] / d[t][t];
      for (std::size_t i = 0; i < r; ++i) d[i][j] -= f * d[i][t];
      for (std::size_t i = 0; i < c; ++i) out.V[i][j] -= f * out.V[i][t];
    }
    out.exponents.push_back(best);
  }
  return out;
}

namespace {

void require_integral_nondegenerate(const GramMatrix& g, long p) {
  for (const auto& row : g)
    for (const auto& x : row)
      if (val_p(x, p) < 0) throw Error("CONFIG", "Gram matrix is not integral at p");
  if (determinant(g) == 0) throw Error("CONFIG", "Gram matrix is degenerate");
}

}  // namespace

std::vector<long> elementary_divisor_exponents(const GramMatrix& g, long p) {
  require_integral_nondegenerate(g, p);
  return smith_local(g, p).exponents;
}

long subspace_depth(const std::vector<LatticeVector>& basis, const GramMatrix& g, long p) {
  if (basis.empty()) throw Error("CONFIG", "subspace_depth of the zero subspace");
  const std::size_t d = g.size(), r = basis.size();
  RatMatrix b(d, std::vector<Rational>(r));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < d; ++i) b[i][j] = basis[j][i];
  SmithForm sf = smith_local(mat_mul(g, b), p);
  if (sf.rank() != r) throw Error("CONFIG", "subspace basis is linearly dependent");
  RatMatrix bv = mat_mul(b, sf.V);
  long best = kInfinity;
  for (std::size_t j = 0; j < r; ++j) {
    LatticeVector col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = bv[i][j];
    best = std::min(best, vec_valuation(col, p) - sf.exponents[j]);
  }
  return best;
}

long line_depth_scan(const LatticeVector& v, const GramMatrix& g, long p, int search_level) {
  const long nu = vec_valuation(v, p);
  if (nu == kInfinity) throw Error("CONFIG", "line through the zero vector");
  for (long k = -search_level; k <= search_level; ++k) {
    if (dual_membership(scale(v, rpow(p, k)), g, p)) {
      if (k == -search_level)
        throw Error("BUDGET", "depth scan reached its search bound without certifying minimality");
      return k + nu;
    }
  }
  throw Error("BUDGET", "depth scan found no admissible multiple within the search bound");
}

long pairing_depth(const GramMatrix& g, long p) {
  auto e = elementary_divisor_exponents(g, p);
  return e.empty() ? 0 : *std::max_element(e.begin(), e.end());
}

LocalLattice::LocalLattice(std::size_t d, long p) : d_(d), p_(p) {}

void LocalLattice::add_scaled_standard(long m) {
  std::vector<LatticeVector> gens = basis_;
  for (std::size_t i = 0; i < d_; ++i) {
    LatticeVector e(d_);
    e[i] = rpow(p_, m);
    gens.push_back(e);
  }
  rebuild(std::move(gens));
}

void LocalLattice::rebuild(std::vector<LatticeVector> gens) {
  RatMatrix a(d_, std::vector<Rational>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < d_; ++i) a[i][j] = gens[j][i];
  SmithForm sf = smith_local(a, p_);
  RatMatrix uinv = mat_inverse(sf.U);
  basis_.clear();
  for (std::size_t j = 0; j < sf.rank(); ++j) {
    LatticeVector col(d_);
    for (std::size_t i = 0; i < d_; ++i) col[i] = uinv[i][j] * rpow(p_, sf.exponents[j]);
    basis_.push_back(col);
  }
  if (basis_.size() == d_) {
    RatMatrix b(d_, std::vector<Rational>(d_));
    for (std::size_t j = 0; j < d_; ++j)
      for (std::size_t i = 0; i < d_; ++i) b[i][j] = basis_[j][i];
    inverse_ = mat_inverse(b);
  }
}

bool LocalLattice::contains(const LatticeVector& v) const {
  if (basis_.size() == d_) {
    for (const auto& x : mat_vec(inverse_, v))
      if (val_p(x, p_) < 0) return false;
    return true;
  }
  // Same rank and same index means the lattice did not grow.
  auto index_of = [&](const std::vector<LatticeVector>& gens) {
    RatMatrix a(d_, std::vector<Rational>(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t i = 0; i < d_; ++i) a[i][j] = gens[j][i];
    SmithForm sf = smith_local(a, p_);
    long s = 0;
    for (long e : sf.exponents) s += e;
    return std::make_pair(sf.rank(), s);
  };
  if (basis_.empty()) return vec_valuation(v, p_) == kInfinity;
  std::vector<LatticeVector> gens = basis_;
  gens.push_back(v);
  return index_of(gens) == index_of(basis_);
}

bool LocalLattice::insert(const LatticeVector& v) {
  if (contains(v)) return false;
  std::vector<LatticeVector> gens = basis_;
  gens.push_back(v);
  rebuild(std::move(gens));
  return true;
}

long LocalLattice::dual_min_valuation(const GramMatrix& g) const {
  if (basis_.size() != d_) throw Error("UNBOUNDED", "dual of a lattice that is not full rank is unbounded");
  RatMatrix b(d_, std::vector<Rational>(d_));
  for (std::size_t j = 0; j < d_; ++j)
    for (std::size_t i = 0; i < d_; ++i) b[i][j] = basis_[j][i];
  RatMatrix m = mat_inverse(mat_mul(transpose(b), g));
  long best = kInfinity;
  for (const auto& row : m)
    for (const auto& x : row) best = std::min(best, val_p(x, p_));
  return best;
}

}  // namespace padic
