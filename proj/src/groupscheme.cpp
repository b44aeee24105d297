#include "padic/groupscheme.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace padic {

int GroupDatum::h_dim() const {
  int s = 0;
  for (int k : factor_sizes()) s += k * k;
  return s;
}

std::optional<LatticeVector> GroupDatum::primitive_rep(long, long) const { return std::nullopt; }
std::optional<RatElement> GroupDatum::kernel_type_step(long) const { return std::nullopt; }

namespace {

template <class T>
std::vector<std::vector<T>> factor_block(const std::vector<T>& h, std::size_t off, int k) {
  std::vector<std::vector<T>> m(static_cast<std::size_t>(k), std::vector<T>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = h[off + static_cast<std::size_t>(i * k + j)];
  return m;
}

/// Inverse of a k×k matrix mod M = p^n by Gauss-Jordan on unit pivots.
void inverse_mod_block(const std::int64_t* a, std::int64_t* out, int k, std::int64_t mod) {
  if (k == 1) {
    out[0] = inv_mod(a[0], mod);
    return;
  }
  if (k == 2) {
    std::int64_t det = mod_mul(a[0], a[3], mod) - mod_mul(a[1], a[2], mod);
    std::int64_t di = inv_mod(padic::mod(det, mod), mod);
    out[0] = mod_mul(a[3], di, mod);
    out[1] = padic::mod(-mod_mul(a[1], di, mod), mod);
    out[2] = padic::mod(-mod_mul(a[2], di, mod), mod);
    out[3] = mod_mul(a[0], di, mod);
    return;
  }
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(k), std::vector<std::int64_t>(2 * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = padic::mod(a[i * k + j], mod);
    m[i][k + i] = 1;
  }
  for (int c = 0; c < k; ++c) {
    int piv = -1;
    for (int r = c; r < k; ++r)
      if (std::gcd(m[r][c], mod) == 1) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("ARITH", "matrix is not invertible modulo p");
    std::swap(m[piv], m[c]);
    std::int64_t iv = inv_mod(m[c][c], mod);
    for (auto& x : m[c]) x = mod_mul(x, iv, mod);
    for (int r = 0; r < k; ++r) {
      if (r == c || m[r][c] == 0) continue;
      std::int64_t f = m[r][c];
      for (int j = 0; j < 2 * k; ++j) m[r][j] = padic::mod(m[r][j] - mod_mul(f, m[c][j], mod), mod);
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out[i * k + j] = m[i][k + j];
}

std::int64_t det_mod_block(const std::int64_t* a, int k, std::int64_t mod) {
  if (k == 1) return padic::mod(a[0], mod);
  if (k == 2) return padic::mod(mod_mul(a[0], a[3], mod) - mod_mul(a[1], a[2], mod), mod);
  std::int64_t s = 0;
  std::vector<std::int64_t> minor(static_cast<std::size_t>((k - 1) * (k - 1)));
  for (int c = 0; c < k; ++c) {
    std::size_t idx = 0;
    for (int i = 1; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (j != c) minor[idx++] = a[i * k + j];
    std::int64_t term = mod_mul(a[c], det_mod_block(minor.data(), k - 1, mod), mod);
    s = padic::mod(c % 2 == 0 ? s + term : s - term, mod);
  }
  return s;
}

struct FactorList {
  int k = 0;
  std::vector<std::int64_t> elems;
  std::vector<std::int64_t> invs;
  std::size_t count() const { return elems.size() / static_cast<std::size_t>(k * k); }
};

/// GL_k(Z/p^m): units mod p lifted by all p·X, X mod p^{m-1}.
FactorList enumerate_factor(int k, long p, int m, std::int64_t arith_mod) {
  FactorList f;
  f.k = k;
  const int kk = k * k;
  std::vector<std::int64_t> base;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(kk), 0);
  const std::int64_t nbase = ipow64(p, kk);
  for (std::int64_t idx = 0; idx < nbase; ++idx) {
    std::int64_t t = idx;
    for (int i = 0; i < kk; ++i) {
      cur[static_cast<std::size_t>(i)] = t % p;
      t /= p;
    }
    if (det_mod_block(cur.data(), k, p) != 0) base.insert(base.end(), cur.begin(), cur.end());
  }
  const std::int64_t pm1 = ipow64(p, m - 1);
  const std::int64_t nlift = ipow64(pm1, kk);
  std::vector<std::int64_t> inv(static_cast<std::size_t>(kk));
  for (std::size_t b = 0; b < base.size(); b += static_cast<std::size_t>(kk)) {
    for (std::int64_t l = 0; l < nlift; ++l) {
      std::int64_t t = l;
      for (int i = 0; i < kk; ++i) {
        cur[static_cast<std::size_t>(i)] = base[b + static_cast<std::size_t>(i)] + p * (t % pm1);
        t /= pm1;
      }
      inverse_mod_block(cur.data(), inv.data(), k, arith_mod);
      f.elems.insert(f.elems.end(), cur.begin(), cur.end());
      f.invs.insert(f.invs.end(), inv.begin(), inv.end());
    }
  }
  return f;
}

std::int64_t encode(const std::int64_t* x, int d, std::int64_t mod) {
  std::int64_t idx = 0;
  for (int i = d - 1; i >= 0; --i) idx = idx * mod + x[i];
  return idx;
}

void decode(std::int64_t idx, int d, std::int64_t mod, std::int64_t* x) {
  for (int i = 0; i < d; ++i) {
    x[i] = idx % mod;
    idx /= mod;
  }
}

}  // namespace

RatElement rat_identity(const GroupDatum& g) {
  RatElement e(static_cast<std::size_t>(g.element_size()));
  std::size_t off = 0;
  for (int k : g.factor_sizes()) {
    for (int i = 0; i < k; ++i) e[off + static_cast<std::size_t>(i * k + i)] = 1;
    off += static_cast<std::size_t>(k * k);
  }
  return e;
}

RatElement rat_mul(const GroupDatum& g, const RatElement& a, const RatElement& b) {
  RatElement c(a.size());
  std::size_t off = 0;
  for (int k : g.factor_sizes()) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Rational s = 0;
        for (int l = 0; l < k; ++l)
          s += a[off + static_cast<std::size_t>(i * k + l)] * b[off + static_cast<std::size_t>(l * k + j)];
        c[off + static_cast<std::size_t>(i * k + j)] = s;
      }
    off += static_cast<std::size_t>(k * k);
  }
  return c;
}

RatElement rat_inverse(const GroupDatum& g, const RatElement& a) {
  RatElement c(a.size());
  std::size_t off = 0;
  for (int k : g.factor_sizes()) {
    RatMatrix inv = mat_inverse(factor_block(a, off, k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) c[off + static_cast<std::size_t>(i * k + j)] = inv[i][j];
    off += static_cast<std::size_t>(k * k);
  }
  return c;
}

Rational det_rho(const GroupDatum& g, const RatElement& h) {
  const int d = g.dim();
  RatMatrix m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
  for (int j = 0; j < d; ++j) {
    LatticeVector e(static_cast<std::size_t>(d));
    e[static_cast<std::size_t>(j)] = 1;
    LatticeVector col = g.act_rational(h, e);
    for (int i = 0; i < d; ++i) m[i][j] = col[static_cast<std::size_t>(i)];
  }
  return determinant(m);
}

RatElement random_rat_element(const GroupDatum& g, std::mt19937_64& rng, bool integral_unit, long p) {
  std::uniform_int_distribution<int> entry(-4, 4);
  RatElement h(static_cast<std::size_t>(g.element_size()));
  std::size_t off = 0;
  for (int k : g.factor_sizes()) {
    for (;;) {
      RatMatrix m(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
      for (auto& row : m)
        for (auto& x : row) x = entry(rng);
      if (!integral_unit && k == 1 && entry(rng) > 1) m[0][0] /= 2;  // some non-integral scalars
      Rational det = determinant(m);
      if (det == 0) continue;
      if (integral_unit && val_p(det, p) != 0) continue;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) h[off + static_cast<std::size_t>(i * k + j)] = m[i][j];
      break;
    }
    off += static_cast<std::size_t>(k * k);
  }
  return h;
}

GroupElement res_mul(const GroupDatum& g, const GroupElement& a, const GroupElement& b, std::int64_t mod) {
  GroupElement c(a.size());
  std::size_t off = 0;
  for (int k : g.factor_sizes()) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        std::int64_t s = 0;
        for (int l = 0; l < k; ++l)
          s = padic::mod(s + mod_mul(a[off + static_cast<std::size_t>(i * k + l)],
                                     b[off + static_cast<std::size_t>(l * k + j)], mod),
                         mod);
        c[off + static_cast<std::size_t>(i * k + j)] = s;
      }
    off += static_cast<std::size_t>(k * k);
  }
  return c;
}

GroupElement res_inverse(const GroupDatum& g, const GroupElement& a, std::int64_t mod) {
  GroupElement c(a.size());
  std::size_t off = 0;
  for (int k : g.factor_sizes()) {
    inverse_mod_block(a.data() + off, c.data() + off, k, mod);
    off += static_cast<std::size_t>(k * k);
  }
  return c;
}

GroupElement reduce_element(const GroupDatum& g, const RatElement& h, std::int64_t mod) {
  GroupElement r;
  for (const auto& x : h) r.push_back(reduce_mod(x, mod));
  (void)g;
  return r;
}

ResidueVec act_residue(const GroupDatum& g, const GroupElement& h, const ResidueVec& x, long p) {
  const std::int64_t mod = ipow64(p, x.level);
  GroupElement hinv = res_inverse(g, h, mod);
  ResidueVec out{x.level, std::vector<std::int64_t>(x.coords.size())};
  g.act(h.data(), hinv.data(), x.coords.data(), out.coords.data(), mod);
  return out;
}

Integer gl_order(int k, long p, int m) {
  Integer r = ipow(p, static_cast<unsigned long>((m - 1) * k * k));
  Integer pk = ipow(p, static_cast<unsigned long>(k));
  for (int i = 0; i < k; ++i) r *= pk - ipow(p, static_cast<unsigned long>(i));
  return r;
}

Integer group_order(const GroupDatum& g, long p, int m) {
  Integer r = 1;
  for (int k : g.factor_sizes()) r *= gl_order(k, p, m);
  return r;
}

Integer reduction_kernel_order(const GroupDatum& g, long p, int m, int m_prime) {
  if (m < m_prime || m_prime < 1) throw Error("CONFIG", "reduction levels must satisfy m >= m' >= 1");
  return group_order(g, p, m) / group_order(g, p, m_prime);
}

std::int64_t default_budget() {
  if (const char* env = std::getenv("PADIC_KERNEL_BUDGET")) {
    try {
      double v = std::stod(env);
      if (v > 0) return static_cast<std::int64_t>(v);
    } catch (const std::exception&) {
    }
    throw Error("CONFIG", "PADIC_KERNEL_BUDGET is not a positive number");
  }
  return 10'000'000;
}

void for_each_group_element(const GroupDatum& g, long p, int m, std::int64_t arith_mod,
                            std::int64_t budget,
                            const std::function<void(const std::int64_t*, const std::int64_t*)>& fn) {
  if (m < 1) throw Error("CONFIG", "group level must be at least 1");
  Integer order = group_order(g, p, m);
  if (order > Integer(static_cast<long>(budget)))
    throw Error("BUDGET", "|H(O/p^" + std::to_string(m) + ")| = " + order.get_str() + " exceeds the budget");
  std::vector<FactorList> lists;
  for (int k : g.factor_sizes()) lists.push_back(enumerate_factor(k, p, m, arith_mod));
  const std::size_t nf = lists.size();
  std::vector<std::size_t> offs(nf);
  std::size_t off = 0;
  for (std::size_t i = 0; i < nf; ++i) {
    offs[i] = off;
    off += static_cast<std::size_t>(lists[i].k * lists[i].k);
  }
  std::vector<std::int64_t> h(off), hinv(off);
  std::vector<std::size_t> idx(nf, 0);
  auto load = [&](std::size_t f) {
    const std::size_t kk = static_cast<std::size_t>(lists[f].k * lists[f].k);
    std::copy_n(lists[f].elems.begin() + static_cast<std::ptrdiff_t>(idx[f] * kk), kk, h.begin() + static_cast<std::ptrdiff_t>(offs[f]));
    std::copy_n(lists[f].invs.begin() + static_cast<std::ptrdiff_t>(idx[f] * kk), kk, hinv.begin() + static_cast<std::ptrdiff_t>(offs[f]));
  };
  for (std::size_t f = 0; f < nf; ++f) load(f);
  for (;;) {
    fn(h.data(), hinv.data());
    std::size_t f = nf;
    while (f > 0) {
      --f;
      if (++idx[f] < lists[f].count()) {
        load(f);
        break;
      }
      idx[f] = 0;
      load(f);
      if (f == 0) return;
    }
    if (nf == 0) return;
  }
}

std::vector<GroupElement> enumerate_group(const GroupDatum& g, long p, int m, std::int64_t budget) {
  std::vector<GroupElement> out;
  const std::size_t n = static_cast<std::size_t>(g.element_size());
  for_each_group_element(g, p, m, ipow64(p, m), budget, [&](const std::int64_t* h, const std::int64_t*) {
    out.emplace_back(h, h + n);
  });
  return out;
}

std::vector<GroupElement> lie_quotient_elements(const GroupDatum& g, long p) {
  const int n = g.h_dim();
  const std::int64_t total = ipow64(p, n);
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::int64_t idx = 0; idx < total; ++idx) {
    GroupElement xi(static_cast<std::size_t>(n));
    decode(idx, n, p, xi.data());
    out.push_back(std::move(xi));
  }
  return out;
}

bool lie_bijection_check(const GroupDatum& g, long p, int n, std::int64_t budget) {
  if (n < 2) throw Error("CONFIG", "bijection check needs n >= 2");
  const std::int64_t mod = ipow64(p, n);
  const std::int64_t step = ipow64(p, n - 1);
  const RatElement id = rat_identity(g);
  std::set<GroupElement> kernel;
  const std::size_t sz = static_cast<std::size_t>(g.element_size());
  for_each_group_element(g, p, n, mod, budget, [&](const std::int64_t* h, const std::int64_t*) {
    for (std::size_t i = 0; i < sz; ++i)
      if (padic::mod(h[i] - id[i].get_num().get_si(), step) != 0) return;
    kernel.emplace(h, h + sz);
  });
  std::set<GroupElement> image;
  for (const auto& xi : lie_quotient_elements(g, p)) {
    GroupElement e(sz);
    for (std::size_t i = 0; i < sz; ++i) e[i] = padic::mod(id[i].get_num().get_si() + step * xi[i], mod);
    image.insert(std::move(e));
  }
  return image.size() == static_cast<std::size_t>(ipow64(p, g.h_dim())) && image == kernel;
}

std::int64_t stabilizer_order(const GroupDatum& g, const ResidueVec& z, long p, std::int64_t budget) {
  const std::int64_t mod = ipow64(p, z.level);
  std::vector<std::int64_t> out(z.coords.size());
  std::int64_t count = 0;
  for_each_group_element(g, p, z.level, mod, budget, [&](const std::int64_t* h, const std::int64_t* hinv) {
    g.act(h, hinv, z.coords.data(), out.data(), mod);
    if (out == z.coords) ++count;
  });
  return count;
}

StabilizerReport stabilizer_report(const GroupDatum& g, const ResidueVec& z, long p, std::int64_t budget) {
  StabilizerReport r;
  r.order = stabilizer_order(g, z, p, budget);
  ResidueVec up{z.level + 1, z.coords};
  const std::int64_t mod = ipow64(p, up.level);
  const std::int64_t low = ipow64(p, z.level);
  const std::size_t sz = static_cast<std::size_t>(g.element_size());
  std::vector<std::int64_t> out(up.coords.size());
  std::set<GroupElement> image;
  for_each_group_element(g, p, up.level, mod, budget, [&](const std::int64_t* h, const std::int64_t* hinv) {
    g.act(h, hinv, up.coords.data(), out.data(), mod);
    if (out != up.coords) return;
    ++r.next_order;
    GroupElement e(sz);
    for (std::size_t i = 0; i < sz; ++i) e[i] = h[i] % low;
    image.insert(std::move(e));
  });
  r.image_order = static_cast<std::int64_t>(image.size());
  return r;
}

std::int64_t primitive_count(int d, long p, int m) {
  return ipow64(p, d * m) - ipow64(p, d * (m - 1));
}

void for_each_primitive(int d, long p, int m, const std::function<void(const std::int64_t*)>& fn) {
  const std::int64_t mod = ipow64(p, m);
  const std::int64_t total = ipow64(mod, d);
  std::vector<std::int64_t> x(static_cast<std::size_t>(d));
  for (std::int64_t idx = 0; idx < total; ++idx) {
    decode(idx, d, mod, x.data());
    bool prim = false;
    for (auto c : x)
      if (c % p != 0) {
        prim = true;
        break;
      }
    if (prim) fn(x.data());
  }
}

std::vector<ShellOrbit> orbit_decompose_shell(const GroupDatum& g, long p, int m, std::int64_t budget) {
  const int d = g.dim();
  const std::int64_t mod = ipow64(p, m);
  const std::int64_t total = ipow64(mod, d);
  if (total > budget) throw Error("BUDGET", "residue space too large for orbit decomposition");
  const Integer order = group_order(g, p, m);
  std::vector<int> owner(static_cast<std::size_t>(total), -1);
  std::vector<ShellOrbit> orbits;
  std::vector<std::int64_t> x(static_cast<std::size_t>(d)), out(static_cast<std::size_t>(d));
  for (std::int64_t idx = 0; idx < total; ++idx) {
    if (owner[static_cast<std::size_t>(idx)] >= 0) continue;
    decode(idx, d, mod, x.data());
    bool prim = std::any_of(x.begin(), x.end(), [&](std::int64_t c) { return c % p != 0; });
    if (!prim) continue;
    const int id = static_cast<int>(orbits.size());
    ShellOrbit orb;
    orb.rep = ResidueVec{m, x};
    for_each_group_element(g, p, m, mod, budget, [&](const std::int64_t* h, const std::int64_t* hinv) {
      g.act(h, hinv, x.data(), out.data(), mod);
      auto& o = owner[static_cast<std::size_t>(encode(out.data(), d, mod))];
      if (o == id) return;
      if (o >= 0) throw Error("ARITH", "orbits overlap: not a partition");
      o = id;
      ++orb.size;
    });
    Integer stab = order / Integer(static_cast<long>(orb.size));
    if (stab * Integer(static_cast<long>(orb.size)) != order) throw Error("ARITH", "orbit size does not divide |H|");
    orb.stabilizer = stab.get_si();
    orbits.push_back(std::move(orb));
  }
  std::int64_t covered = 0;
  for (const auto& o : orbits) covered += o.size;
  if (covered != primitive_count(d, p, m)) throw Error("ARITH", "orbits do not cover the primitive vectors");
  return orbits;
}

}  // namespace padic
