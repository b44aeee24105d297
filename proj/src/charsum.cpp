#include "padic/charsum.hpp"

#include <set>
#include <sstream>

namespace padic {

std::string vector_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

namespace {

std::vector<std::int64_t> residues(const LatticeVector& v, std::int64_t mod) {
  std::vector<std::int64_t> r;
  for (const auto& c : v) r.push_back(reduce_mod(c, mod));
  return r;
}

std::int64_t dot_mod(const std::int64_t* a, const std::vector<std::int64_t>& b, std::int64_t mod) {
  __int128 s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return mod_reduce128(s, mod);
}

std::int64_t encode_mod_p(const std::int64_t* h, int n, long p) {
  std::int64_t idx = 0;
  for (int i = n - 1; i >= 0; --i) idx = idx * p + h[i] % p;
  return idx;
}

struct V0Lattice {
  LocalLattice lattice;
  long depth;
};

/// Lattice spanned by orbit points of z mod p^m together with p^m V(O).
V0Lattice v0_lattice(const GroupDatum& g, long p, const LatticeVector& z, int m, std::int64_t budget) {
  const int d = g.dim();
  const std::int64_t mod = ipow64(p, m);
  std::vector<std::int64_t> zr = residues(z, mod), out(static_cast<std::size_t>(d));
  std::set<std::vector<std::int64_t>> points;
  for_each_group_element(g, p, m, mod, budget, [&](const std::int64_t* h, const std::int64_t* hinv) {
    g.act(h, hinv, zr.data(), out.data(), mod);
    points.insert(out);
  });
  V0Lattice v{LocalLattice(static_cast<std::size_t>(d), p), 0};
  v.lattice.add_scaled_standard(m);
  for (const auto& pt : points) {
    LatticeVector lv;
    for (auto c : pt) lv.emplace_back(static_cast<long>(c));
    v.lattice.insert(lv);
  }
  v.depth = v.lattice.dual_min_valuation(g.gram());
  return v;
}

V0Lattice stable_v0(const GroupDatum& g, long p, const LatticeVector& z, int m, std::int64_t budget) {
  V0Lattice a = v0_lattice(g, p, z, m, budget);
  V0Lattice b = v0_lattice(g, p, z, m + 1, budget);
  if (a.depth != b.depth)
    throw Error("UNSTABLE", "orbit lattice of " + vector_string(z) + " did not stabilize between levels " +
                                std::to_string(m) + " and " + std::to_string(m + 1));
  return b;
}

}  // namespace

Cyclotomic group_char_sum(const GroupDatum& g, long p, const LatticeVector& z, const LatticeVector& y, int n,
                          std::int64_t budget, CharSumMethod method) {
  if (n < 1) throw Error("CONFIG", "character sum level must be at least 1");
  if (vec_valuation(z, p) < 0) throw Error("CONFIG", "Z must be integral");
  const long v = vec_valuation(y, p);
  if (v < 0) throw Error("CONFIG", "Y must be integral for a level-n character sum");
  const int d = g.dim();
  if (v == kInfinity || v >= n) {
    Integer order = group_order(g, p, n);
    if (order > Integer(static_cast<long>(budget))) throw Error("BUDGET", "group order exceeds the budget");
    return Cyclotomic(p, Rational(order));
  }
  const int big_n = static_cast<int>(n - v);  // ψ(<hZ, Y₀>/p^N) with Y = p^v Y₀
  const std::int64_t mod_n = ipow64(p, n);
  const std::int64_t mod_N = ipow64(p, big_n);
  const LatticeVector y0 = primitive_part(y, p);
  const std::vector<std::int64_t> w = residues(mat_vec(g.gram(), y0), mod_N);
  const std::vector<std::int64_t> zr = residues(z, mod_n);
  std::vector<std::int64_t> out(static_cast<std::size_t>(d));

  if (method == CharSumMethod::kAuto) {
    if (group_order(g, p, n) <= Integer(static_cast<long>(budget))) method = CharSumMethod::kDirect;
    else if (n >= 2) method = CharSumMethod::kLayered;
    else throw Error("BUDGET", "group order exceeds the budget");
  }
  if (method == CharSumMethod::kDirect || n == 1) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(mod_N), 0);
    for_each_group_element(g, p, n, mod_n, budget, [&](const std::int64_t* h, const std::int64_t* hinv) {
      g.act(h, hinv, zr.data(), out.data(), mod_n);
      ++counts[static_cast<std::size_t>(dot_mod(out.data(), w, mod_N))];
    });
    return Cyclotomic::from_exponent_counts(p, big_n, counts);
  }

  // Layered evaluation over H(O/p^{n-1}).
  const int hd = g.h_dim();
  const std::int64_t keys = ipow64(p, hd);
  const auto lie = lie_quotient_elements(g, p);
  std::vector<std::vector<std::int64_t>> dz;  // dρ(ξ)Z̄ mod p
  {
    std::vector<std::int64_t> zbar = residues(z, p), tmp(static_cast<std::size_t>(d));
    for (const auto& xi : lie) {
      g.lie_act(xi.data(), zbar.data(), tmp.data(), p);
      dz.push_back(tmp);
    }
  }
  const std::vector<std::int64_t> wbar = residues(mat_vec(g.gram(), y0), p);
  std::vector<std::vector<std::int64_t>> hist(static_cast<std::size_t>(keys));
  std::vector<std::optional<Cyclotomic>> lie_sum(static_cast<std::size_t>(keys));
  std::vector<std::int64_t> tmp(static_cast<std::size_t>(d));
  for_each_group_element(g, p, n - 1, mod_n, budget, [&](const std::int64_t* h, const std::int64_t* hinv) {
    const std::int64_t key = encode_mod_p(h, hd, p);
    auto& hk = hist[static_cast<std::size_t>(key)];
    if (hk.empty()) {
      hk.assign(static_cast<std::size_t>(mod_N), 0);
      if (v >= 1) {
        lie_sum[static_cast<std::size_t>(key)] = Cyclotomic(p, Rational(ipow(p, static_cast<unsigned long>(hd))));
      } else {
        std::vector<std::int64_t> c(static_cast<std::size_t>(p), 0);
        for (const auto& dv : dz) {
          g.act(h, hinv, dv.data(), tmp.data(), p);
          ++c[static_cast<std::size_t>(dot_mod(tmp.data(), wbar, p))];
        }
        lie_sum[static_cast<std::size_t>(key)] = Cyclotomic::from_exponent_counts(p, 1, c);
      }
    }
    g.act(h, hinv, zr.data(), out.data(), mod_n);
    ++hk[static_cast<std::size_t>(dot_mod(out.data(), w, mod_N))];
  });
  Cyclotomic total = Cyclotomic::zero(p);
  for (std::int64_t key = 0; key < keys; ++key) {
    const auto& hk = hist[static_cast<std::size_t>(key)];
    if (hk.empty()) continue;
    const Cyclotomic& l = *lie_sum[static_cast<std::size_t>(key)];
    if (l.is_zero()) continue;
    total += l * Cyclotomic::from_exponent_counts(p, big_n, hk);
  }
  return total;
}

bool lie_character_trivial(const GroupDatum& g, long p, const std::int64_t* zbar, const std::int64_t* ybar) {
  const int hd = g.h_dim(), d = g.dim();
  const GramMatrix gram = g.gram();
  std::vector<std::int64_t> gy(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    __int128 s = 0;
    for (int j = 0; j < d; ++j) s += static_cast<__int128>(reduce_mod(gram[i][j], p)) * ybar[j];
    gy[static_cast<std::size_t>(i)] = mod_reduce128(s, p);
  }
  std::vector<std::int64_t> xi(static_cast<std::size_t>(hd), 0), out(static_cast<std::size_t>(d));
  for (int b = 0; b < hd; ++b) {
    std::fill(xi.begin(), xi.end(), 0);
    xi[static_cast<std::size_t>(b)] = 1;
    g.lie_act(xi.data(), zbar, out.data(), p);
    if (dot_mod(out.data(), gy, p) != 0) return false;
  }
  return true;
}

Cyclotomic lie_char_sum(const GroupDatum& g, long p, const ResidueVec& zbar, const LatticeVector& y) {
  if (vec_valuation(y, p) != 0) throw Error("CONFIG", "lie_char_sum expects ν(Y) = 0");
  const int d = g.dim();
  std::vector<std::int64_t> z1 = zbar.coords;
  for (auto& c : z1) c = padic::mod(c, p);
  const std::vector<std::int64_t> w = residues(mat_vec(g.gram(), y), p);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0), out(static_cast<std::size_t>(d));
  for (const auto& xi : lie_quotient_elements(g, p)) {
    g.lie_act(xi.data(), z1.data(), out.data(), p);
    ++counts[static_cast<std::size_t>(dot_mod(out.data(), w, p))];
  }
  return Cyclotomic::from_exponent_counts(p, 1, counts);
}

bool lie_regular(const GroupDatum& g, long p, const LatticeVector& z, const LatticeVector& y) {
  if (vec_valuation(z, p) != 0) throw Error("CONFIG", "lie_regular expects a primitive Z");
  const std::vector<std::int64_t> zbar = residues(z, p);
  const std::vector<std::int64_t> ybar = residues(primitive_part(y, p), p);
  std::vector<std::int64_t> out(zbar.size());
  bool regular = true;
  for_each_group_element(g, p, 1, p, default_budget(), [&](const std::int64_t* h, const std::int64_t* hinv) {
    if (!regular) return;
    g.act(h, hinv, zbar.data(), out.data(), p);
    if (lie_character_trivial(g, p, out.data(), ybar.data())) regular = false;
  });
  return regular;
}

long d_V0(const GroupDatum& g, long p, const LatticeVector& z0, int m, std::int64_t budget) {
  const long nu = vec_valuation(z0, p);
  if (nu == kInfinity) throw Error("CONFIG", "d_V0 needs Z0 != 0");
  if (nu < 0) throw Error("CONFIG", "d_V0 needs integral Z0");
  return stable_v0(g, p, primitive_part(z0, p), m, budget).depth - nu;
}

namespace {

/// <b_j, Y'> for the basis of V₀' and the normalized Y'.
std::vector<Rational> normalized_pairings(const GroupDatum& g, long p, const LatticeVector& z0,
                                          const LatticeVector& y, std::int64_t budget) {
  if (vec_valuation(z0, p) == kInfinity || vec_valuation(y, p) == kInfinity)
    throw Error("CONFIG", "U membership needs nonzero Z0 and Y");
  V0Lattice v = stable_v0(g, p, primitive_part(z0, p), 1, budget);
  const LatticeVector yn = scale(y, rpow(p, v.depth - vec_valuation(y, p)));
  const GramMatrix gram = g.gram();
  std::vector<Rational> vals;
  for (const auto& b : v.lattice.basis()) {
    Rational x = pairing(b, gram, yn);
    if (val_p(x, p) < 0)
      throw Error("ARITH", "normalized Y is not dual to V0; the character on V0/pV0 is not defined");
    vals.push_back(x);
  }
  return vals;
}

}  // namespace

bool in_U(const GroupDatum& g, long p, const LatticeVector& z0, const LatticeVector& y, std::int64_t budget) {
  for (const auto& x : normalized_pairings(g, p, z0, y, budget))
    if (val_p(x, p) == 0) return true;
  return false;
}

VerificationReport vanishing_lemma_check(const GroupDatum& g, long p, const LatticeVector& z0,
                                         const LatticeVector& y, std::int64_t budget) {
  VerificationReport r;
  r.check = "vanishing_lemma";
  r.group = g.name();
  r.p = p;
  r.parameters["Z0"] = vector_string(z0);
  r.parameters["Y"] = vector_string(y);
  const std::vector<Rational> vals = normalized_pairings(g, p, z0, y, budget);
  bool nontrivial = false;
  for (const auto& x : vals) nontrivial = nontrivial || val_p(x, p) == 0;
  if (!nontrivial) throw Error("NOT_IN_U", "Y = " + vector_string(y) + " is not in U for Z0 = " + vector_string(z0));
  const std::size_t r_dim = vals.size();
  std::vector<std::int64_t> a;
  for (const auto& x : vals) a.push_back(reduce_mod(x, p));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
  const std::int64_t total = ipow64(p, static_cast<int>(r_dim));
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t t = idx, s = 0;
    for (std::size_t j = 0; j < r_dim; ++j) {
      s += (t % p) * a[j];
      t /= p;
    }
    ++counts[static_cast<std::size_t>(padic::mod(s, p))];
  }
  Cyclotomic sum = Cyclotomic::from_exponent_counts(p, 1, counts);
  r.values["sum"] = sum.pretty();
  r.values["terms"] = std::to_string(total);
  r.outcome = sum.is_zero() ? Outcome::kPass : Outcome::kFail;
  return r;
}

}  // namespace padic
