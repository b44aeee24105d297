#include <numeric>
#include <sstream>

#include "padic/groupscheme.hpp"

namespace padic {
namespace {

RatMatrix block(const std::vector<Rational>& flat, std::size_t off, int n) {
  RatMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = flat[off + static_cast<std::size_t>(i * n + j)];
  return m;
}

std::vector<Rational> flatten(const RatMatrix& m) {
  std::vector<Rational> f;
  for (const auto& row : m) f.insert(f.end(), row.begin(), row.end());
  return f;
}

/// c = a·b mod `mod` for n×n row-major blocks.
void mul_mod(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, int n, std::int64_t mod) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      __int128 s = 0;
      for (int l = 0; l < n; ++l) s += static_cast<__int128>(a[i * n + l]) * b[l * n + j];
      c[i * n + j] = mod_reduce128(s, mod);
    }
}

std::int64_t det_mod(const std::int64_t* x, int n, std::int64_t mod) {
  if (n == 1) return mod_reduce128(x[0], mod);
  if (n == 2) return mod_reduce128(static_cast<__int128>(x[0]) * x[3] - static_cast<__int128>(x[1]) * x[2], mod);
  __int128 s = 0;
  std::vector<std::int64_t> minor(static_cast<std::size_t>((n - 1) * (n - 1)));
  for (int c = 0; c < n; ++c) {
    std::size_t idx = 0;
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (j != c) minor[idx++] = x[i * n + j];
    __int128 term = static_cast<__int128>(x[c]) * det_mod(minor.data(), n - 1, mod);
    s = c % 2 == 0 ? s + term : s - term;
    s = mod_reduce128(s, mod);
  }
  return mod_reduce128(s, mod);
}

class GL1 final : public GroupDatum {
 public:
  std::string name() const override { return "gl1"; }
  int dim() const override { return 1; }
  std::vector<int> factor_sizes() const override { return {1}; }
  int deg_nu_central() const override { return 1; }
  GramMatrix gram() const override { return {{Rational(1)}}; }
  void act(const std::int64_t* h, const std::int64_t*, const std::int64_t* x, std::int64_t* out,
           std::int64_t mod) const override {
    out[0] = mod_reduce128(static_cast<__int128>(h[0]) * x[0], mod);
  }
  LatticeVector act_rational(const RatElement& h, const LatticeVector& y) const override { return {h[0] * y[0]}; }
  void lie_act(const std::int64_t* xi, const std::int64_t* x, std::int64_t* out, std::int64_t mod) const override {
    out[0] = mod_reduce128(static_cast<__int128>(xi[0]) * x[0], mod);
  }
  Rational P(const LatticeVector& x) const override { return x[0]; }
  std::int64_t P_mod(const std::int64_t* x, std::int64_t mod) const override { return mod_reduce128(x[0], mod); }
  Rational nu(const RatElement& h) const override { return h[0]; }
  RatElement iota(const Rational& u) const override { return {u}; }
  RatElement theta(const RatElement& h) const override { return {Rational(1) / h[0]}; }
  bool has_open_orbit() const override { return true; }
  LatticeVector base_point() const override { return {Rational(1)}; }
  bool kernel_depends_on_valuation() const override { return true; }
  std::optional<LatticeVector> primitive_rep(long k, long) const override {
    if (k == 0) return LatticeVector{Rational(1)};
    return std::nullopt;
  }
};

/// GL_n × GL_n on gl_n by (g1, g2)·X = g1 X g2^{-1}.
class GLNxGLN final : public GroupDatum {
 public:
  explicit GLNxGLN(int n) : n_(n) {}
  std::string name() const override { return "glnxgln:" + std::to_string(n_); }
  int dim() const override { return n_ * n_; }
  std::vector<int> factor_sizes() const override { return {n_, n_}; }
  int deg_nu_central() const override { return n_; }
  GramMatrix gram() const override { return trace_gram(n_); }
  void act(const std::int64_t* h, const std::int64_t* hinv, const std::int64_t* x, std::int64_t* out,
           std::int64_t mod) const override {
    std::int64_t tmp[64];
    mul_mod(h, x, tmp, n_, mod);
    mul_mod(tmp, hinv + n_ * n_, out, n_, mod);
  }
  LatticeVector act_rational(const RatElement& h, const LatticeVector& y) const override {
    const std::size_t nn = static_cast<std::size_t>(n_ * n_);
    RatMatrix g1 = block(h, 0, n_), g2 = block(h, nn, n_), x = block(y, 0, n_);
    return flatten(mat_mul(mat_mul(g1, x), mat_inverse(g2)));
  }
  void lie_act(const std::int64_t* xi, const std::int64_t* x, std::int64_t* out, std::int64_t mod) const override {
    std::int64_t a[64], b[64];
    mul_mod(xi, x, a, n_, mod);
    mul_mod(x, xi + n_ * n_, b, n_, mod);
    for (int i = 0; i < n_ * n_; ++i) out[i] = mod_reduce128(a[i] - b[i], mod);
  }
  Rational P(const LatticeVector& x) const override { return determinant(block(x, 0, n_)); }
  std::int64_t P_mod(const std::int64_t* x, std::int64_t mod) const override { return det_mod(x, n_, mod); }
  Rational nu(const RatElement& h) const override {
    const std::size_t nn = static_cast<std::size_t>(n_ * n_);
    return determinant(block(h, 0, n_)) / determinant(block(h, nn, n_));
  }
  RatElement iota(const Rational& u) const override {
    RatElement e(static_cast<std::size_t>(2 * n_ * n_));
    for (int i = 0; i < n_; ++i) {
      e[static_cast<std::size_t>(i * n_ + i)] = u;
      e[static_cast<std::size_t>(n_ * n_ + i * n_ + i)] = 1;
    }
    return e;
  }
  RatElement theta(const RatElement& h) const override {
    const std::size_t nn = static_cast<std::size_t>(n_ * n_);
    RatElement e(h.begin() + static_cast<std::ptrdiff_t>(nn), h.end());
    e.insert(e.end(), h.begin(), h.begin() + static_cast<std::ptrdiff_t>(nn));
    return e;
  }
  bool has_open_orbit() const override { return true; }
  LatticeVector base_point() const override { return flatten(identity_matrix(static_cast<std::size_t>(n_))); }
  // Primitive matrices of a given det valuation form one orbit only for n <= 2.
  bool kernel_depends_on_valuation() const override { return n_ <= 2; }
  std::optional<LatticeVector> primitive_rep(long k, long p) const override {
    RatMatrix m = identity_matrix(static_cast<std::size_t>(n_));
    if (n_ == 1 && k > 0) return std::nullopt;
    m[static_cast<std::size_t>(n_ - 1)][static_cast<std::size_t>(n_ - 1)] = rpow(p, k);
    return flatten(m);
  }
  std::optional<RatElement> kernel_type_step(long p) const override {
    if (n_ < 2) return std::nullopt;
    RatElement e = iota(Rational(1));
    e[static_cast<std::size_t>(n_ * n_ - 1)] = Rational(1, p);
    return e;
  }

  static GramMatrix trace_gram(int n) {
    const std::size_t d = static_cast<std::size_t>(n * n);
    GramMatrix g(d, std::vector<Rational>(d));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g[static_cast<std::size_t>(i * n + j)][static_cast<std::size_t>(j * n + i)] = 1;
    return g;
  }

 private:
  int n_;
};

/// GL_2 × G_m on gl_2 by (g, u)·X = u g X g^{-1}.
class ScaledAdjointGL2 final : public GroupDatum {
 public:
  std::string name() const override { return "scaled-adjoint-gl2"; }
  int dim() const override { return 4; }
  std::vector<int> factor_sizes() const override { return {2, 1}; }
  int deg_nu_central() const override { return 2; }
  GramMatrix gram() const override { return GLNxGLN::trace_gram(2); }
  void act(const std::int64_t* h, const std::int64_t* hinv, const std::int64_t* x, std::int64_t* out,
           std::int64_t mod) const override {
    std::int64_t a[4], b[4];
    mul_mod(h, x, a, 2, mod);
    mul_mod(a, hinv, b, 2, mod);
    for (int i = 0; i < 4; ++i) out[i] = mod_reduce128(static_cast<__int128>(h[4]) * b[i], mod);
  }
  LatticeVector act_rational(const RatElement& h, const LatticeVector& y) const override {
    RatMatrix g = block(h, 0, 2), x = block(y, 0, 2);
    LatticeVector r = flatten(mat_mul(mat_mul(g, x), mat_inverse(g)));
    for (auto& c : r) c *= h[4];
    return r;
  }
  void lie_act(const std::int64_t* xi, const std::int64_t* x, std::int64_t* out, std::int64_t mod) const override {
    std::int64_t a[4], b[4];
    mul_mod(xi, x, a, 2, mod);
    mul_mod(x, xi, b, 2, mod);
    for (int i = 0; i < 4; ++i)
      out[i] = mod_reduce128(static_cast<__int128>(a[i]) - b[i] + static_cast<__int128>(xi[4]) * x[i], mod);
  }
  Rational P(const LatticeVector& x) const override { return determinant(block(x, 0, 2)); }
  std::int64_t P_mod(const std::int64_t* x, std::int64_t mod) const override { return det_mod(x, 2, mod); }
  Rational nu(const RatElement& h) const override { return h[4] * h[4]; }
  RatElement iota(const Rational& u) const override { return {1, 0, 0, 1, u}; }
  RatElement theta(const RatElement& h) const override {
    RatElement e = h;
    e[4] = Rational(1) / h[4];
    return e;
  }
  bool has_open_orbit() const override { return false; }
  LatticeVector base_point() const override { return {1, 0, 0, 1}; }
};

}  // namespace

std::vector<std::string> catalog_names() { return {"gl1", "glnxgln:2", "scaled-adjoint-gl2"}; }

ValidationResult validate_datum(const GroupDatum& g, int samples, std::uint64_t seed) {
  ValidationResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-5, 5);
  const int d = g.dim();
  auto random_vec = [&] {
    LatticeVector v(static_cast<std::size_t>(d));
    for (auto& c : v) c = Rational(small(rng), 1 + std::abs(small(rng)) % 3);
    for (auto& c : v) c.canonicalize();
    return v;
  };
  auto fail = [&](const std::string& what) {
    if (r.failures.size() < 10) r.failures.push_back(what);
  };
  if (g.deg_nu_central() == 0) fail("ν is trivial on the centre");
  const GramMatrix gram = g.gram();
  if (!is_symmetric(gram) || determinant(gram) == 0) fail("pairing is not symmetric and nondegenerate");
  for (int s = 0; s < samples; ++s) {
    ++r.samples;
    RatElement h = random_rat_element(g, rng, false, 2);
    RatElement h2 = random_rat_element(g, rng, false, 2);
    LatticeVector x = random_vec(), y = random_vec();
    if (g.P(g.act_rational(rat_inverse(g, h), x)) != g.P(x) / g.nu(h)) fail("P(h^{-1}X) != ν(h)^{-1} P(X)");
    if (pairing(g.act_rational(h, x), gram, g.act_rational(g.theta(h), y)) != pairing(x, gram, y))
      fail("<hX, θ(h)Y> != <X, Y>");
    if (g.theta(g.theta(h)) != h) fail("θ is not an involution");
    if (g.act_rational(rat_mul(g, h, h2), x) != g.act_rational(h, g.act_rational(h2, x)))
      fail("action is not a homomorphism");
    Rational u(small(rng) == 0 ? 3 : small(rng) * 2 + 1, 2);
    if (g.act_rational(g.iota(u), x) != scale(x, u)) fail("ρ(ι(u)) is not the scalar u");
    Rational ue = 1;
    for (int i = 0; i < g.deg_nu_central(); ++i) ue *= u;
    if (g.nu(g.iota(u)) != ue) fail("ν(ι(u)) != u^e");
  }
  return r;
}

DatumPtr make_datum(const std::string& name) {
  DatumPtr d;
  if (name == "gl1") {
    d = std::make_shared<GL1>();
  } else if (name.rfind("glnxgln:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(8));
    } catch (const std::exception&) {
      throw Error("CONFIG", "bad group size in '" + name + "'");
    }
    if (n < 1 || n > 4) throw Error("CONFIG", "glnxgln:n supports 1 <= n <= 4");
    d = std::make_shared<GLNxGLN>(n);
  } else if (name == "scaled-adjoint-gl2") {
    d = std::make_shared<ScaledAdjointGL2>();
  } else {
    throw Error("CONFIG", "unknown group '" + name + "'");
  }
  ValidationResult v = validate_datum(*d, 50, 0x5eed);
  if (!v.ok()) throw Error("CONFIG", name + " failed validation: " + v.failures.front());
  return d;
}

}  // namespace padic
