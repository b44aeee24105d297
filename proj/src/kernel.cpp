#include "padic/kernel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace padic {

TruncatedSeries ExactIntegral::series(long order) const {
  return value.to_series(std::min(order, exact_through));
}

Rational measure_volume(int d, long p, long n) {
  require_prime(p);
  return rpow(p, -n * d);
}

namespace {

std::int64_t resolve_budget(std::int64_t b) { return b > 0 ? b : default_budget(); }

void require_open_orbit(const GroupDatum& g) {
  if (!g.has_open_orbit())
    throw Error("CONFIG", g.name() + " has no open orbit; the kernel is not defined for it");
}

long add_order(long a, long shift) { return a == kInfinity ? kInfinity : a + shift; }

// Integrates |P|^s ψ(<Z, W>) over residue classes of primitive Z. Classes
// where P is determined contribute t^v directly; classes on the smooth part
// of the zero locus are closed with the Hensel volume formula.
class ShellAccumulator {
 public:
  ShellAccumulator(const GroupDatum& g, long p, const LatticeVector& w, int max_level, std::int64_t budget)
      : g_(g), p_(p), d_(g.dim()), max_level_(max_level), budget_(budget) {
    const LatticeVector u = mat_vec(g.gram(), w);
    const long nu = vec_valuation(u, p);
    w_ = (nu == kInfinity || nu >= 0) ? 0 : static_cast<int>(-nu);
    if (w_ > 40) throw Error("BUDGET", "twist too deep");
    pw_ = ipow64(p, w_);
    gw_.assign(d_, 0);
    if (w_ > 0) {
      const LatticeVector u0 = scale(u, rpow(p, w_));
      for (int i = 0; i < d_; ++i) gw_[i] = reduce_mod(u0[i], pw_);
    }
  }

  int twist_level() const { return w_; }

  void process(std::vector<std::int64_t> c, int level) {
    if (++visited_ > budget_) throw Error("BUDGET", "shell refinement exceeded the element budget");
    const std::int64_t m = ipow64(p_, level);
    const std::int64_t pm = g_.P_mod(c.data(), m);
    if (pm != 0) {
      if (level >= w_) add(level, static_cast<int>(val_p(pm, p_)), c);
      return;
    }
    if (level >= w_ && smooth(c, level)) {
      add(level, level, c);
      return;
    }
    if (level >= max_level_) {
      exact_through_ = std::min<long>(exact_through_, level - 1);
      return;
    }
    std::vector<std::int64_t> child(d_);
    std::vector<std::int64_t> digits(d_, 0);
    while (true) {
      for (int i = 0; i < d_; ++i) child[i] = c[i] + m * digits[i];
      process(child, level + 1);
      int i = d_ - 1;
      while (i >= 0 && ++digits[i] == p_) digits[i--] = 0;
      if (i < 0) break;
    }
  }

  ExactIntegral result() const {
    RationalFunction determined(p_), closed(p_);
    for (const auto& [key, counts] : counts_) {
      const auto [level, v] = key;
      Cyclotomic coef = w_ == 0 ? Cyclotomic(p_, Rational(static_cast<long>(counts[0])))
                                : Cyclotomic::from_exponent_counts(p_, w_, counts);
      coef *= rpow(p_, -static_cast<long>(level) * d_);
      if (v < level) {
        determined += RationalFunction::monomial(p_, coef, v);
      } else {
        coef *= Rational(p_ - 1, p_);
        closed += RationalFunction::monomial(p_, coef, level);
      }
    }
    if (!closed.is_zero()) determined += closed * RationalFunction::geometric(p_, Rational(1, p_), 1);
    return {determined, exact_through_};
  }

 private:
  bool smooth(std::vector<std::int64_t>& c, int level) const {
    const std::int64_t step = ipow64(p_, level);
    const std::int64_t m2 = step * p_;
    const std::int64_t base = g_.P_mod(c.data(), m2);
    for (int i = 0; i < d_; ++i) {
      c[i] += step;
      const std::int64_t moved = g_.P_mod(c.data(), m2);
      c[i] -= step;
      if (mod(moved - base, m2) != 0) return true;
    }
    return false;
  }

  void add(int level, int v, const std::vector<std::int64_t>& c) {
    std::int64_t r = 0;
    if (w_ > 0)
      for (int i = 0; i < d_; ++i) r = mod(r + mod_mul(mod(c[i], pw_), gw_[i], pw_), pw_);
    auto& counts = counts_[{level, v}];
    if (counts.empty()) counts.assign(pw_, 0);
    ++counts[r];
  }

  const GroupDatum& g_;
  long p_;
  int d_;
  int max_level_;
  std::int64_t budget_;
  int w_ = 0;
  std::int64_t pw_ = 1;
  std::vector<std::int64_t> gw_;
  std::int64_t visited_ = 0;
  long exact_through_ = kInfinity;
  std::map<std::pair<int, int>, std::vector<std::int64_t>> counts_;
};

std::vector<std::int64_t> to_vec(const std::int64_t* c, int d) { return {c, c + d}; }

ShellIntegral shell_group_sum(const GroupDatum& g, long p, const LatticeVector& w, const EngineOptions& opt,
                              int tw) {
  const std::int64_t budget = resolve_budget(opt.budget);
  const long nu_w = vec_valuation(w, p);
  int m = opt.group_sum_level > 0 ? opt.group_sum_level : std::max(tw, 1);
  if (nu_w != kInfinity) m = std::max<long>(m, -nu_w);
  if (m < tw) throw Error("CONFIG", "group-sum level below the twist level");
  const LatticeVector y = scale(w, rpow(p, m));
  const int d = g.dim();

  RationalFunction total(p);
  long exact = kInfinity;
  for (const ShellOrbit& orb : orbit_decompose_shell(g, p, m, budget)) {
    ShellAccumulator acc(g, p, LatticeVector(d, Rational(0)), opt.max_level, budget);
    acc.process(orb.rep.coords, m);
    ExactIntegral mu = acc.result();
    exact = std::min(exact, mu.exact_through);
    Cyclotomic s = group_char_sum(g, p, lift(orb.rep), y, m, budget);
    s *= Rational(1, static_cast<long>(orb.stabilizer));
    total += mu.value.scaled(s);
  }
  ShellIntegral out;
  out.value = {total, exact};
  out.level_used = m;
  out.twist = w;
  return out;
}

std::mutex cache_mutex;
std::map<std::string, ShellIntegral> shell_cache;

std::string cache_key(const GroupDatum& g, long p, const LatticeVector& w, const EngineOptions& opt) {
  std::ostringstream os;
  os << g.name() << '|' << p << '|' << static_cast<int>(opt.strategy) << '|' << opt.group_sum_level << '|'
     << opt.max_level << '|' << vector_string(w);
  return os.str();
}

}  // namespace

void clear_engine_caches() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  shell_cache.clear();
}

ShellIntegral shell_integral(const GroupDatum& g, long p, const LatticeVector& w, const EngineOptions& opt) {
  require_prime(p);
  require_open_orbit(g);
  if (static_cast<int>(w.size()) != g.dim()) throw Error("CONFIG", "twist has the wrong dimension");
  const std::string key = cache_key(g, p, w, opt);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = shell_cache.find(key);
    if (it != shell_cache.end()) return it->second;
  }
  const std::int64_t budget = resolve_budget(opt.budget);
  ShellAccumulator acc(g, p, w, opt.max_level, budget);
  const int tw = acc.twist_level();
  ShellIntegral out;
  const int d = g.dim();
  switch (opt.strategy) {
    case ShellStrategy::kLifted:
      for_each_primitive(d, p, 1, [&](const std::int64_t* c) { acc.process(to_vec(c, d), 1); });
      out.value = acc.result();
      out.level_used = std::max(tw, 1);
      out.twist = w;
      break;
    case ShellStrategy::kDirect: {
      const int level = std::max(tw, 1);
      if (primitive_count(d, p, level) > budget) throw Error("BUDGET", "too many primitive classes");
      for_each_primitive(d, p, level, [&](const std::int64_t* c) { acc.process(to_vec(c, d), level); });
      out.value = acc.result();
      out.level_used = level;
      out.twist = w;
      break;
    }
    case ShellStrategy::kGroupSum:
      out = shell_group_sum(g, p, w, opt, tw);
      break;
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  shell_cache.emplace(key, out);
  return out;
}

ExactIntegral I_n(const GroupDatum& g, long p, const LatticeVector& y, long n, const EngineOptions& opt) {
  require_open_orbit(g);
  const int e = g.deg_nu_central();
  const int d = g.dim();
  const long nu = vec_valuation(y, p);
  const long k0 = nu == kInfinity ? -n : std::max(-n, -nu);

  RationalFunction total(p);
  long exact = kInfinity;
  for (long k = -n; k < k0; ++k) {
    ShellIntegral sh = shell_integral(g, p, scale(y, rpow(p, k)), opt);
    total += sh.value.value.shifted(e * k).scaled(rpow(p, -k * d));
    exact = std::min(exact, add_order(sh.value.exact_through, e * k));
  }
  ShellIntegral u = shell_integral(g, p, LatticeVector(d, Rational(0)), opt);
  total += (u.value.value * RationalFunction::geometric(p, rpow(p, -d), e)).shifted(e * k0).scaled(rpow(p, -k0 * d));
  exact = std::min(exact, add_order(u.value.exact_through, e * k0));
  return {total, exact};
}

KernelValue kappa(const GroupDatum& g, long p, const LatticeVector& y, const KernelOptions& opt) {
  require_prime(p);
  require_open_orbit(g);
  const long nu = vec_valuation(y, p);
  if (nu == kInfinity) throw Error("CONFIG", "the kernel needs Y != 0");
  const std::int64_t budget = resolve_budget(opt.engine.budget);
  if (opt.require_regular) {
    for (const ShellOrbit& orb : orbit_decompose_shell(g, p, 1, budget))
      if (!lie_regular(g, p, lift(orb.rep), y))
        throw Error("NOT_IN_U", "Y = " + vector_string(y) + " is not regular for shell representative " +
                                    vector_string(lift(orb.rep)));
  }
  int extra = opt.max_extra;
  if (extra <= 0) {
    extra = 5;
    if (!opt.require_regular) {
      const Rational pv = g.P(primitive_part(y, p));
      extra += pv == 0 ? 8 : static_cast<int>(std::max<long>(0, val_p(pv, p)));
    }
  }

  std::map<long, ExactIntegral> memo;
  auto at = [&](long n) -> const ExactIntegral& {
    auto it = memo.find(n);
    if (it == memo.end()) it = memo.emplace(n, I_n(g, p, y, n, opt.engine)).first;
    return it->second;
  };

  KernelValue out;
  out.y = y;
  bool found = false;
  for (long n = nu; n <= nu + extra; ++n) {
    if (at(n).value == at(n + 1).value && at(n + 1).value == at(n + 2).value) {
      out.value = at(n);
      out.stabilized_at = n;
      found = true;
      break;
    }
  }
  if (!found)
    throw Error("NO_STABILIZATION",
                "I_n(Y) did not stabilize through n = " + std::to_string(nu + extra) + " for Y = " + vector_string(y));

  const int e = g.deg_nu_central();
  const int d = g.dim();
  ExactIntegral cross = at(nu);
  for (long j = nu + 1; j <= nu + 2; ++j) {
    ShellIntegral sh = shell_integral(g, p, scale(y, rpow(p, -j)), opt.engine);
    cross.value += sh.value.value.shifted(-e * j).scaled(rpow(p, j * d));
    cross.exact_through = std::min(cross.exact_through, add_order(sh.value.exact_through, -e * j));
  }
  out.cross_check = cross;
  out.cross_check_agrees = cross.value == out.value.value;
  return out;
}

RationalFunction kappa_gl1_closed_form(long p, const LatticeVector& y) {
  if (y.size() != 1) throw Error("CONFIG", "GL1 kernel takes a scalar Y");
  const long nu = vec_valuation(y, p);
  if (nu == kInfinity) throw Error("CONFIG", "the kernel needs Y != 0");
  return RationalFunction::monomial(p, Cyclotomic(p, rpow(p, nu)), -nu) * gamma_p_reflected(p);
}

TruncatedSeries igusa_zeta_counts(const GroupDatum& g, long p, long order, std::int64_t budget) {
  require_prime(p);
  if (order < 0) throw Error("CONFIG", "negative order");
  const int d = g.dim();
  const int level = static_cast<int>(order + 1);
  const Integer total = ipow(p, static_cast<unsigned long>(level) * d);
  if (total > Integer(static_cast<long>(resolve_budget(budget))))
    throw Error("BUDGET", "residue count p^{(order+1)d} exceeds the budget");
  const std::int64_t m = ipow64(p, level);
  std::vector<std::int64_t> counts(level, 0);
  std::vector<std::int64_t> x(d, 0);
  while (true) {
    const std::int64_t v = g.P_mod(x.data(), m);
    if (v != 0) ++counts[val_p(v, p)];
    int i = d - 1;
    while (i >= 0 && ++x[i] == m) x[i--] = 0;
    if (i < 0) break;
  }
  std::vector<Cyclotomic> coeffs;
  for (long j = 0; j <= order; ++j) {
    Rational c(Integer(static_cast<long>(counts[j])), total);
    c.canonicalize();
    coeffs.emplace_back(p, c);
  }
  return TruncatedSeries(p, 0, std::move(coeffs), order);
}

ExactIntegral igusa_zeta(const GroupDatum& g, long p, const EngineOptions& opt) {
  return I_n(g, p, LatticeVector(g.dim(), Rational(0)), 0, opt);
}

RationalFunction igusa_gln_product(long p, int n) {
  RationalFunction f = RationalFunction::constant(p, Rational(1));
  for (int i = 1; i <= n; ++i)
    f = f.scaled(1 - rpow(p, -i)) * RationalFunction::geometric(p, rpow(p, -i), 1);
  return f;
}

Cyclotomic FourierIndicator::evaluate(const LatticeVector& z) const {
  const long nu = vec_valuation(z, p);
  if (nu != kInfinity && nu < -n) return Cyclotomic::zero(p);
  return psi(pairing(shift, gram, z), p) * scale;
}

FourierIndicator fourier_indicator(const GroupDatum& g, long p, const LatticeVector& a, long n) {
  require_prime(p);
  if (static_cast<int>(a.size()) != g.dim()) throw Error("CONFIG", "shift has the wrong dimension");
  if (pairing_depth(g.gram(), p) != 0) throw Error("CONFIG", "the pairing is not unimodular");
  FourierIndicator f;
  f.shift = a;
  f.n = n;
  f.scale = measure_volume(g.dim(), p, n);
  f.p = p;
  f.gram = g.gram();
  return f;
}

VerificationReport validate_fourier_indicator(const GroupDatum& g, long p, const LatticeVector& a, long n,
                                              int extra) {
  const FourierIndicator f = fourier_indicator(g, p, a, n);
  if (vec_valuation(a, p) < 0) throw Error("CONFIG", "grid validation needs an integral shift");
  if (n < 0 || extra < 1) throw Error("CONFIG", "grid validation needs n >= 0 and extra >= 1");
  const int d = g.dim();
  const int k = static_cast<int>(n + extra);
  const std::int64_t pk = ipow64(p, k);
  const std::int64_t pn = ipow64(p, static_cast<int>(n));
  const std::int64_t inner = ipow64(p, extra);
  const Integer grid = ipow(p, static_cast<unsigned long>(k) * d);
  if (grid * ipow(inner, d) > Integer(static_cast<long>(default_budget())))
    throw Error("BUDGET", "Fourier grid too large");

  std::vector<std::vector<std::int64_t>> gm(d, std::vector<std::int64_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gm[i][j] = reduce_mod(f.gram[i][j], pk);
  std::vector<std::int64_t> ar(d);
  for (int i = 0; i < d; ++i) ar[i] = reduce_mod(a[i], pk);

  long checked = 0, mismatches = 0;
  std::string first_bad;
  std::vector<std::int64_t> z(d, 0), gz(d), u(d), hist(pk);
  while (true) {
    for (int i = 0; i < d; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < d; ++j) s = mod(s + mod_mul(gm[i][j], z[j], pk), pk);
      gz[i] = s;
    }
    std::fill(hist.begin(), hist.end(), 0);
    std::fill(u.begin(), u.end(), 0);
    while (true) {
      std::int64_t r = 0;
      for (int i = 0; i < d; ++i) r = mod(r + mod_mul(mod(ar[i] + pn * u[i], pk), gz[i], pk), pk);
      ++hist[r];
      int i = d - 1;
      while (i >= 0 && ++u[i] == inner) u[i--] = 0;
      if (i < 0) break;
    }
    Cyclotomic direct = Cyclotomic::from_exponent_counts(p, k, hist) * rpow(p, -static_cast<long>(k) * d);
    LatticeVector zr(d);
    for (int i = 0; i < d; ++i) {
      zr[i] = Rational(static_cast<long>(z[i]), static_cast<long>(pk));
      zr[i].canonicalize();
    }
    ++checked;
    if (direct != f.evaluate(zr)) {
      if (mismatches++ == 0) first_bad = vector_string(zr);
    }
    int i = d - 1;
    while (i >= 0 && ++z[i] == pk) z[i--] = 0;
    if (i < 0) break;
  }
  VerificationReport r;
  r.check = "fourier_indicator";
  r.group = g.name();
  r.p = p;
  r.parameters = {{"a", vector_string(a)}, {"n", std::to_string(n)}, {"grid_level", std::to_string(k)}};
  r.values = {{"grid_points", std::to_string(checked)}, {"mismatches", std::to_string(mismatches)}};
  r.outcome = mismatches == 0 ? Outcome::kPass : Outcome::kFail;
  if (mismatches) r.detail = "first mismatch at Z = " + first_bad;
  return r;
}

ExactIntegral orb_fhat(const GroupDatum& g, long p, const LatticeVector& a, long n, const EngineOptions& opt) {
  ExactIntegral v = I_n(g, p, a, n, opt);
  v.value = v.value.scaled(measure_volume(g.dim(), p, n));
  return v;
}

RationalFunction transport_factor(const GroupDatum& g, long p, const RatElement& h) {
  const long vn = val_p(g.nu(h), p);
  const long vd = val_p(det_rho(g, h), p);
  return RationalFunction::monomial(p, Cyclotomic(p, rpow(p, -vd)), vn);
}

namespace {

// Integrates κ over cosets y + p^c V(O) using the scaling law, the
// dependence of κ on ν(P) for primitive Y, and the step element that moves
// primitive representatives one level deeper into the zero locus of P.
class KappaIntegrator {
 public:
  KappaIntegrator(const GroupDatum& g, long p, const EngineOptions& opt) : g_(g), p_(p), opt_(opt) {
    if (!g.kernel_depends_on_valuation())
      throw Error("CONFIG", g.name() + ": the kernel integral needs κ to depend on ν(P) alone");
  }

  ExactIntegral integrate(const LatticeVector& y, long c) {
    const int e = g_.deg_nu_central();
    const int d = g_.dim();
    const long v = vec_valuation(y, p_);
    if (v >= c) {
      ExactIntegral sh = shell_kernel_integral();
      RationalFunction one = RationalFunction::constant(p_, Rational(1));
      RationalFunction denom = one - RationalFunction::monomial(p_, Cyclotomic(p_, Rational(1)), -e);
      sh.value = (sh.value / denom).shifted(-e * c);
      sh.exact_through = add_order(sh.exact_through, -e * c);
      return sh;
    }
    if (v != 0) {
      ExactIntegral inner = integrate(scale(y, rpow(p_, -v)), c - v);
      inner.value = inner.value.shifted(-e * v);
      inner.exact_through = add_order(inner.exact_through, -e * v);
      return inner;
    }
    const std::int64_t m = ipow64(p_, static_cast<int>(c));
    std::vector<std::int64_t> yr(d);
    for (int i = 0; i < d; ++i) yr[i] = reduce_mod(y[i], m);
    const std::int64_t pm = g_.P_mod(yr.data(), m);
    const Rational vol = rpow(p_, -c * d);
    if (pm != 0) {
      ExactIntegral k = kernel_at(val_p(pm, p_));
      k.value = k.value.scaled(vol);
      return k;
    }
    if (!smooth(yr, c)) throw Error("ARITH", "coset meets the singular locus of P");
    std::optional<RatElement> step = g_.kernel_type_step(p_);
    if (!step) throw Error("CONFIG", g_.name() + " has no step element for the zero locus of P");
    RationalFunction rho = transport_factor(g_, p_, *step).scaled(Rational(1, p_));
    RationalFunction one = RationalFunction::constant(p_, Rational(1));
    ExactIntegral k = kernel_at(c);
    k.value = (k.value / (one - rho)).scaled(vol * Rational(p_ - 1, p_));
    return k;
  }

 private:
  bool smooth(std::vector<std::int64_t> c, long level) const {
    const std::int64_t step = ipow64(p_, static_cast<int>(level));
    const std::int64_t m2 = step * p_;
    const std::int64_t base = g_.P_mod(c.data(), m2);
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] += step;
      const std::int64_t moved = g_.P_mod(c.data(), m2);
      c[i] -= step;
      if (mod(moved - base, m2) != 0) return true;
    }
    return false;
  }

  ExactIntegral kernel_at(long k) {
    auto it = kernel_.find(k);
    if (it != kernel_.end()) return it->second;
    std::optional<LatticeVector> rep = g_.primitive_rep(k, p_);
    if (!rep) throw Error("CONFIG", g_.name() + " has no primitive representative with ν(P) = " + std::to_string(k));
    KernelOptions ko;
    ko.engine = opt_;
    ko.require_regular = false;
    ExactIntegral v = kappa(g_, p_, *rep, ko).value;
    kernel_.emplace(k, v);
    return v;
  }

  // ∫_{ν(Y)=0} κ(Y) dY.
  ExactIntegral shell_kernel_integral() {
    if (shell_) return *shell_;
    ExactIntegral total{RationalFunction(p_), kInfinity};
    const int d = g_.dim();
    for_each_primitive(d, p_, 1, [&](const std::int64_t* c) {
      LatticeVector y(d);
      for (int i = 0; i < d; ++i) y[i] = Rational(static_cast<long>(c[i]));
      ExactIntegral part = integrate(y, 1);
      total.value += part.value;
      total.exact_through = std::min(total.exact_through, part.exact_through);
    });
    shell_ = total;
    return total;
  }

  const GroupDatum& g_;
  long p_;
  EngineOptions opt_;
  std::map<long, ExactIntegral> kernel_;
  std::optional<ExactIntegral> shell_;
};

}  // namespace

ExactIntegral rhs_integral(const GroupDatum& g, long p, const LatticeVector& a, long n, const EngineOptions& opt) {
  require_prime(p);
  require_open_orbit(g);
  if (static_cast<int>(a.size()) != g.dim()) throw Error("CONFIG", "shift has the wrong dimension");
  KappaIntegrator integ(g, p, opt);
  return integ.integrate(a, n);
}

VerificationReport verify_theorem(const GroupDatum& g, long p, const LatticeVector& a, long n, long order,
                                  const EngineOptions& opt) {
  const ExactIntegral lhs = orb_fhat(g, p, a, n, opt);
  const ExactIntegral rhs = rhs_integral(g, p, a, n, opt);
  VerificationReport r;
  r.check = "theorem";
  r.group = g.name();
  r.p = p;
  r.parameters = {{"a", vector_string(a)}, {"n", std::to_string(n)}, {"order", std::to_string(order)}};
  set_series_comparison(r, lhs.series(order), rhs.series(order), order);
  const bool exact = lhs.is_exact() && rhs.is_exact();
  const bool equal = lhs.value == rhs.value;
  r.values["exact"] = exact ? "true" : "false";
  r.values["rational_functions_equal"] = equal ? "true" : "false";
  r.values["lhs"] = lhs.value.pretty();
  r.values["rhs"] = rhs.value.pretty();
  if (exact && !equal) {
    r.outcome = Outcome::kFail;
    r.detail = "rational functions differ";
  }
  return r;
}

RationalFunction functional_equation_gamma(const GroupDatum& g, long p, const EngineOptions& opt) {
  require_open_orbit(g);
  const int d = g.dim();
  const int e = g.deg_nu_central();
  if (d % e != 0) throw Error("CONFIG", "d/e is not an integer");
  const ExactIntegral z = orb_fhat(g, p, LatticeVector(d, Rational(0)), 0, opt);
  if (!z.is_exact()) throw Error("TRUNCATED", "the zeta integral is not exact");
  return z.value / z.value.substitute_reciprocal(rpow(p, d / e));
}

RationalFunction gln_single_gamma_display(long p, int n) {
  return RationalFunction::polynomial(p, -1, {Cyclotomic(p, Rational(-1)), Cyclotomic(p, Rational(1))}) *
         RationalFunction::geometric(p, rpow(p, -n), 1);
}

VerificationReport gln_display_comparison(const GroupDatum& g, long p, long order, const EngineOptions& opt) {
  const std::vector<int> sizes = g.factor_sizes();
  if (sizes.size() != 2 || sizes[0] != sizes[1] || g.dim() != sizes[0] * sizes[0])
    throw Error("CONFIG", "the display comparison is for glnxgln:n");
  const int n = sizes[0];
  LatticeVector id(g.dim(), Rational(0));
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  KernelOptions ko;
  ko.engine = opt;
  const KernelValue k = kappa(g, p, id, ko);
  const RationalFunction display = gln_single_gamma_display(p, n);
  RationalFunction product = RationalFunction::constant(p, Rational(1));
  for (int i = 0; i < n; ++i) {
    product *= RationalFunction::polynomial(p, -1, {Cyclotomic(p, -rpow(p, i)), Cyclotomic(p, Rational(1))});
    product *= RationalFunction::geometric(p, rpow(p, -1 - i), 1);
  }
  const RationalFunction gamma = functional_equation_gamma(g, p, opt);

  VerificationReport r;
  r.check = "gln_display";
  r.group = g.name();
  r.p = p;
  r.parameters = {{"Y", vector_string(id)}, {"order", std::to_string(order)}};
  set_series_comparison(r, k.value.series(order), display.to_series(order), order);
  r.values["display_matches"] = r.outcome == Outcome::kPass ? "true" : "false";
  r.values["kernel"] = k.value.value.pretty();
  r.values["display"] = display.pretty();
  r.values["product_form"] = product.pretty();
  r.values["kernel_matches_product"] = k.value.value == product ? "true" : "false";
  r.values["gamma"] = gamma.pretty();
  r.values["kernel_matches_gamma"] = k.value.value == gamma ? "true" : "false";
  r.outcome = Outcome::kInfo;
  return r;
}

}  // namespace padic
