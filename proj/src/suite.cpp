#include "padic/suite.hpp"

#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace padic {

bool SuiteResult::ok() const {
  for (const auto& r : reports)
    if (r.failed()) return false;
  return true;
}

std::size_t SuiteResult::count(Outcome o) const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.outcome == o;
  return n;
}

std::string SuiteResult::to_json() const {
  std::string out = "{\"suite\":" + nlohmann::json(suite).dump() + ",\"reports\":[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out += ',';
    out += report_to_json(reports[i]);
  }
  return out + "]}";
}

std::string SuiteResult::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    std::string block = report_to_csv(reports[i]);
    if (i) block.erase(0, block.find('\n') + 1);
    out += block;
  }
  return out;
}

std::vector<std::string> suite_names() { return {"lemmas", "kernel", "theorem", "examples", "all"}; }

std::vector<VerificationReport> run_tasks(const std::vector<std::function<std::vector<VerificationReport>()>>& tasks,
                                          int workers) {
  std::vector<std::vector<VerificationReport>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) slots[i] = tasks[i]();
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<VerificationReport> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

namespace {

LatticeVector random_primitive(int d, long p, std::mt19937_64& rng) {
  const std::uint64_t bound = static_cast<std::uint64_t>(p * p);
  while (true) {
    LatticeVector y(d);
    for (int i = 0; i < d; ++i) y[i] = Rational(static_cast<long>(rng() % bound));
    if (vec_valuation(y, p) == 0) return y;
  }
}

bool kernel_regular(const GroupDatum& g, long p, const LatticeVector& y) {
  for (const ShellOrbit& orb : orbit_decompose_shell(g, p, 1, default_budget()))
    if (!lie_regular(g, p, lift(orb.rep), y)) return false;
  return true;
}

VerificationReport base_report(const std::string& check, const GroupDatum& g, long p) {
  VerificationReport r;
  r.check = check;
  r.group = g.name();
  r.p = p;
  return r;
}

std::string yes(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<LatticeVector> sample_regular(const GroupDatum& g, long p, const LatticeVector& z, int count,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LatticeVector> out;
  for (int tries = 0; static_cast<int>(out.size()) < count && tries < 200 * count; ++tries) {
    LatticeVector y = random_primitive(g.dim(), p, rng);
    if (lie_regular(g, p, z, y)) out.push_back(std::move(y));
  }
  return out;
}

std::vector<LatticeVector> sample_kernel_regular(const GroupDatum& g, long p, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LatticeVector> out;
  for (int tries = 0; static_cast<int>(out.size()) < count && tries < 200 * count; ++tries) {
    LatticeVector y = random_primitive(g.dim(), p, rng);
    if (kernel_regular(g, p, y)) out.push_back(std::move(y));
  }
  return out;
}

std::vector<VerificationReport> char_sum_reports(const GroupDatum& g, long p, const std::vector<int>& levels,
                                                 int samples, std::uint64_t seed, std::int64_t budget) {
  std::vector<VerificationReport> out;
  const auto orbits = orbit_decompose_shell(g, p, 1, budget > 0 ? budget : default_budget());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const LatticeVector z = lift(orbits[i].rep);
    const auto ys = sample_regular(g, p, z, samples, seed + 7919 * i);
    for (int n : levels) {
      VerificationReport r = base_report("char_sum_vanishing", g, p);
      r.parameters = {{"Z", vector_string(z)}, {"n", std::to_string(n)}, {"samples", std::to_string(samples)}};
      long nonzero = 0;
      std::string first;
      for (const auto& y : ys) {
        if (!group_char_sum(g, p, z, y, n, budget > 0 ? budget : default_budget()).is_zero()) {
          if (nonzero++ == 0) first = vector_string(y);
        }
      }
      r.values = {{"regular_Y", std::to_string(ys.size())}, {"nonzero", std::to_string(nonzero)},
                  {"vanishes", yes(nonzero == 0)}};
      if (nonzero) r.detail = "nonzero sum at Y = " + first;
      if (n < 3) {
        r.outcome = Outcome::kInfo;
      } else if (nonzero) {
        r.outcome = Outcome::kFail;
      } else {
        r.outcome = static_cast<int>(ys.size()) < samples ? Outcome::kInconclusive : Outcome::kPass;
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<VerificationReport> stabilization_reports(const GroupDatum& g, long p, long nu, long order, int samples,
                                                      std::uint64_t seed) {
  std::vector<VerificationReport> out;
  std::mt19937_64 rng(seed);
  int regular = 0;
  for (int tries = 0; regular < samples && tries < 20 * samples; ++tries) {
    const LatticeVector y = scale(random_primitive(g.dim(), p, rng), rpow(p, nu));
    VerificationReport r = base_report("stabilization", g, p);
    r.parameters = {{"Y", vector_string(y)}, {"order", std::to_string(order)}};
    if (!kernel_regular(g, p, y)) {
      r.outcome = Outcome::kSkipped;
      r.detail = "NOT_IN_U";
      out.push_back(std::move(r));
      continue;
    }
    ++regular;
    bool all = true;
    for (long n = nu + 3; n <= nu + 5; ++n) {
      const ExactIntegral a = I_n(g, p, y, n);
      const ExactIntegral b = I_n(g, p, y, n + 1);
      const SeriesEquality eq = compare_up_to_order(a.series(order), b.series(order), order);
      const bool same = eq.outcome == SeriesComparison::kEqual && a.value == b.value;
      r.values["I_" + std::to_string(n) + "=I_" + std::to_string(n + 1)] = yes(same);
      all = all && same;
      if (n == nu + 3) set_series_comparison(r, a.series(order), b.series(order), order);
    }
    r.outcome = all ? Outcome::kPass : Outcome::kFail;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> dual_path_reports(const GroupDatum& g, long p, int max_level, std::int64_t budget) {
  const int d = g.dim();
  std::vector<LatticeVector> dirs;
  LatticeVector e1(d, Rational(0));
  e1[0] = 1;
  dirs.push_back(e1);
  dirs.push_back(primitive_part(g.base_point(), p));
  if (dirs[1] == dirs[0]) dirs.pop_back();

  std::vector<VerificationReport> out;
  for (int w = 0; w <= max_level; ++w) {
    std::vector<LatticeVector> twists;
    if (w == 0) twists.push_back(LatticeVector(d, Rational(0)));
    for (const auto& u : dirs) twists.push_back(scale(u, rpow(p, -w)));
    for (const auto& tw : twists) {
      EngineOptions lifted;
      lifted.budget = budget;
      const ExactIntegral ref = shell_integral(g, p, tw, lifted).value;
      EngineOptions direct = lifted;
      direct.strategy = ShellStrategy::kDirect;
      const bool direct_ok = shell_integral(g, p, tw, direct).value.value == ref.value;
      for (int m = std::max(w, 1); m <= max_level; ++m) {
        EngineOptions dual = lifted;
        dual.strategy = ShellStrategy::kGroupSum;
        dual.group_sum_level = m;
        const ExactIntegral other = shell_integral(g, p, tw, dual).value;
        VerificationReport r = base_report("dual_path", g, p);
        r.parameters = {{"W", vector_string(tw)}, {"level", std::to_string(m)}};
        const bool same = other.value == ref.value && other.is_exact() && ref.is_exact();
        r.values = {{"lifted", ref.value.pretty()},
                    {"group_sum", other.value.pretty()},
                    {"direct_agrees", yes(direct_ok)}};
        r.outcome = same && direct_ok ? Outcome::kPass : Outcome::kFail;
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::vector<VerificationReport> equivariance_reports(const GroupDatum& g, long p, const LatticeVector& a, long n,
                                                     long order, int samples, std::uint64_t seed) {
  std::vector<VerificationReport> out;
  out.push_back(verify_theorem(g, p, a, n, order));
  const ExactIntegral base = orb_fhat(g, p, a, n);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const RatElement h = random_rat_element(g, rng, true, p);
    const LatticeVector ha = g.act_rational(h, a);
    VerificationReport r = verify_theorem(g, p, ha, n, order);
    r.check = "equivariance";
    const bool same = orb_fhat(g, p, ha, n).value == base.value;
    r.values["orbital_integral_invariant"] = yes(same);
    r.parameters["base_a"] = vector_string(a);
    if (!same) {
      r.outcome = Outcome::kFail;
      r.detail = "orbital integral changed under h";
    }
    out.push_back(std::move(r));
  }
  return out;
}

VerificationReport gl1_kernel_report(long p, long nu, long order) {
  const DatumPtr g = make_datum("gl1");
  const LatticeVector y{rpow(p, nu) * (p - 1)};
  const KernelValue k = kappa(*g, p, y);
  const RationalFunction closed = kappa_gl1_closed_form(p, y);
  VerificationReport r = base_report("gl1_kernel", *g, p);
  r.parameters = {{"Y", vector_string(y)}, {"order", std::to_string(order)}};
  set_series_comparison(r, k.value.series(order), closed.to_series(order), order);
  r.values = {{"rational_functions_equal", yes(k.value.value == closed)},
              {"stabilized_at", std::to_string(k.stabilized_at)},
              {"cross_check", yes(k.cross_check_agrees)}};
  if (!(k.value.value == closed) || !k.cross_check_agrees) r.outcome = Outcome::kFail;
  return r;
}

VerificationReport kernel_at_one_report(const GroupDatum& g, long p, const LatticeVector& y) {
  KernelOptions ko;
  ko.require_regular = false;
  const KernelValue k = kappa(g, p, y, ko);
  const Cyclotomic v = k.value.value.evaluate_at(Rational(1));
  VerificationReport r = base_report("kernel_at_t1", g, p);
  r.parameters = {{"Y", vector_string(y)}};
  r.values = {{"value", v.pretty()}};
  r.outcome = v.is_zero() ? Outcome::kPass : Outcome::kFail;
  return r;
}

VerificationReport igusa_report(const GroupDatum& g, long p, long order, std::int64_t budget) {
  const TruncatedSeries counts = igusa_zeta_counts(g, p, order, budget);
  VerificationReport r = base_report("igusa", g, p);
  r.parameters = {{"order", std::to_string(order)}};
  if (!g.has_open_orbit()) {
    r.lhs = counts;
    r.order_compared = order;
    r.outcome = Outcome::kInfo;
    r.detail = "counting only";
    return r;
  }
  const ExactIntegral z = igusa_zeta(g, p);
  set_series_comparison(r, counts, z.series(order), order);
  const std::vector<int> sizes = g.factor_sizes();
  std::optional<RationalFunction> closed;
  if (g.name() == "gl1") closed = igusa_gln_product(p, 1);
  if (sizes.size() == 2 && sizes[0] == sizes[1] && g.dim() == sizes[0] * sizes[0])
    closed = igusa_gln_product(p, sizes[0]);
  if (closed) {
    const bool same = *closed == z.value;
    r.values["closed_form"] = closed->pretty();
    r.values["closed_form_agrees"] = yes(same);
    if (!same) r.outcome = Outcome::kFail;
  }
  return r;
}

namespace {

using Task = std::function<std::vector<VerificationReport>()>;

struct TaskList {
  const RunConfig& cfg;
  std::vector<Task> tasks;

  void add(const std::string& group, long p, const std::string& check, std::function<std::vector<VerificationReport>(const GroupDatum&)> fn) {
    if (!cfg.group.empty() && cfg.group != group) return;
    tasks.push_back([group, p, check, fn] {
      try {
        const DatumPtr g = make_datum(group);
        return fn(*g);
      } catch (const Error& e) {
        VerificationReport r;
        r.check = check;
        r.group = group;
        r.p = p;
        r.outcome = Outcome::kFail;
        r.detail = e.what();
        return std::vector<VerificationReport>{r};
      }
    });
  }
};

LatticeVector mat2(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

void lemma_tasks(TaskList& t) {
  const RunConfig& cfg = t.cfg;
  const std::vector<std::pair<std::string, long>> groups = {
      {"gl1", 2}, {"gl1", 3}, {"gl1", 5}, {"glnxgln:2", 2}, {"scaled-adjoint-gl2", 2}};
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto [name, p] = groups[i];
    const std::uint64_t seed = cfg.seed * 1000003 + i;
    t.add(name, p, "char_sum_vanishing", [=, &cfg](const GroupDatum& g) {
      return char_sum_reports(g, p, {2, 3, 4}, cfg.samples, seed, cfg.budget);
    });
    t.add(name, p, "lie_bijection", [=](const GroupDatum& g) {
      std::vector<VerificationReport> out;
      for (int n : {2, 3}) {
        VerificationReport r = base_report("lie_bijection", g, p);
        r.parameters = {{"n", std::to_string(n)}};
        r.outcome = lie_bijection_check(g, p, n, default_budget()) ? Outcome::kPass : Outcome::kFail;
        out.push_back(r);
      }
      return out;
    });
    t.add(name, p, "stabilizer", [=](const GroupDatum& g) {
      std::vector<VerificationReport> out;
      for (const ShellOrbit& orb : orbit_decompose_shell(g, p, 1, default_budget())) {
        const StabilizerReport s = stabilizer_report(g, orb.rep, p, default_budget());
        VerificationReport r = base_report("stabilizer", g, p);
        r.parameters = {{"Z", vector_string(lift(orb.rep))}, {"level", "1"}};
        r.values = {{"order", std::to_string(s.order)},
                    {"next_order", std::to_string(s.next_order)},
                    {"image_order", std::to_string(s.image_order)},
                    {"consistent", yes(s.consistent())},
                    {"orbit_size", std::to_string(orb.size)}};
        r.outcome = Outcome::kInfo;
        out.push_back(r);
      }
      return out;
    });
  }
  t.add("glnxgln:2", 2, "vanishing_lemma", [&cfg](const GroupDatum& g) {
    std::vector<VerificationReport> out;
    const long p = 2;
    std::mt19937_64 rng(cfg.seed);
    for (const ShellOrbit& orb : orbit_decompose_shell(g, p, 1, default_budget())) {
      const LatticeVector z = lift(orb.rep);
      for (int s = 0; s < cfg.samples; ++s) {
        const LatticeVector y = random_primitive(g.dim(), p, rng);
        if (!in_U(g, p, z, y, default_budget())) continue;
        out.push_back(vanishing_lemma_check(g, p, z, y, default_budget()));
      }
    }
    // E11 paired with itself lies in U but its group sums do not vanish.
    const LatticeVector e11 = mat2(1, 0, 0, 0);
    VerificationReport r = base_report("u_membership_counterexample", g, p);
    r.parameters = {{"Z", vector_string(e11)}, {"Y", vector_string(e11)}};
    r.values["in_U"] = yes(in_U(g, p, e11, e11, default_budget()));
    r.values["lie_regular"] = yes(lie_regular(g, p, e11, e11));
    for (int n : {2, 3}) r.values["sum_n" + std::to_string(n)] = group_char_sum(g, p, e11, e11, n, default_budget()).pretty();
    r.outcome = Outcome::kInfo;
    out.push_back(r);
    return out;
  });
}

void kernel_tasks(TaskList& t) {
  const RunConfig& cfg = t.cfg;
  for (long p : {2L, 3L, 5L}) {
    t.add("gl1", p, "gl1_kernel", [=, &cfg](const GroupDatum&) {
      std::vector<VerificationReport> out;
      for (long nu = -1; nu <= 2; ++nu) out.push_back(gl1_kernel_report(p, nu, std::max(cfg.order, 6L)));
      return out;
    });
    t.add("gl1", p, "kernel_at_t1", [=](const GroupDatum& g) {
      return std::vector<VerificationReport>{kernel_at_one_report(g, p, {Rational(1)}),
                                             kernel_at_one_report(g, p, {Rational(p)})};
    });
  }
  t.add("glnxgln:2", 2, "kernel_at_t1", [](const GroupDatum& g) {
    return std::vector<VerificationReport>{kernel_at_one_report(g, 2, mat2(1, 0, 0, 1)),
                                           kernel_at_one_report(g, 2, mat2(0, 1, 1, 1)),
                                           kernel_at_one_report(g, 2, mat2(1, 0, 0, 2))};
  });
  const std::vector<std::pair<std::string, long>> groups = {{"gl1", 2}, {"gl1", 3}, {"gl1", 5}, {"glnxgln:2", 2}};
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto [name, p] = groups[i];
    for (long nu : {0L, 1L}) {
      const std::uint64_t seed = cfg.seed * 7000003 + 2 * i + static_cast<std::uint64_t>(nu);
      t.add(name, p, "stabilization", [=, &cfg](const GroupDatum& g) {
        return stabilization_reports(g, p, nu, cfg.order, std::min(cfg.samples, 8), seed);
      });
    }
  }
  t.add("glnxgln:2", 2, "transport", [&cfg](const GroupDatum& g) {
    const long p = 2;
    std::vector<VerificationReport> out;
    KernelOptions loose;
    loose.require_regular = false;
    const LatticeVector id = mat2(1, 0, 0, 1);
    const RationalFunction k0 = kappa(g, p, id).value.value;
    // κ(pY) = t^{-e} p^d κ(Y)
    {
      VerificationReport r = base_report("scaling_law", g, p);
      r.parameters = {{"Y", vector_string(id)}};
      const RationalFunction lhs = kappa(g, p, scale(id, Rational(p))).value.value;
      const RationalFunction rhs = k0.shifted(-g.deg_nu_central()).scaled(rpow(p, g.dim()));
      set_series_comparison(r, lhs.to_series(cfg.order), rhs.to_series(cfg.order), cfg.order);
      if (!(lhs == rhs)) r.outcome = Outcome::kFail;
      out.push_back(r);
    }
    {
      const RatElement h = *g.kernel_type_step(p);
      const LatticeVector hy = g.act_rational(g.theta(h), id);
      VerificationReport r = base_report("transport_law", g, p);
      r.parameters = {{"Y", vector_string(id)}, {"theta_h_Y", vector_string(hy)}};
      const RationalFunction lhs = kappa(g, p, hy, loose).value.value;
      const RationalFunction rhs = transport_factor(g, p, h) * k0;
      set_series_comparison(r, lhs.to_series(cfg.order), rhs.to_series(cfg.order), cfg.order);
      if (!(lhs == rhs)) r.outcome = Outcome::kFail;
      out.push_back(r);
    }
    return out;
  });
  t.add("gl1", 2, "dual_path", [&cfg](const GroupDatum& g) { return dual_path_reports(g, 2, 4, cfg.budget); });
  t.add("gl1", 3, "dual_path", [&cfg](const GroupDatum& g) { return dual_path_reports(g, 3, 4, cfg.budget); });
  t.add("glnxgln:2", 2, "dual_path", [&cfg](const GroupDatum& g) { return dual_path_reports(g, 2, 2, cfg.budget); });
}

void theorem_tasks(TaskList& t) {
  const RunConfig& cfg = t.cfg;
  for (long p : {2L, 3L, 5L}) {
    t.add("gl1", p, "theorem", [=, &cfg](const GroupDatum& g) {
      std::vector<VerificationReport> out;
      for (long a : {0L, 1L, p})
        for (long n : {1L, 2L}) out.push_back(verify_theorem(g, p, {Rational(a)}, n, cfg.order));
      return out;
    });
  }
  t.add("glnxgln:2", 2, "theorem", [&cfg](const GroupDatum& g) {
    std::vector<VerificationReport> out;
    for (const auto& a : {mat2(0, 0, 0, 0), mat2(1, 0, 0, 1), mat2(1, 0, 0, 0)})
      out.push_back(verify_theorem(g, 2, a, 1, cfg.order));
    return out;
  });
  t.add("gl1", 3, "equivariance", [&cfg](const GroupDatum& g) {
    return equivariance_reports(g, 3, {Rational(1)}, 1, cfg.order, 3, cfg.seed);
  });
  t.add("glnxgln:2", 2, "equivariance", [&cfg](const GroupDatum& g) {
    return equivariance_reports(g, 2, mat2(1, 0, 0, 0), 1, cfg.order, 3, cfg.seed);
  });
  t.add("gl1", 2, "fourier_indicator", [](const GroupDatum& g) {
    return std::vector<VerificationReport>{validate_fourier_indicator(g, 2, {Rational(1)}, 1, 2),
                                           validate_fourier_indicator(g, 2, {Rational(3)}, 2, 1)};
  });
  t.add("glnxgln:2", 2, "fourier_indicator", [](const GroupDatum& g) {
    return std::vector<VerificationReport>{validate_fourier_indicator(g, 2, mat2(1, 0, 0, 0), 1, 1)};
  });
  t.add("glnxgln:2", 2, "coset_scaling", [&cfg](const GroupDatum& g) {
    // Orb for p·a + p^{n+1}V equals t^{-e} times Orb for a + p^n V.
    const long p = 2;
    const LatticeVector a = mat2(1, 0, 0, 1);
    VerificationReport r = base_report("coset_scaling", g, p);
    r.parameters = {{"a", vector_string(a)}, {"n", "1"}};
    const RationalFunction lhs = orb_fhat(g, p, scale(a, Rational(p)), 2).value;
    const RationalFunction rhs = orb_fhat(g, p, a, 1).value.shifted(-g.deg_nu_central());
    set_series_comparison(r, lhs.to_series(cfg.order), rhs.to_series(cfg.order), cfg.order);
    if (!(lhs == rhs)) r.outcome = Outcome::kFail;
    return std::vector<VerificationReport>{r};
  });
}

void example_tasks(TaskList& t) {
  const RunConfig& cfg = t.cfg;
  for (long p : {2L, 3L, 5L})
    t.add("gl1", p, "igusa", [=, &cfg](const GroupDatum& g) {
      return std::vector<VerificationReport>{igusa_report(g, p, std::max(cfg.order, 6L), cfg.budget)};
    });
  t.add("glnxgln:2", 2, "igusa", [&cfg](const GroupDatum& g) {
    return std::vector<VerificationReport>{igusa_report(g, 2, 3, cfg.budget)};
  });
  t.add("scaled-adjoint-gl2", 2, "igusa", [&cfg](const GroupDatum& g) {
    return std::vector<VerificationReport>{igusa_report(g, 2, 2, cfg.budget)};
  });
  for (long p : {2L, 3L})
    t.add("gl1", p, "functional_equation", [=, &cfg](const GroupDatum& g) {
      VerificationReport r = base_report("functional_equation", g, p);
      const RationalFunction gamma = functional_equation_gamma(g, p);
      const RationalFunction expected = gamma_p_reflected(p);
      set_series_comparison(r, gamma.to_series(cfg.order), expected.to_series(cfg.order), cfg.order);
      r.values["gamma"] = gamma.pretty();
      if (!(gamma == expected)) r.outcome = Outcome::kFail;
      return std::vector<VerificationReport>{r};
    });
  t.add("glnxgln:2", 2, "gln_display", [&cfg](const GroupDatum& g) {
    return std::vector<VerificationReport>{gln_display_comparison(g, 2, cfg.order)};
  });
  for (const char* name : {"gl1", "glnxgln:2", "glnxgln:3", "scaled-adjoint-gl2"})
    t.add(name, 2, "pairing_depth", [=](const GroupDatum& g) {
      std::vector<VerificationReport> out;
      for (long p : {2L, 3L, 5L}) {
        VerificationReport r = base_report("pairing_depth", g, p);
        const long depth = pairing_depth(g.gram(), p);
        r.values = {{"depth", std::to_string(depth)}};
        r.outcome = depth == 0 ? Outcome::kPass : Outcome::kFail;
        out.push_back(r);
      }
      return out;
    });
}

}  // namespace

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
  TaskList t{cfg, {}};
  const bool all = name == "all";
  bool known = all;
  if (all || name == "lemmas") lemma_tasks(t), known = true;
  if (all || name == "kernel") kernel_tasks(t), known = true;
  if (all || name == "theorem") theorem_tasks(t), known = true;
  if (all || name == "examples") example_tasks(t), known = true;
  if (!known) throw Error("CONFIG", "unknown suite '" + name + "'");
  SuiteResult res;
  res.suite = name;
  res.reports = run_tasks(t.tasks, cfg.workers);
  return res;
}

}  // namespace padic
