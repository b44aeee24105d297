// padic-kernel: command-line front end for the kernel library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "padic/suite.hpp"

using namespace padic;

namespace {

struct Common {
  long p = 2;
  std::string group = "gl1";
  long order = 4;
  std::uint64_t seed = 1;
  double budget = 0;
  std::string format = "json";
  std::string out;
  int workers = 1;
};

LatticeVector parse_vector(const std::string& text) {
  LatticeVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.empty()) throw Error("PARSE", "empty vector '" + text + "'");
  return v;
}

// Rows separated by ';', entries by ','.
GramMatrix parse_matrix(const std::string& text) {
  GramMatrix m;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) m.push_back(parse_vector(row));
  for (const auto& r : m)
    if (r.size() != m.size()) throw Error("PARSE", "matrix must be square");
  return m;
}

void emit(const Common& c, const SuiteResult& res) {
  std::string text;
  if (c.format == "json")
    text = res.to_json() + "\n";
  else if (c.format == "csv")
    text = res.to_csv();
  else
    throw Error("CONFIG", "unknown format '" + c.format + "'");
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error("CONFIG", "cannot write " + c.out);
  f << text;
}

VerificationReport series_report(const std::string& check, const GroupDatum& g, long p, const ExactIntegral& v,
                                 long order) {
  VerificationReport r;
  r.check = check;
  r.group = g.name();
  r.p = p;
  r.lhs = v.series(order);
  r.order_compared = r.lhs->trunc_order();
  r.outcome = order <= v.exact_through ? Outcome::kInfo : Outcome::kInconclusive;
  r.values["rational_function"] = v.value.pretty();
  r.parameters["order"] = std::to_string(order);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact p-adic kernel and orbital-integral computations"};
  app.require_subcommand(1);
  Common c;
  auto common = [&c](CLI::App* s, bool group) {
    s->add_option("--p", c.p, "prime");
    if (group) s->add_option("--group", c.group, "catalog group");
    s->add_option("--order", c.order, "series order M");
    s->add_option("--seed", c.seed, "sampling seed");
    s->add_option("--budget,--max-elements", c.budget, "enumeration budget");
    s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--out", c.out, "output path");
  };

  std::string gram, zs, ys, coset, suite = "all";
  int n = 1, samples = 20;
  long level = 1;

  auto* depth = app.add_subcommand("depth", "elementary divisors and depth of a pairing");
  common(depth, false);
  depth->add_option("--gram", gram, "rows separated by ';'")->required();

  auto* cs = app.add_subcommand("char-sum", "group character sum at level n");
  common(cs, true);
  cs->add_option("--Z", zs)->required();
  cs->add_option("--Y", ys)->required();
  cs->add_option("--n", n);

  auto* kern = app.add_subcommand("kernel", "kernel as a series in t");
  common(kern, true);
  kern->add_option("--Y", ys)->required();

  auto* ig = app.add_subcommand("igusa", "Igusa zeta function of P");
  common(ig, true);

  auto* vt = app.add_subcommand("verify-theorem", "orbital integral of f-hat against the kernel integral");
  common(vt, true);
  vt->add_option("--coset", coset)->required();
  vt->add_option("--level", level);

  auto* gm = app.add_subcommand("gamma", "gamma factor of the functional equation");
  common(gm, true);

  auto* st = app.add_subcommand("suite", "run a verification suite");
  common(st, true);
  st->add_option("name", suite, "lemmas|kernel|theorem|examples|all")
      ->check(CLI::IsMember({"lemmas", "kernel", "theorem", "examples", "all"}));
  st->add_option("--workers", c.workers);
  st->add_option("--samples", samples);

  auto* cat = app.add_subcommand("catalog", "list catalog groups");
  common(cat, false);

  CLI11_PARSE(app, argc, argv);

  try {
    require_prime(c.p);
    if (c.budget < 0) throw Error("CONFIG", "budget must be positive");
    if (c.budget > 0) setenv("PADIC_KERNEL_BUDGET", std::to_string(static_cast<long long>(c.budget)).c_str(), 1);
    SuiteResult res;
    if (depth->parsed()) {
      const GramMatrix g = parse_matrix(gram);
      VerificationReport r;
      r.check = "depth";
      r.p = c.p;
      r.parameters["gram"] = gram;
      std::string ex;
      for (long e : elementary_divisor_exponents(g, c.p)) ex += (ex.empty() ? "" : ",") + std::to_string(e);
      r.values = {{"exponents", ex}, {"depth", std::to_string(pairing_depth(g, c.p))}};
      r.outcome = Outcome::kInfo;
      res.reports.push_back(r);
    } else if (cs->parsed()) {
      const DatumPtr g = make_datum(c.group);
      const LatticeVector z = parse_vector(zs), y = parse_vector(ys);
      VerificationReport r;
      r.check = "char_sum";
      r.group = g->name();
      r.p = c.p;
      r.parameters = {{"Z", vector_string(z)}, {"Y", vector_string(y)}, {"n", std::to_string(n)}};
      r.values = {{"sum", group_char_sum(*g, c.p, z, y, n, default_budget()).pretty()},
                  {"lie_regular", lie_regular(*g, c.p, primitive_part(z, c.p), y) ? "true" : "false"}};
      r.outcome = Outcome::kInfo;
      res.reports.push_back(r);
    } else if (kern->parsed()) {
      const DatumPtr g = make_datum(c.group);
      const LatticeVector y = parse_vector(ys);
      const KernelValue k = kappa(*g, c.p, y);
      VerificationReport r = series_report("kernel", *g, c.p, k.value, c.order);
      r.parameters["Y"] = vector_string(y);
      r.values["stabilized_at"] = std::to_string(k.stabilized_at);
      r.values["cross_check"] = k.cross_check_agrees ? "true" : "false";
      if (!k.cross_check_agrees) r.outcome = Outcome::kFail;
      res.reports.push_back(r);
    } else if (ig->parsed()) {
      const DatumPtr g = make_datum(c.group);
      res.reports.push_back(igusa_report(*g, c.p, c.order, default_budget()));
    } else if (vt->parsed()) {
      const DatumPtr g = make_datum(c.group);
      res.reports.push_back(verify_theorem(*g, c.p, parse_vector(coset), level, c.order));
    } else if (gm->parsed()) {
      const DatumPtr g = make_datum(c.group);
      const RationalFunction gamma = functional_equation_gamma(*g, c.p);
      VerificationReport r = series_report("gamma", *g, c.p, {gamma, kInfinity}, c.order);
      res.reports.push_back(r);
    } else if (st->parsed()) {
      RunConfig cfg;
      cfg.order = c.order;
      cfg.seed = c.seed;
      cfg.samples = samples;
      cfg.budget = static_cast<std::int64_t>(c.budget);
      cfg.workers = c.workers;
      if (st->count("--group")) cfg.group = c.group;
      res = run_suite(suite, cfg);
    } else if (cat->parsed()) {
      for (const std::string& name : catalog_names()) {
        const DatumPtr g = make_datum(name);
        VerificationReport r;
        r.check = "catalog";
        r.group = name;
        r.p = c.p;
        r.values = {{"dim", std::to_string(g->dim())},
                    {"h_dim", std::to_string(g->h_dim())},
                    {"e", std::to_string(g->deg_nu_central())},
                    {"open_orbit", g->has_open_orbit() ? "true" : "false"}};
        r.outcome = Outcome::kInfo;
        res.reports.push_back(r);
      }
    }
    emit(c, res);
    return res.ok() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
