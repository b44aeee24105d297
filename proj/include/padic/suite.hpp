#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "padic/kernel.hpp"

namespace padic {

struct RunConfig {
  long order = 4;
  std::uint64_t seed = 1;
  int samples = 20;
  std::int64_t budget = 0;  // 0: default_budget()
  int workers = 1;
  /// Restricts the suite to one catalog group when non-empty.
  std::string group;
};

struct SuiteResult {
  std::string suite;
  std::vector<VerificationReport> reports;
  bool ok() const;
  std::size_t count(Outcome o) const;
  /// One JSON document; byte-identical for identical inputs.
  std::string to_json() const;
  std::string to_csv() const;
};

std::vector<std::string> suite_names();
/// Runs "lemmas", "kernel", "theorem", "examples" or "all".
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

/// Runs tasks on `workers` threads; results keep the task order.
std::vector<VerificationReport> run_tasks(const std::vector<std::function<std::vector<VerificationReport>()>>& tasks,
                                          int workers);

/// Primitive Y, entries below p^2, that are Lie-regular for `z`.
std::vector<LatticeVector> sample_regular(const GroupDatum& g, long p, const LatticeVector& z, int count,
                                          std::uint64_t seed);
/// Primitive Y that are regular for every shell representative mod p.
std::vector<LatticeVector> sample_kernel_regular(const GroupDatum& g, long p, int count, std::uint64_t seed);

/// Σ_h ψ(<hZ, Y>/p^n) = 0 at each n in `levels` for every shell
/// representative Z and sampled regular Y; one report per (Z, level).
std::vector<VerificationReport> char_sum_reports(const GroupDatum& g, long p, const std::vector<int>& levels,
                                                 int samples, std::uint64_t seed, std::int64_t budget);

/// I_n(Y) = I_{n+1}(Y) for n = ν(Y)+3..ν(Y)+5 on sampled Y with ν(Y) = nu.
/// Irregular samples are logged as SKIPPED with NOT_IN_U.
std::vector<VerificationReport> stabilization_reports(const GroupDatum& g, long p, long nu, long order, int samples,
                                                      std::uint64_t seed);

/// Lifted shell integrals against the orbit and group-sum path for twists
/// of depth w <= max_level at every level w <= m <= max_level.
std::vector<VerificationReport> dual_path_reports(const GroupDatum& g, long p, int max_level, std::int64_t budget);

/// Theorem at a and at h·a for sampled h in H(O).
std::vector<VerificationReport> equivariance_reports(const GroupDatum& g, long p, const LatticeVector& a, long n,
                                                     long order, int samples, std::uint64_t seed);

/// Kernel values against |Y|^{-s-1} γ_p(-s) for GL1.
VerificationReport gl1_kernel_report(long p, long nu, long order);
/// κ(Y) at t = 1.
VerificationReport kernel_at_one_report(const GroupDatum& g, long p, const LatticeVector& y);
/// Counting coefficients of ∫|P|^s against the engine's rational function.
VerificationReport igusa_report(const GroupDatum& g, long p, long order, std::int64_t budget);

}  // namespace padic
