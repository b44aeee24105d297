#pragma once

#include <optional>
#include <string>

#include "padic/charsum.hpp"
#include "padic/groupscheme.hpp"
#include "padic/ratfunc.hpp"
#include "padic/report.hpp"

namespace padic {

/// An integral in t = p^{-s} held as an exact rational function. When some
/// residue classes could not be resolved the value is only correct through
/// t^{exact_through}.
struct ExactIntegral {
  RationalFunction value;
  long exact_through = kInfinity;

  TruncatedSeries series(long order) const;
  bool is_exact() const { return exact_through == kInfinity; }
};

/// vol(a + p^n V(O)) = p^{-nd}.
Rational measure_volume(int d, long p, long n);

enum class ShellStrategy {
  kLifted,    // Hensel tree over the zero locus of P
  kDirect,    // every primitive class mod p^w
  kGroupSum,  // orbit representatives, stabilizer weights and group sums
};

struct ShellIntegral {
  ExactIntegral value;
  int level_used = 0;
  LatticeVector twist;
};

struct EngineOptions {
  std::int64_t budget = 0;  // 0: default_budget()
  int max_level = 14;       // refinement cap for classes where P is singular
  ShellStrategy strategy = ShellStrategy::kLifted;
  int group_sum_level = 0;  // kGroupSum level; 0: max(w, 1)
};

/// ∫_{ν(Z)=0} |P(Z)|^s ψ(<Z, W>) dZ over the open orbit.
ShellIntegral shell_integral(const GroupDatum& g, long p, const LatticeVector& w, const EngineOptions& opt = {});

/// I_n(Y) = ∫_{p^{-n}V(O)} |P(Z)|^s ψ(<Z, Y>) dZ, assembled from shells with
/// the small-Z tail closed as a geometric series.
ExactIntegral I_n(const GroupDatum& g, long p, const LatticeVector& y, long n, const EngineOptions& opt = {});

struct KernelOptions {
  EngineOptions engine;
  /// Reject Y that is not Lie-regular for every shell representative.
  bool require_regular = true;
  /// Levels past ν(Y) tried before NO_STABILIZATION; 0 picks 5, or
  /// 5 + ν(P(Y)) when irregular Y are allowed.
  int max_extra = 0;
};

struct KernelValue {
  LatticeVector y;
  ExactIntegral value;
  long stabilized_at = 0;
  /// I_{ν(Y)} plus the two following shell terms.
  ExactIntegral cross_check;
  bool cross_check_agrees = false;
};

/// κ(ν_s, X, Y): the first I_n, n >= ν(Y), with I_n = I_{n+1} = I_{n+2}.
KernelValue kappa(const GroupDatum& g, long p, const LatticeVector& y, const KernelOptions& opt = {});

/// |Y|^{-s-1} γ_p(-s) for GL_1.
RationalFunction kappa_gl1_closed_form(long p, const LatticeVector& y);

/// Coefficients of ∫_{V(O)} |P|^s through t^order by counting residues
/// mod p^{order+1}.
TruncatedSeries igusa_zeta_counts(const GroupDatum& g, long p, long order, std::int64_t budget = 0);
/// The same integral from the shell engine, as a rational function.
ExactIntegral igusa_zeta(const GroupDatum& g, long p, const EngineOptions& opt = {});
/// Π_{i=1}^{n} (1 - p^{-i})/(1 - p^{-i} t) for det on gl_n.
RationalFunction igusa_gln_product(long p, int n);

/// f̂ for f the indicator of a + p^n V(O), with a unimodular pairing:
/// f̂(Z) = p^{-nd} ψ(<a, Z>) 1[Z ∈ p^{-n} V(O)].
struct FourierIndicator {
  LatticeVector shift;
  long n = 0;
  Rational scale;
  long p = 0;
  GramMatrix gram;
  Cyclotomic evaluate(const LatticeVector& z) const;
};
FourierIndicator fourier_indicator(const GroupDatum& g, long p, const LatticeVector& a, long n);
/// Compares f̂ with the finite Fourier sum on the grid p^{-n-extra} V(O) mod V(O).
VerificationReport validate_fourier_indicator(const GroupDatum& g, long p, const LatticeVector& a, long n,
                                              int extra = 1);

/// Orb(X, f̂, ν_s) = p^{-nd} I_n(a) for f the indicator of a + p^n V(O).
ExactIntegral orb_fhat(const GroupDatum& g, long p, const LatticeVector& a, long n, const EngineOptions& opt = {});
/// ∫_{a + p^n V(O)} κ(ν_s, X, Y) dY.
ExactIntegral rhs_integral(const GroupDatum& g, long p, const LatticeVector& a, long n, const EngineOptions& opt = {});
VerificationReport verify_theorem(const GroupDatum& g, long p, const LatticeVector& a, long n, long order,
                                  const EngineOptions& opt = {});

/// Γ with Orb(f̂, ν_s) = Γ(ν_s)·Orb(f, ν_{-s-d/e}) for f the indicator of V(O).
RationalFunction functional_equation_gamma(const GroupDatum& g, long p, const EngineOptions& opt = {});

/// (1 - t^{-1})/(1 - p^{-n} t), the single-factor closed form for gl_n at |det Y| = 1.
RationalFunction gln_single_gamma_display(long p, int n);
/// κ(Id) and Γ for glnxgln:n against the single-factor display; INFO outcome.
VerificationReport gln_display_comparison(const GroupDatum& g, long p, long order, const EngineOptions& opt = {});

/// Multiplier c with κ(θ(h)Y) = c·κ(Y): |ν(h)|^s |det ρ(h)| as c·t^k.
RationalFunction transport_factor(const GroupDatum& g, long p, const RatElement& h);

void clear_engine_caches();

}  // namespace padic
