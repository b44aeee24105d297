#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "padic/lattice.hpp"

namespace padic {

/// Group elements are products of GL_k factors, stored as the concatenated
/// row-major factor matrices. Residue elements hold entries mod p^m.
using GroupElement = std::vector<std::int64_t>;
using RatElement = std::vector<Rational>;

/// A reductive group H with a representation ρ on V and the data the
/// kernel computations need (P, ν, ι, θ, pairing, Lie action).
class GroupDatum {
 public:
  virtual ~GroupDatum() = default;

  virtual std::string name() const = 0;
  virtual int dim() const = 0;
  /// Sizes k of the GL_k factors of H.
  virtual std::vector<int> factor_sizes() const = 0;
  int h_dim() const;
  int element_size() const { return h_dim(); }
  /// e with ν(ι(u)) = u^e.
  virtual int deg_nu_central() const = 0;
  virtual GramMatrix gram() const = 0;

  /// out = ρ(h)x mod `mod`; hinv is h^{-1} mod `mod`.
  virtual void act(const std::int64_t* h, const std::int64_t* hinv, const std::int64_t* x,
                   std::int64_t* out, std::int64_t mod) const = 0;
  virtual LatticeVector act_rational(const RatElement& h, const LatticeVector& y) const = 0;
  /// out = dρ(ξ)x mod `mod`, ξ in the Lie algebra (same layout as elements).
  virtual void lie_act(const std::int64_t* xi, const std::int64_t* x, std::int64_t* out,
                       std::int64_t mod) const = 0;

  virtual Rational P(const LatticeVector& x) const = 0;
  virtual std::int64_t P_mod(const std::int64_t* x, std::int64_t mod) const = 0;
  /// ν(h), normalized so that P(h^{-1}X) = ν(h)^{-1} P(X).
  virtual Rational nu(const RatElement& h) const = 0;
  virtual RatElement iota(const Rational& u) const = 0;
  virtual RatElement theta(const RatElement& h) const = 0;

  /// True when {P ≠ 0} is a single open H-orbit.
  virtual bool has_open_orbit() const = 0;
  /// A point X with P(X) ≠ 0.
  virtual LatticeVector base_point() const = 0;
  /// True when H(O) acts transitively on primitive Y with fixed ν(P(Y)),
  /// so the kernel on primitive vectors depends on ν(P(Y)) alone.
  virtual bool kernel_depends_on_valuation() const { return false; }
  /// A primitive Y with ν(P(Y)) = k, if the catalog knows one.
  virtual std::optional<LatticeVector> primitive_rep(long k, long p) const;
  /// h such that θ(h) raises ν(P) by one on primitive representatives and
  /// keeps them primitive.
  virtual std::optional<RatElement> kernel_type_step(long p) const;
};

using DatumPtr = std::shared_ptr<const GroupDatum>;

/// Catalog lookup by name: "gl1", "glnxgln:n", "scaled-adjoint-gl2".
/// Validates the datum by random sampling before returning it.
DatumPtr make_datum(const std::string& name);
std::vector<std::string> catalog_names();

struct ValidationResult {
  int samples = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// Quasi-invariance, θ-equivariance of the pairing, θ² = 1, ρ∘ι = scalar,
/// ν∘ι = u^e, and the homomorphism property, on random rational elements.
ValidationResult validate_datum(const GroupDatum& g, int samples, std::uint64_t seed);

RatElement rat_identity(const GroupDatum& g);
RatElement rat_mul(const GroupDatum& g, const RatElement& a, const RatElement& b);
RatElement rat_inverse(const GroupDatum& g, const RatElement& a);
/// det of ρ(h) on V.
Rational det_rho(const GroupDatum& g, const RatElement& h);
/// Random element with small integer entries and nonzero factor determinants.
/// With integral_unit, the element lies in H(Z_(p)).
RatElement random_rat_element(const GroupDatum& g, std::mt19937_64& rng, bool integral_unit, long p);

GroupElement res_mul(const GroupDatum& g, const GroupElement& a, const GroupElement& b, std::int64_t mod);
GroupElement res_inverse(const GroupDatum& g, const GroupElement& a, std::int64_t mod);
GroupElement reduce_element(const GroupDatum& g, const RatElement& h, std::int64_t mod);
ResidueVec act_residue(const GroupDatum& g, const GroupElement& h, const ResidueVec& x, long p);

/// |GL_k(Z/p^m)| = p^{(m-1)k^2} Π_{i<k}(p^k - p^i).
Integer gl_order(int k, long p, int m);
Integer group_order(const GroupDatum& g, long p, int m);
/// |ker(H(O/p^m) -> H(O/p^{m'}))|, m >= m' >= 1.
Integer reduction_kernel_order(const GroupDatum& g, long p, int m, int m_prime);

/// Default enumeration budget; PADIC_KERNEL_BUDGET overrides it.
std::int64_t default_budget();

/// Calls fn(h, hinv) for each h in H(O/p^m), with h^{-1} computed mod
/// `arith_mod` (a multiple of p^m) so that integer lifts act correctly at
/// a finer level. Throws BUDGET when |H(O/p^m)| exceeds `budget`.
void for_each_group_element(const GroupDatum& g, long p, int m, std::int64_t arith_mod,
                            std::int64_t budget,
                            const std::function<void(const std::int64_t*, const std::int64_t*)>& fn);
/// Materialized enumeration, for tests and small levels.
std::vector<GroupElement> enumerate_group(const GroupDatum& g, long p, int m, std::int64_t budget);

/// All p^{h_dim} elements of the Lie algebra over F_p.
std::vector<GroupElement> lie_quotient_elements(const GroupDatum& g, long p);
/// Checks that ξ ↦ Id + p^{n-1}ξ is a bijection from 𝔥(F_p) onto
/// ker(H(O/p^n) -> H(O/p^{n-1})).
bool lie_bijection_check(const GroupDatum& g, long p, int n, std::int64_t budget);

std::int64_t stabilizer_order(const GroupDatum& g, const ResidueVec& z, long p, std::int64_t budget);

/// Finite-level stabilizer at m compared with the image of the stabilizer
/// at m+1 (of the integer lift of z).
struct StabilizerReport {
  std::int64_t order = 0;        // |Stab_m(z)|
  std::int64_t next_order = 0;   // |Stab_{m+1}(z)|
  std::int64_t image_order = 0;  // |image of Stab_{m+1}(z) in H(O/p^m)|
  bool consistent() const { return image_order == order; }
};
StabilizerReport stabilizer_report(const GroupDatum& g, const ResidueVec& z, long p, std::int64_t budget);

struct ShellOrbit {
  ResidueVec rep;
  std::int64_t size = 0;
  std::int64_t stabilizer = 0;
};
/// Orbits of H(O/p^m) on primitive residue vectors mod p^m. Throws if the
/// orbits fail to partition the primitive vectors.
std::vector<ShellOrbit> orbit_decompose_shell(const GroupDatum& g, long p, int m, std::int64_t budget);

/// Number of primitive vectors in V(O/p^m): p^{dm} - p^{d(m-1)}.
std::int64_t primitive_count(int d, long p, int m);
/// Calls fn on every primitive residue vector mod p^m in lexicographic order.
void for_each_primitive(int d, long p, int m, const std::function<void(const std::int64_t*)>& fn);

}  // namespace padic
