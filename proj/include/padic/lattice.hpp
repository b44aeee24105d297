#pragma once

#include <cstdint>
#include <vector>

#include "padic/rational.hpp"

namespace padic {

/// Coordinates in the fixed basis e_1..e_d of V(O).
using LatticeVector = std::vector<Rational>;
/// Dense rational matrix, row-major.
using RatMatrix = std::vector<std::vector<Rational>>;
/// G_ij = <e_i, e_j>.
using GramMatrix = RatMatrix;

/// Element of V(O/p^m) in the fixed basis.
struct ResidueVec {
  int level = 0;
  std::vector<std::int64_t> coords;
  friend bool operator==(const ResidueVec&, const ResidueVec&) = default;
};

long vec_valuation(const LatticeVector& y, long p);
/// p^{-ν(Y)}; 0 for Y = 0.
Rational vec_norm(const LatticeVector& y, long p);
/// <Z, Y> = Z^T G Y.
Rational pairing(const LatticeVector& z, const GramMatrix& g, const LatticeVector& y);
/// True iff <Z, Y> is integral for every Z in V(O), i.e. G·Y is integral.
bool dual_membership(const LatticeVector& y, const GramMatrix& g, long p);

ResidueVec reduce(const LatticeVector& y, long p, int level);
LatticeVector lift(const ResidueVec& r);
LatticeVector scale(const LatticeVector& y, const Rational& c);
/// Y / p^{ν(Y)}; Y must be nonzero.
LatticeVector primitive_part(const LatticeVector& y, long p);

RatMatrix identity_matrix(std::size_t n);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
LatticeVector mat_vec(const RatMatrix& a, const LatticeVector& v);
RatMatrix transpose(const RatMatrix& a);
/// Inverse of a square matrix over Q; throws ARITH if singular.
RatMatrix mat_inverse(const RatMatrix& a);
Rational determinant(const RatMatrix& a);
bool is_symmetric(const RatMatrix& a);

/// Smith form over Z_(p): U·A·V = D with U, V invertible over Z_(p) and
/// D_ii = p^{exponents[i]} for i < rank, zero elsewhere.
struct SmithForm {
  std::vector<long> exponents;
  RatMatrix U, V;
  std::size_t rank() const { return exponents.size(); }
};

/// Pivots on the entry of least valuation, ties broken row-major.
SmithForm smith_local(const RatMatrix& a, long p);

/// Elementary divisor exponents of G (which must be integral and nondegenerate).
std::vector<long> elementary_divisor_exponents(const GramMatrix& g, long p);

/// min{ν(Y) : Y ∈ span(basis), G·Y integral}. The admissible Y form a
/// lattice inside V_1 whose basis comes from the Smith form of G·B, so the
/// minimum is attained on a basis vector.
long subspace_depth(const std::vector<LatticeVector>& basis, const GramMatrix& g, long p);

/// Brute-force depth of the line through v: scans Y = p^k v for
/// k = -search_level, ... and returns the first k with G·Y integral, minus
/// ν(v). Throws if the scan bound itself qualifies (minimality not certified).
long line_depth_scan(const LatticeVector& v, const GramMatrix& g, long p, int search_level);

/// Largest elementary divisor exponent of G. Equals -min over lines of
/// subspace_depth; zero iff G is unimodular over Z_(p).
long pairing_depth(const GramMatrix& g, long p);

/// Lattice in F^d given by basis columns; grows by insertion of generators.
class LocalLattice {
 public:
  LocalLattice(std::size_t d, long p);
  /// Adds p^m e_i for all i, making the lattice full rank.
  void add_scaled_standard(long m);
  /// Returns true if v was not already in the lattice.
  bool insert(const LatticeVector& v);
  bool contains(const LatticeVector& v) const;
  std::size_t rank() const { return basis_.size(); }
  const std::vector<LatticeVector>& basis() const { return basis_; }
  /// min ν over the dual {Y : <L, Y> ⊆ O}; requires full rank.
  long dual_min_valuation(const GramMatrix& g) const;

 private:
  void rebuild(std::vector<LatticeVector> gens);

  std::size_t d_;
  long p_;
  std::vector<LatticeVector> basis_;
  RatMatrix inverse_;  // valid when full rank
};

}  // namespace padic
