#pragma once

#include "padic/cyclotomic.hpp"
#include "padic/groupscheme.hpp"
#include "padic/report.hpp"

namespace padic {

enum class CharSumMethod { kAuto, kDirect, kLayered };

/// Σ_{h ∈ H(O/p^n)} ψ(<hZ, Y>/p^n) for integral Z and ν(Y) >= 0.
///
/// kLayered splits h = h̃₁(1 + p^{n-1}ξ) with h₁ ∈ H(O/p^{n-1}) and
/// ξ ∈ 𝔥(F_p), which turns the inner sum into a Lie-algebra sum that only
/// depends on h₁ mod p. kAuto picks the direct sum when |H(O/p^n)| fits
/// the budget.
Cyclotomic group_char_sum(const GroupDatum& g, long p, const LatticeVector& z, const LatticeVector& y, int n,
                          std::int64_t budget, CharSumMethod method = CharSumMethod::kAuto);

/// Σ_{ξ ∈ 𝔥(F_p)} ψ(<dρ(ξ)Z̄, Y>/p) with ν(Y) = 0.
Cyclotomic lie_char_sum(const GroupDatum& g, long p, const ResidueVec& zbar, const LatticeVector& y);

/// True iff ξ ↦ <dρ(ξ)Z̄, Ȳ> vanishes mod p on all of 𝔥(F_p).
bool lie_character_trivial(const GroupDatum& g, long p, const std::int64_t* zbar, const std::int64_t* ybar);

/// The Lie character at Z is nontrivial for every point of the H(F_p)-orbit
/// of Z̄. This is what makes the group sums vanish for n >= 2.
bool lie_regular(const GroupDatum& g, long p, const LatticeVector& z, const LatticeVector& y);

/// Dual-lattice depth of V₀, the O-span of H(O)·Z₀, from orbit points mod
/// p^m and p^m; throws UNSTABLE if levels m and m+1 disagree.
long d_V0(const GroupDatum& g, long p, const LatticeVector& z0, int m, std::int64_t budget);

/// Membership of Y in U_{Z₀}: the character ξ ↦ ψ(<ξ, Y'>/p) on V₀'⊗F_p is
/// nontrivial, where V₀' is spanned by the orbit of the primitive part of Z₀
/// and Y' = p^{d_{V₀'} - ν(Y)}Y.
bool in_U(const GroupDatum& g, long p, const LatticeVector& z0, const LatticeVector& y, std::int64_t budget);

/// Σ_{ξ ∈ V₀'⊗F_p} ψ(<ξ, Y'>/p) must be zero for Y ∈ U_{Z₀}.
VerificationReport vanishing_lemma_check(const GroupDatum& g, long p, const LatticeVector& z0,
                                         const LatticeVector& y, std::int64_t budget);

std::string vector_string(const LatticeVector& v);

}  // namespace padic
