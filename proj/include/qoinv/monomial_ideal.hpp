#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qoinv/lattice.hpp"
#include "qoinv/semigroup.hpp"

namespace qoinv {

/// The semigroup a monomial ideal lives in: either the saturated cone
/// semigroup σ∨ ∩ M (σ∨ the nonnegative orthant in e-coordinates), or a
/// finitely generated Λ ⊂ σ∨ with M = ZΛ.
class Ambient {
 public:
  enum class Kind { NormalCone, FinGen };

  static Ambient normal_cone(Lattice m);
  /// Throws GeneratorOutsideCone if a generator is zero or leaves the orthant.
  static Ambient finitely_generated(std::vector<RatVec> generators, std::size_t dim);

  Kind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return lattice_.dim(); }
  /// M; for FinGen the group generated by Λ.
  const Lattice& lattice() const noexcept { return lattice_; }
  const std::vector<RatVec>& generators() const noexcept { return generators_; }

  /// α (e-coordinates) in the ambient semigroup.
  bool contains(const RatVec& alpha, const MembershipOptions& opts = {}) const;

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.kind_ == b.kind_ && a.lattice_ == b.lattice_ && a.generators_ == b.generators_;
  }

 private:
  Kind kind_ = Kind::NormalCone;
  Lattice lattice_;
  std::vector<RatVec> generators_;
};

/// Monomial ideal given by finitely many exponents (e-coordinates).
class MonomialIdeal {
 public:
  /// Throws NotInAmbient if a generator is outside the ambient semigroup.
  MonomialIdeal(Ambient ambient, std::vector<RatVec> generators, bool minimal = false);

  const Ambient& ambient() const noexcept { return ambient_; }
  const std::vector<RatVec>& generators() const noexcept { return generators_; }
  bool minimal() const noexcept { return minimal_; }
  /// Contains the exponent 0, i.e. the ideal is the whole ring.
  bool is_unit() const;

 private:
  Ambient ambient_;
  std::vector<RatVec> generators_;
  bool minimal_ = false;
};

/// NormalCone: some generator β ⪯ α. FinGen: α - β ∈ Λ for some generator.
bool member(const RatVec& alpha, const MonomialIdeal& ideal, const MembershipOptions& opts = {});

/// Unique minimal generating set; generators sorted.
MonomialIdeal minimalize(const MonomialIdeal& ideal);

/// Every generator of a is a member of b. Throws AmbientMismatch.
bool ideal_subset(const MonomialIdeal& a, const MonomialIdeal& b);
bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b);

/// X^γ · I. Throws GeneratorOutsideCone if a shifted generator leaves the ambient.
MonomialIdeal scale_by_monomial(const RatVec& gamma, const MonomialIdeal& ideal);

/// Logarithmic Jacobian ideal of Z^Λ: sums α_{j_1} + ... + α_{j_d} over
/// linearly independent d-subsets, minimalized in `ambient`.
MonomialIdeal log_jacobian_toric(std::span<const RatVec> generators, const Ambient& ambient);

/// One generator of the Jacobian ideal of Z^Λ with its index data.
struct ToricJacobianTerm {
  std::vector<std::size_t> deleted_columns;  // j_1 < ... < j_d, 1-based
  std::vector<std::size_t> kept_rows;        // i_1 < ... < i_{m-d}, 1-based
  RatVec exponent;                           // Σ ψ(n_i^+) - Σ_{j ∉ J} α_j
};

/// All exponents admitted by the column-wedge and row-rank criterion.
/// Throws RankDeficient or NotInKernel on an invalid presentation.
std::vector<ToricJacobianTerm> jacobian_toric_terms(std::span<const RatVec> generators,
                                                    const IntMat& relations);

/// Jacobian ideal of Z^Λ for the presentation `relations` (rows in ker ψ),
/// minimalized in `ambient`.
MonomialIdeal jacobian_toric(std::span<const RatVec> generators, const IntMat& relations,
                             const Ambient& ambient);

/// Ξ_g in the order it is defined (not minimalized).
std::vector<RatVec> xi_set(const QOSemigroup& s);
/// γ_{i_1} + ... + γ_{i_d} over independent d-subsets (not minimalized).
std::vector<RatVec> toric_log_jacobian_exponents(const QOSemigroup& s);

/// 𝒥_g, minimal, in σ∨ ∩ M.
MonomialIdeal log_jacobian_qo(const QOSemigroup& s);
/// ℐ_g, minimal, in σ∨ ∩ M.
MonomialIdeal toric_log_jacobian_qo(const QOSemigroup& s);

struct JacobianQO {
  MonomialIdeal ideal;
  bool lower_bound_only = false;  // d >= 3 with assume_inclusion
  bool not_proper = false;        // unit ideal
};

/// Jac(S)·O_Z = X^{γ_0} 𝒥_g for d <= 2 (d = 2 requires normalized input).
/// For d >= 3 throws UnsupportedDimension unless assume_inclusion, in which
/// case X^{γ_0} 𝒥_g is returned flagged as a lower bound.
JacobianQO jac_qo(const QOSemigroup& s, bool assume_inclusion = false);

}  // namespace qoinv
