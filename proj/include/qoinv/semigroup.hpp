#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qoinv/lattice.hpp"

namespace qoinv {

/// Validated characteristic exponents λ_1 ≺ ... ≺ λ_g in e-coordinates,
/// with the lattice chain M_0 ⊂ ... ⊂ M_g and the indices n_j = [M_j : M_{j-1}].
struct CharExponents {
  std::size_t d = 0;
  std::vector<RatVec> exponents;
  std::vector<Lattice> lattices;  // M_0 .. M_g
  std::vector<Int> indices;       // n_1 .. n_g
  bool well_ordered = true;
  bool normalized = true;
  std::vector<std::string> warnings;

  std::size_t g() const noexcept { return exponents.size(); }
};

/// Checks nonnegativity, strict increase and n_j >= 2, and computes the
/// lattice chain. Non-normalized input is accepted with a warning.
CharExponents validate(std::vector<RatVec> exponents, std::size_t d);

/// The semigroup Γ generated by e_1..e_d, λ̄_1..λ̄_g together with its
/// relation matrix, m_i indices and minimal Frobenius vector.
class QOSemigroup {
 public:
  std::size_t d() const noexcept { return source_.d; }
  std::size_t g() const noexcept { return source_.g(); }
  const CharExponents& source() const noexcept { return source_; }
  const std::vector<RatVec>& exponents() const noexcept { return source_.exponents; }
  const std::vector<Int>& indices() const noexcept { return source_.indices; }
  const std::vector<Lattice>& lattices() const noexcept { return source_.lattices; }
  /// λ̄_1 .. λ̄_g (e-coordinates).
  const std::vector<RatVec>& semigroup_exponents() const noexcept { return bar_; }
  /// γ_1 .. γ_{d+g} = e_1 .. e_d, λ̄_1 .. λ̄_g (e-coordinates).
  const std::vector<RatVec>& generators() const noexcept { return generators_; }
  /// M = M_g with its Hermite basis; M-coordinates refer to this basis.
  const Lattice& lattice() const noexcept { return source_.lattices.back(); }
  /// g x (d+g) matrix of the canonical binomial relations.
  const IntMat& relations() const noexcept { return relations_; }
  const std::vector<std::size_t>& m_indices() const noexcept { return m_indices_; }
  /// γ_0 in e-coordinates.
  const RatVec& frobenius() const noexcept { return frobenius_; }
  /// n_1 ... n_g.
  Int degree() const;

  RatVec to_m(const RatVec& v) const { return lattice().to_basis(v); }
  RatVec to_e(const RatVec& v) const { return lattice().from_basis(v); }

 private:
  friend QOSemigroup build_semigroup(const CharExponents& c);

  CharExponents source_;
  std::vector<RatVec> bar_;
  std::vector<RatVec> generators_;
  IntMat relations_;
  std::vector<std::size_t> m_indices_;
  RatVec frobenius_;
};

QOSemigroup build_semigroup(const CharExponents& c);

/// Computes λ̄ by the recursion λ̄_{j+1} = n_j λ̄_j + λ_{j+1} - λ_j.
std::vector<RatVec> semigroup_exponents_recursive(const CharExponents& c);
/// Computes λ̄ by the expanded closed form.
std::vector<RatVec> semigroup_exponents_closed_form(const CharExponents& c);

/// Relation coefficients by descending reduction through the lattice chain;
/// row j is (ℓ_1 .. ℓ_d, ℓ_{d+1} .. ℓ_{d+j-1}, -n_j, 0 ..).
IntMat relation_matrix(const QOSemigroup& s);
/// m_i (1-based, g+1 for an all-zero column), cross-checked against supports.
std::vector<std::size_t> m_indices(const QOSemigroup& s);
/// Σ_j (n_j - 1) λ̄_j - Σ_i e_i, in e-coordinates.
RatVec frobenius_vector(const QOSemigroup& s);

struct MembershipOptions {
  /// Largest admissible coordinate sum of the target, measured in units of
  /// 1/N where M ⊂ (1/N) Z^d.
  Int weight_cap = 1000000;
};

/// α ∈ Γ by enumeration of generator multiplicities. α may be tagged e or M.
bool gamma_member(const RatVec& alpha, const QOSemigroup& s, const MembershipOptions& opts = {});

}  // namespace qoinv
