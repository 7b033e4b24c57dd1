#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qoinv/monomial_ideal.hpp"
#include "qoinv/semigroup.hpp"
#include "qoinv/series.hpp"

namespace qoinv {

/// Where the t-monomials of the deformation are evaluated: the origin of
/// Z^Γ (every positive-weight t-monomial vanishes) or the unit point of its
/// torus (every t-monomial equals 1).
enum class Point { Zero, Unit };

/// A perturbation c·t^{ψ(α) - n_j λ̄_j}·U^α of the j-th binomial.
struct ExtraTerm {
  std::size_t row = 0;      // j, 1-based
  Rat coeff;
  std::vector<Int> alpha;   // exponent of U_1 .. U_{d+g}; zero beyond d+j
};

/// H_j = h_j + c_j t^{λ̄_{j+1} - n_j λ̄_j} U_{d+j+1} + Σ extra terms of row j.
struct Deformation {
  std::vector<Rat> c;  // c_1 .. c_{g-1}; c_g = 0
  std::vector<ExtraTerm> extra_terms;
  Point point = Point::Unit;
};

/// c_j = 1 for j < g and no extra terms.
Deformation default_deformation(const QOSemigroup& s, Point point);

/// Throws InvalidInput for malformed data and OverweightViolation when some
/// ψ(α) does not lie strictly above n_j λ̄_j.
void check_deformation(const QOSemigroup& s, const Deformation& def);

/// R(p): row j of the logarithmic Jacobian matrix of H_{1,p}..H_{g,p},
/// divided by X^{n_j λ̄_j}.
struct RMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::shared_ptr<const Lattice> lattice;  // M
  Rat bound;
  std::vector<TruncatedSeries> entries;  // row-major
  /// Largest weight of a term of any entry before truncation.
  Rat max_entry_weight;

  const TruncatedSeries& operator()(std::size_t j, std::size_t i) const { return entries[j * cols + i]; }
};

RMatrix build_R(const QOSemigroup& s, const Deformation& def, const Rat& bound);

/// Determinants of the g×g matrices left after deleting d columns, keyed by
/// the deleted columns (1-based, increasing).
std::map<std::vector<std::size_t>, TruncatedSeries> jacobian_minors(const RMatrix& r, std::size_t d);

/// 4·w(γ_0 + γ_1 + ... + γ_{d+g}).
Rat default_bound(const QOSemigroup& s);
/// g times the largest entry weight: beyond it every minor is exact.
Rat default_margin(const QOSemigroup& s, const RMatrix& r);

enum class Verdict { Pass, Fail, Inconclusive };
std::string verdict_name(Verdict v);

struct MinorReport {
  std::vector<std::size_t> deleted_columns;  // 1-based
  TruncatedSeries minor;
  bool zero = false;
  std::optional<DominantExponent> dominant;  // absent for a zero minor
  std::optional<RatVec> leading_exponent;    // γ_0 + Σ γ_i + dominant, e-coordinates
};

struct LeadingIdealReport {
  Verdict verdict = Verdict::Inconclusive;
  Point point = Point::Unit;
  Rat bound;
  Rat margin;
  bool exact = false;                // bound reaches every term of every minor
  bool inclusion_only = false;       // only target ⊆ Jac is claimed (d >= 3 at the unit point)
  std::vector<MinorReport> minors;
  MonomialIdeal target;              // X^{γ_0} 𝒥_g (unit point) or X^{γ_0} ℐ_g (origin)
  std::optional<MonomialIdeal> leading;  // ideal of the certified leading monomials
  std::optional<bool> jac_in_target;     // absent when undecided
  std::optional<bool> target_in_jac;
  std::vector<std::string> notes;
};

struct CheckOptions {
  std::optional<Rat> bound;
  std::optional<Rat> margin;
};

LeadingIdealReport leading_ideal_check(const QOSemigroup& s, const Deformation& def,
                                       const CheckOptions& opts = {});

}  // namespace qoinv
