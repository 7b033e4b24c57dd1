#pragma once

#include <cstddef>
#include <vector>

#include "qoinv/semigroup.hpp"

namespace qoinv {

/// Numerical invariants of a plane branch (d = 1).
struct BranchInvariants {
  Int multiplicity;             // n = n_1 ... n_g
  std::vector<Int> beta_bar;    // β̄_0 = n, β̄_j = n λ̄_j
  Int jacobian_multiplicity;    // Σ (n_j - 1) β̄_j
  Int milnor;                   // e(Jac) - n + 1
  Int frobenius_number;         // n γ_0 = milnor - 1
};

/// Throws UnsupportedDimension unless d = 1.
BranchInvariants branch_invariants(const QOSemigroup& s);

/// P_Γ(X) = Π(1 - X^{n_j λ̄_j}) / (Π(1 - X^{λ̄_j}) Π(1 - X^{e_i})), kept as
/// exponent lists (e-coordinates).
struct PoincareSeries {
  std::vector<RatVec> numerator;    // n_j λ̄_j
  std::vector<RatVec> denominator;  // λ̄_1 .. λ̄_g, e_1 .. e_d
};

PoincareSeries poincare_series(const QOSemigroup& s);

/// P_Γ(X) = (-1)^d X^{γ_0} P_{-Γ}(X) reduced to factor bookkeeping:
/// #denominator - #numerator = d and Σ numerator - Σ denominator = γ_0.
bool poincare_symmetry_check(const PoincareSeries& p, const RatVec& gamma0, std::size_t d);

}  // namespace qoinv
