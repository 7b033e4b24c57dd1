#include "qoinv/invariants.hpp"

namespace qoinv {

BranchInvariants branch_invariants(const QOSemigroup& s) {
  if (s.d() != 1) throw Error(Errc::UnsupportedDimension, "branch invariants need d = 1");
  BranchInvariants b;
  b.multiplicity = s.degree();
  const Rat n(b.multiplicity);
  b.beta_bar.push_back(b.multiplicity);
  b.jacobian_multiplicity = 0;
  for (std::size_t j = 0; j < s.g(); ++j) {
    Rat beta = n * s.semigroup_exponents()[j][0];
    if (!is_integer(beta)) throw Error(Errc::CrossCheckMismatch, "n λ̄_j is not an integer");
    b.beta_bar.push_back(beta.get_num());
    b.jacobian_multiplicity += (s.indices()[j] - 1) * beta.get_num();
  }
  // e(Jac) = ν_t(X^{γ_0 + γ_1}) = n (γ_0 + γ_1)
  const Rat via_frobenius = n * (s.frobenius()[0] + 1);
  if (via_frobenius != Rat(b.jacobian_multiplicity)) {
    throw Error(Errc::CrossCheckMismatch, "e(Jac) disagrees with n(γ0 + γ1)");
  }
  b.milnor = b.jacobian_multiplicity - b.multiplicity + 1;
  b.frobenius_number = Rat(n * s.frobenius()[0]).get_num();
  return b;
}

PoincareSeries poincare_series(const QOSemigroup& s) {
  PoincareSeries p;
  for (std::size_t j = 0; j < s.g(); ++j) {
    p.numerator.push_back(Rat(s.indices()[j]) * s.semigroup_exponents()[j]);
    p.denominator.push_back(s.semigroup_exponents()[j]);
  }
  for (std::size_t i = 0; i < s.d(); ++i) p.denominator.push_back(RatVec::unit(s.d(), i));
  return p;
}

bool poincare_symmetry_check(const PoincareSeries& p, const RatVec& gamma0, std::size_t d) {
  // (1 - X^{-a}) = -X^{-a}(1 - X^a): each factor contributes one sign and
  // shifts the exponent by -a (numerator) or +a (denominator).
  if (p.denominator.size() < p.numerator.size() || p.denominator.size() - p.numerator.size() != d) {
    return false;
  }
  RatVec shift = RatVec::zero(gamma0.dim(), gamma0.basis());
  for (const auto& a : p.numerator) shift += a;
  for (const auto& a : p.denominator) shift -= a;
  return shift == gamma0;
}

}  // namespace qoinv
