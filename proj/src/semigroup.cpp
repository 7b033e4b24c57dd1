#include "qoinv/semigroup.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace qoinv {

namespace {

std::string describe(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

// Columns (λ_{1,i}, ..., λ_{g,i}) weakly decreasing in lexicographic order.
bool has_well_ordered_variables(const std::vector<RatVec>& exps, std::size_t d) {
  std::vector<std::vector<Rat>> columns(d);
  for (const auto& l : exps)
    for (std::size_t i = 0; i < d; ++i) columns[i].push_back(l[i]);
  for (std::size_t i = 0; i + 1 < d; ++i)
    if (columns[i] < columns[i + 1]) return false;
  return true;
}

}  // namespace

CharExponents validate(std::vector<RatVec> exponents, std::size_t d) {
  if (d == 0) throw Error(Errc::InvalidInput, "dimension d must be at least 1");
  for (const auto& l : exponents) {
    if (l.dim() != d) throw Error(Errc::DimensionMismatch, "exponent " + describe(l) + " has wrong length");
    if (l.basis() != Basis::E) throw Error(Errc::BasisMismatch, "characteristic exponents must be in e-coordinates");
    if (!is_nonnegative(l)) throw Error(Errc::NegativeExponent, "exponent " + describe(l));
  }
  for (std::size_t j = 0; j + 1 < exponents.size(); ++j) {
    if (!precedes(exponents[j], exponents[j + 1])) {
      throw Error(Errc::NotStrictlyIncreasing, describe(exponents[j]) + " is not strictly below " +
                                                   describe(exponents[j + 1]));
    }
  }

  CharExponents c;
  c.d = d;
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(RatVec::unit(d, i));
  c.lattices.push_back(Lattice::from_generators(gens, d));
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    gens.push_back(exponents[j]);
    c.lattices.push_back(Lattice::from_generators(gens, d));
    Int n = lattice_index(c.lattices[j], c.lattices[j + 1]);
    if (n < 2) {
      throw Error(Errc::IndexOne, "λ_" + std::to_string(j + 1) + " = " + describe(exponents[j]) +
                                      " lies in the lattice generated by the previous exponents");
    }
    c.indices.push_back(n);
  }
  c.exponents = std::move(exponents);

  c.well_ordered = has_well_ordered_variables(c.exponents, d);
  bool first_rule = true;
  if (!c.exponents.empty()) {
    const RatVec& l1 = c.exponents.front();
    bool axis = true;
    for (std::size_t i = 1; i < d; ++i) axis = axis && l1[i] == 0;
    if (axis && l1[0] <= 1) first_rule = false;
  }
  c.normalized = c.well_ordered && first_rule;
  if (!c.well_ordered) c.warnings.push_back("variables are not well ordered; input is not normalized");
  if (!first_rule) c.warnings.push_back("λ_1 = (λ_11, 0, ..., 0) with λ_11 <= 1; input is not normalized");
  return c;
}

std::vector<RatVec> semigroup_exponents_recursive(const CharExponents& c) {
  std::vector<RatVec> bar;
  for (std::size_t j = 0; j < c.g(); ++j) {
    if (j == 0) {
      bar.push_back(c.exponents[0]);
    } else {
      bar.push_back(Rat(c.indices[j - 1]) * bar[j - 1] + c.exponents[j] - c.exponents[j - 1]);
    }
  }
  return bar;
}

std::vector<RatVec> semigroup_exponents_closed_form(const CharExponents& c) {
  std::vector<RatVec> bar;
  for (std::size_t j = 0; j < c.g(); ++j) {
    RatVec v = c.exponents[j];
    Int product = 1;  // n_{j-1} ... n_{k+1}
    for (std::size_t k = j; k-- > 0;) {
      v += Rat(product * (c.indices[k] - 1)) * c.exponents[k];
      product *= c.indices[k];
    }
    bar.push_back(std::move(v));
  }
  return bar;
}

Int QOSemigroup::degree() const {
  Int n = 1;
  for (const auto& x : indices()) n *= x;
  return n;
}

IntMat relation_matrix(const QOSemigroup& s) {
  const std::size_t d = s.d();
  const std::size_t g = s.g();
  const auto& bar = s.semigroup_exponents();
  const auto& lat = s.lattices();
  IntMat r(g, d + g);
  for (std::size_t j = 0; j < g; ++j) {
    const Int& nj = s.indices()[j];
    RatVec v = Rat(nj) * bar[j];
    for (std::size_t k = j; k-- > 0;) {
      // The class of λ̄_k generates M_k / M_{k-1}, cyclic of order n_k.
      bool found = false;
      for (Int l = 0; l < s.indices()[k]; ++l) {
        RatVec rest = v - Rat(l) * bar[k];
        if (lat[k].contains(rest)) {
          r(j, d + k) = l;
          v = std::move(rest);
          found = true;
          break;
        }
      }
      if (!found) {
        throw Error(Errc::ReductionFailure, "no coefficient for λ̄_" + std::to_string(k + 1) +
                                                " in relation " + std::to_string(j + 1));
      }
    }
    if (!v.is_integral() || !is_nonnegative(v)) {
      throw Error(Errc::NegativeRemainder, "relation " + std::to_string(j + 1) + " leaves remainder " +
                                               describe(v));
    }
    for (std::size_t i = 0; i < d; ++i) r(j, i) = v[i].get_num();
    r(j, d + j) = -nj;
  }
  return r;
}

std::vector<std::size_t> m_indices(const QOSemigroup& s) {
  const std::size_t d = s.d();
  const std::size_t g = s.g();
  const IntMat& r = s.relations();
  std::vector<std::size_t> out(d, g + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      if (r(j, i) != 0) {
        out[i] = j + 1;
        break;
      }
    }
    std::size_t support = g + 1;
    for (std::size_t j = 0; j < g; ++j) {
      if (s.semigroup_exponents()[j][i] != 0) {
        support = j + 1;
        break;
      }
    }
    if (support != out[i]) {
      throw Error(Errc::CrossCheckMismatch, "m_" + std::to_string(i + 1) + " = " + std::to_string(out[i]) +
                                                " from relations but " + std::to_string(support) +
                                                " from supports");
    }
  }
  return out;
}

RatVec frobenius_vector(const QOSemigroup& s) {
  RatVec v = RatVec::zero(s.d());
  for (std::size_t j = 0; j < s.g(); ++j) v += Rat(s.indices()[j] - 1) * s.semigroup_exponents()[j];
  for (std::size_t i = 0; i < s.d(); ++i) v -= RatVec::unit(s.d(), i);
  return v;
}

QOSemigroup build_semigroup(const CharExponents& c) {
  QOSemigroup s;
  s.source_ = c;
  s.bar_ = semigroup_exponents_recursive(c);
  if (s.bar_ != semigroup_exponents_closed_form(c)) {
    throw Error(Errc::CrossCheckMismatch, "recursive and closed-form λ̄ disagree");
  }
  for (std::size_t i = 0; i < c.d; ++i) s.generators_.push_back(RatVec::unit(c.d, i));
  for (const auto& b : s.bar_) s.generators_.push_back(b);
  if (!(Lattice::from_generators(s.generators_, c.d) == s.lattice())) {
    throw Error(Errc::CrossCheckMismatch, "Γ does not generate M_g");
  }
  s.relations_ = relation_matrix(s);
  s.m_indices_ = m_indices(s);
  s.frobenius_ = frobenius_vector(s);
  return s;
}

bool gamma_member(const RatVec& alpha, const QOSemigroup& s, const MembershipOptions& opts) {
  if (alpha.dim() != s.d()) throw Error(Errc::DimensionMismatch, "gamma_member");
  const RatVec target = alpha.basis() == Basis::M ? s.to_e(alpha) : alpha;
  if (!s.lattice().contains(target) || !is_nonnegative(target)) return false;
  const Rat scaled = Rat(s.lattice().denominator()) * coordinate_sum(target);
  if (scaled > Rat(opts.weight_cap)) {
    throw Error(Errc::BudgetExceeded, "target weight " + to_string(scaled) + " exceeds cap " +
                                          to_string(opts.weight_cap));
  }

  const auto& bar = s.semigroup_exponents();
  const auto& lat = s.lattices();
  std::map<std::pair<std::size_t, RatVec>, bool> memo;

  // Choose the multiplicity of λ̄_k for k = level..1; the remainder must stay
  // in the cone and in M_k, and the e_i absorb what is left.
  auto search = [&](auto&& self, std::size_t level, const RatVec& rest) -> bool {
    if (!lat[level].contains(rest)) return false;
    if (level == 0) return true;  // rest ∈ Z^d with nonnegative coordinates
    auto key = std::make_pair(level, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    RatVec r = rest;
    while (is_nonnegative(r)) {
      if (self(self, level - 1, r)) {
        ok = true;
        break;
      }
      r -= bar[level - 1];
    }
    memo.emplace(std::move(key), ok);
    return ok;
  };
  return search(search, s.g(), target);
}

}  // namespace qoinv
