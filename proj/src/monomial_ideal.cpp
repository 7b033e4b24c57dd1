#include "qoinv/monomial_ideal.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "qoinv/combinatorics.hpp"

namespace qoinv {

namespace {

// α ∈ Z_{>=0}·gens by enumerating multiplicities of the last generator first.
bool semigroup_member(const RatVec& alpha, const std::vector<RatVec>& gens, const Lattice& lattice,
                      const MembershipOptions& opts) {
  if (!is_nonnegative(alpha) || !lattice.contains(alpha)) return false;
  const Rat scaled = Rat(lattice.denominator()) * coordinate_sum(alpha);
  if (scaled > Rat(opts.weight_cap)) {
    throw Error(Errc::BudgetExceeded, "target weight " + to_string(scaled) + " exceeds cap");
  }
  std::map<std::pair<std::size_t, RatVec>, bool> memo;
  auto search = [&](auto&& self, std::size_t count, const RatVec& rest) -> bool {
    if (rest.is_zero()) return true;
    if (count == 0) return false;
    auto key = std::make_pair(count, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    RatVec r = rest;
    while (is_nonnegative(r)) {
      if (self(self, count - 1, r)) {
        ok = true;
        break;
      }
      r -= gens[count - 1];
    }
    memo.emplace(std::move(key), ok);
    return ok;
  };
  return search(search, gens.size(), alpha);
}

RatVec sum_of(std::span<const RatVec> vs, const std::vector<std::size_t>& idx, std::size_t dim) {
  RatVec s = RatVec::zero(dim);
  for (auto i : idx) s += vs[i];
  return s;
}

}  // namespace

// ---------------------------------------------------------------- Ambient

Ambient Ambient::normal_cone(Lattice m) {
  Ambient a;
  a.kind_ = Kind::NormalCone;
  a.lattice_ = std::move(m);
  return a;
}

Ambient Ambient::finitely_generated(std::vector<RatVec> generators, std::size_t dim) {
  for (const auto& g : generators) {
    if (g.dim() != dim) throw Error(Errc::DimensionMismatch, "semigroup generator dimension");
    if (g.basis() != Basis::E) throw Error(Errc::BasisMismatch, "semigroup generators must be in e-coordinates");
    if (g.is_zero() || !is_nonnegative(g)) {
      throw Error(Errc::GeneratorOutsideCone, "semigroup generators must lie in the orthant minus 0");
    }
  }
  Ambient a;
  a.kind_ = Kind::FinGen;
  a.lattice_ = Lattice::from_generators(generators, dim);
  a.generators_ = std::move(generators);
  return a;
}

bool Ambient::contains(const RatVec& alpha, const MembershipOptions& opts) const {
  if (alpha.dim() != dim()) throw Error(Errc::DimensionMismatch, "ambient membership");
  if (kind_ == Kind::NormalCone) return is_nonnegative(alpha) && lattice_.contains(alpha);
  return semigroup_member(alpha, generators_, lattice_, opts);
}

// ---------------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(Ambient ambient, std::vector<RatVec> generators, bool minimal)
    : ambient_(std::move(ambient)), generators_(std::move(generators)), minimal_(minimal) {
  for (const auto& g : generators_) {
    if (g.basis() != Basis::E) throw Error(Errc::BasisMismatch, "ideal generators must be in e-coordinates");
    if (!ambient_.contains(g)) throw Error(Errc::NotInAmbient, "ideal generator outside the ambient semigroup");
  }
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(generators_.begin(), generators_.end(), [](const RatVec& g) { return g.is_zero(); });
}

bool member(const RatVec& alpha, const MonomialIdeal& ideal, const MembershipOptions& opts) {
  const Ambient& amb = ideal.ambient();
  if (!amb.contains(alpha, opts)) throw Error(Errc::NotInAmbient, "member: exponent outside the ambient");
  for (const auto& beta : ideal.generators()) {
    if (amb.kind() == Ambient::Kind::NormalCone) {
      if (precedes_eq(beta, alpha)) return true;
    } else if (precedes_eq(beta, alpha) && amb.contains(alpha - beta, opts)) {
      return true;
    }
  }
  return false;
}

MonomialIdeal minimalize(const MonomialIdeal& ideal) {
  std::vector<RatVec> gens = ideal.generators();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Removing redundant generators one at a time keeps the ideal unchanged;
  // what survives is the set of minimal elements, which is unique.
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<RatVec> others;
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (k != i) others.push_back(gens[k]);
    if (member(gens[i], MonomialIdeal(ideal.ambient(), others))) {
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return MonomialIdeal(ideal.ambient(), std::move(gens), true);
}

bool ideal_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ambient() == b.ambient())) throw Error(Errc::AmbientMismatch, "ideals live in different rings");
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const RatVec& g) { return member(g, b); });
}

bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  return ideal_subset(a, b) && ideal_subset(b, a);
}

MonomialIdeal scale_by_monomial(const RatVec& gamma, const MonomialIdeal& ideal) {
  std::vector<RatVec> gens;
  for (const auto& g : ideal.generators()) {
    RatVec s = g + gamma;
    if (!ideal.ambient().contains(s)) {
      throw Error(Errc::GeneratorOutsideCone, "shifted generator leaves the ambient semigroup");
    }
    gens.push_back(std::move(s));
  }
  MonomialIdeal out(ideal.ambient(), std::move(gens));
  if (ideal.ambient().kind() == Ambient::Kind::NormalCone && ideal.minimal()) {
    return MonomialIdeal(out.ambient(), out.generators(), true);
  }
  return minimalize(out);
}

MonomialIdeal log_jacobian_toric(std::span<const RatVec> generators, const Ambient& ambient) {
  const std::size_t d = ambient.dim();
  std::vector<RatVec> sums;
  for_each_subset(generators.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVec> vs;
    for (auto i : idx) vs.push_back(generators[i]);
    if (wedge_nonzero(vs)) sums.push_back(sum_of(generators, idx, d));
  });
  return minimalize(MonomialIdeal(ambient, std::move(sums)));
}

std::vector<ToricJacobianTerm> jacobian_toric_terms(std::span<const RatVec> generators,
                                                    const IntMat& relations) {
  const std::size_t m = generators.size();
  if (m == 0) throw Error(Errc::InvalidInput, "no generators");
  const std::size_t d = generators.front().dim();
  if (relations.cols() != m) throw Error(Errc::DimensionMismatch, "relation vectors must have one entry per generator");
  if (m < d) throw Error(Errc::InvalidInput, "fewer generators than the dimension");
  for (std::size_t r = 0; r < relations.rows(); ++r) {
    RatVec image = RatVec::zero(d);
    for (std::size_t j = 0; j < m; ++j) image += Rat(relations(r, j)) * generators[j];
    if (!image.is_zero()) throw Error(Errc::NotInKernel, "relation " + std::to_string(r + 1) + " is not in ker ψ");
  }
  const std::size_t codim = m - d;
  if (rank(relations) != codim) throw Error(Errc::RankDeficient, "relation matrix rank differs from m - d");

  std::vector<ToricJacobianTerm> terms;
  for_each_subset(relations.rows(), codim, [&](const std::vector<std::size_t>& rows) {
    IntMat kept(codim, m);
    RatVec positive = RatVec::zero(d);
    for (std::size_t k = 0; k < codim; ++k)
      for (std::size_t j = 0; j < m; ++j) {
        kept(k, j) = relations(rows[k], j);
        if (kept(k, j) > 0) positive += Rat(kept(k, j)) * generators[j];
      }
    if (rank(kept) != codim) return;
    for_each_subset(m, d, [&](const std::vector<std::size_t>& cols) {
      std::vector<RatVec> vs;
      for (auto j : cols) vs.push_back(generators[j]);
      if (!wedge_nonzero(vs)) return;
      RatVec exponent = positive;
      for (auto j : complement(cols, m)) exponent -= generators[j];
      ToricJacobianTerm t;
      for (auto j : cols) t.deleted_columns.push_back(j + 1);
      for (auto r : rows) t.kept_rows.push_back(r + 1);
      t.exponent = std::move(exponent);
      terms.push_back(std::move(t));
    });
  });
  return terms;
}

MonomialIdeal jacobian_toric(std::span<const RatVec> generators, const IntMat& relations,
                             const Ambient& ambient) {
  std::vector<RatVec> exps;
  for (auto& t : jacobian_toric_terms(generators, relations)) exps.push_back(std::move(t.exponent));
  return minimalize(MonomialIdeal(ambient, std::move(exps)));
}

std::vector<RatVec> xi_set(const QOSemigroup& s) {
  const std::size_t d = s.d();
  RatVec all = RatVec::zero(d);
  for (std::size_t i = 0; i < d; ++i) all += RatVec::unit(d, i);
  std::vector<RatVec> xi{all};
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t mi = s.m_indices()[i];
    if (mi > s.g()) continue;
    xi.push_back(all - RatVec::unit(d, i) + s.exponents()[mi - 1]);
  }
  return xi;
}

std::vector<RatVec> toric_log_jacobian_exponents(const QOSemigroup& s) {
  const auto& gens = s.generators();
  std::vector<RatVec> out;
  for_each_subset(gens.size(), s.d(), [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVec> vs;
    for (auto i : idx) vs.push_back(gens[i]);
    if (wedge_nonzero(vs)) out.push_back(sum_of(gens, idx, s.d()));
  });
  return out;
}

MonomialIdeal log_jacobian_qo(const QOSemigroup& s) {
  return minimalize(MonomialIdeal(Ambient::normal_cone(s.lattice()), xi_set(s)));
}

MonomialIdeal toric_log_jacobian_qo(const QOSemigroup& s) {
  return log_jacobian_toric(s.generators(), Ambient::normal_cone(s.lattice()));
}

JacobianQO jac_qo(const QOSemigroup& s, bool assume_inclusion) {
  JacobianQO out{log_jacobian_qo(s)};
  if (s.d() >= 3) {
    if (!assume_inclusion) {
      throw Error(Errc::UnsupportedDimension,
                  "equality Jac(S)O_Z = X^γ0 𝒥_g is not established for d >= 3");
    }
    out.lower_bound_only = true;
  } else if (s.d() == 2 && !s.source().normalized) {
    throw Error(Errc::NotNormalized, "surface Jacobian ideal requires a normalized branch");
  }
  out.ideal = scale_by_monomial(s.frobenius(), out.ideal);
  out.not_proper = out.ideal.is_unit();
  return out;
}

}  // namespace qoinv
