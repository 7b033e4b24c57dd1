#include "qoinv/series.hpp"

#include <utility>

namespace qoinv {

TruncatedSeries::TruncatedSeries(std::shared_ptr<const Lattice> lattice, Rat bound)
    : lattice_(std::move(lattice)), bound_(std::move(bound)) {
  for (const auto& v : lattice_->basis()) basis_weights_.push_back(coordinate_sum(v));
}

TruncatedSeries TruncatedSeries::constant(std::shared_ptr<const Lattice> lattice, Rat bound, const Rat& c) {
  TruncatedSeries s(std::move(lattice), std::move(bound));
  s.add_term(Exponent(s.dim()), c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::shared_ptr<const Lattice> lattice, Rat bound, Exponent exp,
                                          const Rat& c) {
  TruncatedSeries s(std::move(lattice), std::move(bound));
  s.add_term(exp, c);
  return s;
}

Rat TruncatedSeries::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat TruncatedSeries::weight(const Exponent& exp) const {
  Rat w = 0;
  for (std::size_t k = 0; k < exp.size(); ++k) w += Rat(exp[k]) * basis_weights_[k];
  return w;
}

void TruncatedSeries::add_term(const Exponent& exp, const Rat& c) {
  if (exp.size() != dim()) throw Error(Errc::DimensionMismatch, "series exponent length");
  if (c == 0) return;
  if (weight(exp) > bound_) return;
  if (!is_nonnegative(lattice_->from_basis(RatVec::from_integers(exp, Basis::M)))) {
    throw Error(Errc::GeneratorOutsideCone, "series exponent outside σ∨");
  }
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (bound_ != o.bound_ || !(*lattice_ == *o.lattice_) || lattice_->basis() != o.lattice_->basis()) {
    throw Error(Errc::BoundMismatch, "series with different bounds or coordinates");
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries p(a.lattice_, a.bound_);
  TruncatedSeries::Exponent e(a.dim());
  for (const auto& [ea, ca] : a.terms_) {
    const Rat wa = a.weight(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (wa + b.weight(eb) > a.bound_) continue;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

TruncatedSeries operator*(const Rat& s, const TruncatedSeries& a) {
  TruncatedSeries p(a.lattice_, a.bound_);
  for (const auto& [e, c] : a.terms_) p.add_term(e, s * c);
  return p;
}

DominantExponent dominant_exponent(const TruncatedSeries& s, const Rat& margin) {
  if (s.is_zero()) throw Error(Errc::ZeroSeries, "dominant exponent of zero");
  const Lattice& m = s.lattice();
  auto in_e = [&](const TruncatedSeries::Exponent& e) {
    return m.from_basis(RatVec::from_integers(e, Basis::M));
  };
  // The candidate is the term of least weight; it must lie below every term.
  const TruncatedSeries::Exponent* best = nullptr;
  Rat best_w;
  for (const auto& [e, c] : s.terms()) {
    Rat w = s.weight(e);
    if (best == nullptr || w < best_w) {
      best = &e;
      best_w = w;
    }
  }
  const RatVec base = in_e(*best);
  DominantExponent out;
  for (const auto& [e, c] : s.terms()) {
    if (!precedes_eq(base, in_e(e))) {
      out.verdict = DominantExponent::Verdict::NotMonomialTimesUnit;
      return out;
    }
  }
  if (s.bound() - best_w < margin) {
    out.verdict = DominantExponent::Verdict::InconclusiveAtBound;
    return out;
  }
  out.exponent = *best;
  out.coefficient = s.coefficient(*best);
  return out;
}

}  // namespace qoinv
