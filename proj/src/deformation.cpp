#include "qoinv/deformation.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "qoinv/combinatorics.hpp"

namespace qoinv {

Deformation default_deformation(const QOSemigroup& s, Point point) {
  Deformation def;
  def.point = point;
  if (s.g() > 1) def.c.assign(s.g() - 1, Rat(1));
  return def;
}

namespace {

RatVec psi(const QOSemigroup& s, const std::vector<Int>& alpha) {
  RatVec v = RatVec::zero(s.d());
  for (std::size_t i = 0; i < alpha.size(); ++i) v += Rat(alpha[i]) * s.generators()[i];
  return v;
}

RatVec row_weight(const QOSemigroup& s, std::size_t j) {
  return Rat(s.indices()[j]) * s.semigroup_exponents()[j];
}

}  // namespace

void check_deformation(const QOSemigroup& s, const Deformation& def) {
  const std::size_t g = s.g();
  const std::size_t n = s.d() + g;
  if (g > 0 && def.c.size() != g - 1) {
    throw Error(Errc::InvalidInput, "expected " + std::to_string(g - 1) + " coefficients c_j");
  }
  if (g == 0 && !def.c.empty()) throw Error(Errc::InvalidInput, "no coefficients c_j when g = 0");
  for (const auto& t : def.extra_terms) {
    if (t.row < 1 || t.row > g) throw Error(Errc::InvalidInput, "extra term row out of range");
    if (t.alpha.size() != n) throw Error(Errc::DimensionMismatch, "extra term exponent length");
    for (std::size_t i = 0; i < n; ++i) {
      if (t.alpha[i] < 0) throw Error(Errc::NegativeExponent, "extra term exponent");
      if (i >= s.d() + t.row && t.alpha[i] != 0) {
        throw Error(Errc::InvalidInput, "extra term of row j may only involve U_1 .. U_{d+j}");
      }
    }
    if (!precedes(row_weight(s, t.row - 1), psi(s, t.alpha))) {
      throw Error(Errc::OverweightViolation,
                  "extra term of row " + std::to_string(t.row) + " is not above n_j λ̄_j");
    }
  }
}

RMatrix build_R(const QOSemigroup& s, const Deformation& def, const Rat& bound) {
  check_deformation(s, def);
  const std::size_t d = s.d();
  const std::size_t g = s.g();
  auto lattice = std::make_shared<const Lattice>(s.lattice());
  RMatrix r;
  r.rows = g;
  r.cols = d + g;
  r.lattice = lattice;
  r.bound = bound;
  r.max_entry_weight = 0;
  r.entries.assign(g * (d + g), TruncatedSeries(lattice, bound));
  const TruncatedSeries::Exponent zero(d);
  auto add = [&](std::size_t j, std::size_t i, const RatVec& exp_e, const Rat& c) {
    if (c == 0) return;
    const Rat w = coordinate_sum(exp_e);
    if (w > r.max_entry_weight) r.max_entry_weight = w;
    r.entries[j * r.cols + i].add_term(lattice->integer_coords(exp_e), c);
  };
  for (std::size_t j = 0; j < g; ++j) {
    for (std::size_t i = 0; i < d + g; ++i) {
      r.entries[j * r.cols + i].add_term(zero, Rat(s.relations()(j, i)));
    }
    if (def.point == Point::Zero) continue;
    if (j + 1 < g) {
      const RatVec eps = s.semigroup_exponents()[j + 1] - row_weight(s, j);
      add(j, d + j + 1, eps, def.c[j]);
    }
    for (const auto& t : def.extra_terms) {
      if (t.row != j + 1) continue;
      const RatVec exp = psi(s, t.alpha) - row_weight(s, j);
      for (std::size_t i = 0; i < d + g; ++i) {
        if (t.alpha[i] >= 1) add(j, i, exp, t.coeff * Rat(t.alpha[i]));
      }
    }
  }
  return r;
}

std::map<std::vector<std::size_t>, TruncatedSeries> jacobian_minors(const RMatrix& r, std::size_t d) {
  if (r.cols != r.rows + d) throw Error(Errc::DimensionMismatch, "R must have g + d columns");
  if (r.cols > 63) throw Error(Errc::InvalidInput, "too many columns for minor expansion");
  const std::size_t g = r.rows;
  // Laplace expansion along the top remaining row; the row is fixed by the
  // number of remaining columns, so the column mask alone is the memo key.
  std::unordered_map<std::uint64_t, TruncatedSeries> memo;
  auto det = [&](auto& self, std::uint64_t mask) -> TruncatedSeries {
    const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
    if (k == 0) return TruncatedSeries::constant(r.lattice, r.bound, 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t row = g - k;
    TruncatedSeries acc(r.lattice, r.bound);
    int sign = 1;
    for (std::size_t c = 0; c < r.cols; ++c) {
      if (!(mask >> c & 1U)) continue;
      const TruncatedSeries& a = r(row, c);
      if (!a.is_zero()) {
        TruncatedSeries term = a * self(self, mask & ~(std::uint64_t{1} << c));
        if (sign > 0) acc += term;
        else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  std::map<std::vector<std::size_t>, TruncatedSeries> out;
  for_each_subset(r.cols, d, [&](const std::vector<std::size_t>& deleted) {
    std::uint64_t mask = (r.cols == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r.cols) - 1);
    std::vector<std::size_t> key;
    for (auto c : deleted) {
      mask &= ~(std::uint64_t{1} << c);
      key.push_back(c + 1);
    }
    out.emplace(std::move(key), det(det, mask));
  });
  return out;
}

Rat default_bound(const QOSemigroup& s) {
  RatVec total = s.frobenius();
  for (const auto& gamma : s.generators()) total += gamma;
  return 4 * coordinate_sum(total);
}

Rat default_margin(const QOSemigroup& s, const RMatrix& r) {
  return Rat(static_cast<long>(s.g())) * r.max_entry_weight;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

namespace {

MonomialIdeal target_ideal(const QOSemigroup& s, Point point) {
  const MonomialIdeal base = point == Point::Unit ? log_jacobian_qo(s) : toric_log_jacobian_qo(s);
  return scale_by_monomial(s.frobenius(), base);
}

bool exponent_in(const RatVec& alpha, const MonomialIdeal& ideal) {
  return is_nonnegative(alpha) && member(alpha, ideal);
}

}  // namespace

LeadingIdealReport leading_ideal_check(const QOSemigroup& s, const Deformation& def, const CheckOptions& opts) {
  const Rat bound = opts.bound.value_or(default_bound(s));
  if (bound < 0) throw Error(Errc::InvalidInput, "truncation bound must be nonnegative");
  const RMatrix r = build_R(s, def, bound);
  const Rat full_weight = default_margin(s, r);
  LeadingIdealReport rep{.verdict = Verdict::Inconclusive,
                         .point = def.point,
                         .bound = bound,
                         .margin = opts.margin.value_or(full_weight),
                         .exact = bound >= full_weight,
                         .inclusion_only = def.point == Point::Unit && s.d() >= 3,
                         .minors = {},
                         .target = target_ideal(s, def.point),
                         .leading = std::nullopt,
                         .jac_in_target = std::nullopt,
                         .target_in_jac = std::nullopt,
                         .notes = {}};
  if (rep.inclusion_only) rep.notes.push_back("d >= 3: only X^{γ0}𝒥_g ⊆ Jac is checked; equality is open");
  if (def.point == Point::Unit && s.d() == 2 && !s.source().normalized) {
    rep.notes.push_back("input is not normalized; equality is not guaranteed");
  }

  const Lattice& m = s.lattice();
  bool violation = false;
  bool all_monomial = true;
  bool any_inconclusive = false;
  std::vector<RatVec> leading;
  for (auto& [cols, minor] : jacobian_minors(r, s.d())) {
    MinorReport mr{cols, minor, minor.is_zero(), std::nullopt, std::nullopt};
    RatVec shift = s.frobenius();
    for (auto c : cols) shift += s.generators()[c - 1];
    for (const auto& [e, coeff] : minor.terms()) {
      if (!exponent_in(shift + m.from_basis(RatVec::from_integers(e, Basis::M)), rep.target)) violation = true;
    }
    if (mr.zero) {
      if (!rep.exact) any_inconclusive = true;
    } else {
      // An exact minor needs no margin: no term beyond the bound exists.
      mr.dominant = dominant_exponent(minor, rep.exact ? Rat(0) : rep.margin);
      switch (mr.dominant->verdict) {
        case DominantExponent::Verdict::Dominant:
          mr.leading_exponent = shift + m.from_basis(RatVec::from_integers(mr.dominant->exponent, Basis::M));
          leading.push_back(*mr.leading_exponent);
          break;
        case DominantExponent::Verdict::NotMonomialTimesUnit: all_monomial = false; break;
        case DominantExponent::Verdict::InconclusiveAtBound: any_inconclusive = true; break;
      }
    }
    rep.minors.push_back(std::move(mr));
  }

  const Ambient ambient = Ambient::normal_cone(m);
  if (!leading.empty()) rep.leading = minimalize(MonomialIdeal(ambient, leading));

  if (violation) rep.jac_in_target = false;
  else if (rep.exact) rep.jac_in_target = true;

  bool covered = true;
  for (const auto& t : rep.target.generators()) {
    if (!rep.leading || !member(t, *rep.leading)) covered = false;
  }
  if (covered) rep.target_in_jac = true;
  else if (rep.exact && all_monomial && !any_inconclusive) rep.target_in_jac = false;

  auto decided_false = [](const std::optional<bool>& b) { return b.has_value() && !*b; };
  auto decided_true = [](const std::optional<bool>& b) { return b.has_value() && *b; };
  if (rep.inclusion_only) {
    if (decided_true(rep.target_in_jac)) rep.verdict = Verdict::Pass;
    else if (decided_false(rep.target_in_jac)) rep.verdict = Verdict::Fail;
  } else {
    if (decided_false(rep.jac_in_target) || decided_false(rep.target_in_jac)) rep.verdict = Verdict::Fail;
    else if (decided_true(rep.jac_in_target) && decided_true(rep.target_in_jac)) rep.verdict = Verdict::Pass;
  }
  if (rep.verdict == Verdict::Inconclusive && any_inconclusive) {
    rep.notes.push_back("some minor is undecided at this bound; rerun with a larger bound");
  }
  return rep;
}

}  // namespace qoinv
