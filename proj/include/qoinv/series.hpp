#pragma once

#include <map>
#include <memory>
#include <vector>

#include "qoinv/lattice.hpp"

namespace qoinv {

/// Finitely supported series in C[[σ∨ ∩ M]] with rational coefficients.
/// Exponents are integer M-coordinates; every term whose weight (sum of the
/// e-coordinates of its exponent) exceeds the bound is dropped.
class TruncatedSeries {
 public:
  using Exponent = std::vector<Int>;

  TruncatedSeries(std::shared_ptr<const Lattice> lattice, Rat bound);

  static TruncatedSeries constant(std::shared_ptr<const Lattice> lattice, Rat bound, const Rat& c);
  static TruncatedSeries monomial(std::shared_ptr<const Lattice> lattice, Rat bound, Exponent exp,
                                  const Rat& c);

  const std::map<Exponent, Rat>& terms() const noexcept { return terms_; }
  const Rat& bound() const noexcept { return bound_; }
  const Lattice& lattice() const noexcept { return *lattice_; }
  std::size_t dim() const noexcept { return lattice_->dim(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  Rat coefficient(const Exponent& exp) const;
  Rat weight(const Exponent& exp) const;
  /// Throws GeneratorOutsideCone for exponents outside σ∨.
  void add_term(const Exponent& exp, const Rat& c);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rat& s, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.bound_ == b.bound_ && *a.lattice_ == *b.lattice_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const TruncatedSeries& o) const;

  std::shared_ptr<const Lattice> lattice_;
  std::vector<Rat> basis_weights_;
  Rat bound_;
  std::map<Exponent, Rat> terms_;
};

struct DominantExponent {
  enum class Verdict { Dominant, NotMonomialTimesUnit, InconclusiveAtBound };
  Verdict verdict = Verdict::Dominant;
  TruncatedSeries::Exponent exponent;  // valid for Dominant
  Rat coefficient;                     // valid for Dominant
};

/// Finds the unique ⪯-minimum of the support below every other term.
/// A minimum whose weight is closer than `margin` to the bound gives
/// InconclusiveAtBound. Throws ZeroSeries.
DominantExponent dominant_exponent(const TruncatedSeries& s, const Rat& margin = 0);

}  // namespace qoinv
