#include <doctest.h>

#include "qoinv/series.hpp"

using namespace qoinv;

namespace {

using Exp = TruncatedSeries::Exponent;

std::shared_ptr<const Lattice> quarter_half() {
  std::vector<RatVec> b{RatVec{Rat(1, 4), Rat(0)}, RatVec{Rat(0), Rat(1, 2)}};
  return std::make_shared<const Lattice>(Lattice::from_generators(b, 2));
}

}  // namespace

TEST_CASE("series arithmetic") {
  auto z = std::make_shared<const Lattice>(Lattice::standard(2));
  const TruncatedSeries one = TruncatedSeries::constant(z, 5, 1);
  const TruncatedSeries x = TruncatedSeries::monomial(z, 5, Exp{1, 0}, 1);
  SUBCASE("unit") { CHECK(one * x == x); }
  SUBCASE("monomials multiply or vanish beyond the bound") {
    const TruncatedSeries a = TruncatedSeries::monomial(z, 5, Exp{2, 1}, 3);
    const TruncatedSeries b = TruncatedSeries::monomial(z, 5, Exp{1, 1}, 2);
    CHECK(a * b == TruncatedSeries::monomial(z, 5, Exp{3, 2}, 6));
    const TruncatedSeries c = TruncatedSeries::monomial(z, 5, Exp{2, 2}, 1);
    CHECK((a * c).is_zero());
  }
  SUBCASE("binomial square") {
    const TruncatedSeries f = one + x;
    TruncatedSeries expected = one;
    expected.add_term(Exp{1, 0}, 2);
    expected.add_term(Exp{2, 0}, 1);
    CHECK(f * f == expected);
  }
  SUBCASE("cancellation prunes terms") {
    CHECK((x - x).is_zero());
    CHECK((Rat(0) * x).is_zero());
  }
  SUBCASE("mismatched bounds") {
    const TruncatedSeries y = TruncatedSeries::monomial(z, 6, Exp{0, 1}, 1);
    try {
      (void)(x * y);
      FAIL("expected BoundMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BoundMismatch);
    }
  }
  SUBCASE("exponents outside the cone are rejected") {
    TruncatedSeries s(z, 5);
    CHECK_THROWS_AS(s.add_term(Exp{-1, 2}, 1), Error);
  }
}

TEST_CASE("weights use e-coordinates") {
  auto m = quarter_half();
  const TruncatedSeries s(m, 1);
  CHECK(s.weight(Exp{1, 1}) == Rat(3, 4));
  CHECK(s.weight(Exp{2, 1}) == 1);
  TruncatedSeries t(m, 1);
  t.add_term(Exp{2, 2}, 1);  // weight 3/2 > 1: dropped
  CHECK(t.is_zero());
}

TEST_CASE("dominant exponent") {
  auto m = quarter_half();
  SUBCASE("a unit") {
    TruncatedSeries s = TruncatedSeries::constant(m, 20, -8);
    s.add_term(Exp{1, 0}, 2);
    s.add_term(Exp{2, 1}, 1);
    const DominantExponent d = dominant_exponent(s);
    CHECK(d.verdict == DominantExponent::Verdict::Dominant);
    CHECK(d.exponent == Exp{0, 0});
    CHECK(d.coefficient == -8);
  }
  SUBCASE("single term") {
    const DominantExponent d = dominant_exponent(TruncatedSeries::monomial(m, 20, Exp{2, 1}, 1));
    CHECK(d.verdict == DominantExponent::Verdict::Dominant);
    CHECK(d.exponent == Exp{2, 1});
  }
  SUBCASE("incomparable minima") {
    TruncatedSeries s = TruncatedSeries::monomial(m, 20, Exp{1, 0}, 1);
    s.add_term(Exp{0, 1}, 1);
    CHECK(dominant_exponent(s).verdict == DominantExponent::Verdict::NotMonomialTimesUnit);
  }
  SUBCASE("too close to the bound") {
    const TruncatedSeries s = TruncatedSeries::monomial(m, 2, Exp{4, 0}, 1);  // weight 1
    CHECK(dominant_exponent(s, Rat(1, 2)).verdict == DominantExponent::Verdict::Dominant);
    CHECK(dominant_exponent(s, Rat(2)).verdict == DominantExponent::Verdict::InconclusiveAtBound);
  }
  SUBCASE("zero series") {
    try {
      dominant_exponent(TruncatedSeries(m, 3));
      FAIL("expected ZeroSeries");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ZeroSeries);
    }
  }
}
