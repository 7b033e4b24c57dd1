#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qoinv/invariants.hpp"

using namespace qoinv;

namespace {

QOSemigroup branch(std::vector<Rat> lambdas) {
  std::vector<RatVec> exps;
  for (const auto& l : lambdas) exps.push_back(RatVec{l});
  return build_semigroup(validate(exps, 1));
}

std::vector<long> as_longs(const std::vector<Int>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST_CASE("conductor oracle") {
  CHECK(qoinv::testing::numerical_conductor({2, 3}) == 2);
  CHECK(qoinv::testing::numerical_conductor({4, 6, 19}) == 22);
  CHECK(qoinv::testing::numerical_conductor({3, 5}) == 8);
  CHECK(qoinv::testing::numerical_conductor({1}) == 0);
}

TEST_CASE("plane branch invariants") {
  SUBCASE("cusp") {
    const BranchInvariants b = branch_invariants(branch({Rat(3, 2)}));
    CHECK(b.multiplicity == 2);
    CHECK(b.beta_bar == std::vector<Int>{2, 3});
    CHECK(b.jacobian_multiplicity == 3);
    CHECK(b.milnor == 2);
    CHECK(b.frobenius_number == 1);
  }
  SUBCASE("two characteristic exponents") {
    const BranchInvariants b = branch_invariants(branch({Rat(3, 2), Rat(13, 4)}));
    CHECK(b.multiplicity == 4);
    CHECK(b.beta_bar == std::vector<Int>{4, 6, 19});
    CHECK(b.jacobian_multiplicity == 25);
    CHECK(b.milnor == 22);
  }
  SUBCASE("smooth") {
    const BranchInvariants b = branch_invariants(branch({}));
    CHECK(b.multiplicity == 1);
    CHECK(b.jacobian_multiplicity == 0);
    CHECK(b.milnor == 0);
  }
  SUBCASE("refused for surfaces") {
    const QOSemigroup s = build_semigroup(validate({RatVec{Rat(3, 2), Rat(0)}}, 2));
    CHECK_THROWS_AS(branch_invariants(s), Error);
  }
}

TEST_CASE("Milnor number equals the conductor on random branches") {
  std::mt19937_64 rng(1234);
  int checked = 0;
  while (checked < 80) {
    auto c = qoinv::testing::random_char_exponents(rng, {.d = 1, .max_g = 3, .max_den = 60, .max_step = 2});
    const QOSemigroup s = build_semigroup(c);
    if (s.degree() > 120) continue;  // keeps the sieve small
    ++checked;
    const BranchInvariants b = branch_invariants(s);
    CHECK(b.milnor == qoinv::testing::numerical_conductor(as_longs(b.beta_bar)));
    CHECK(Rat(b.jacobian_multiplicity) == Rat(b.multiplicity) * (s.frobenius()[0] + 1));
    for (std::size_t j = 1; j < b.beta_bar.size(); ++j) CHECK(b.beta_bar[j - 1] < b.beta_bar[j]);
    for (std::size_t j = 2; j + 1 < b.beta_bar.size(); ++j) CHECK(s.indices()[j - 1] * b.beta_bar[j] < b.beta_bar[j + 1]);
  }
}

TEST_CASE("Poincare series") {
  const QOSemigroup s =
      build_semigroup(validate({RatVec{Rat(3, 2), Rat(0)}, RatVec{Rat(7, 4), Rat(0)}, RatVec{Rat(2), Rat(1, 2)}}, 2));
  const PoincareSeries p = poincare_series(s);
  std::vector<RatVec> num, den;
  for (const auto& v : p.numerator) num.push_back(s.to_m(v));
  for (const auto& v : p.denominator) den.push_back(s.to_m(v));
  auto m2 = [](long a, long b) { return RatVec({Rat(a), Rat(b)}, Basis::M); };
  CHECK(num == std::vector<RatVec>{m2(12, 0), m2(26, 0), m2(54, 2)});
  CHECK(den == std::vector<RatVec>{m2(6, 0), m2(13, 0), m2(27, 1), m2(4, 0), m2(0, 2)});
  CHECK(poincare_symmetry_check(p, s.frobenius(), 2));
  CHECK_FALSE(poincare_symmetry_check(p, s.frobenius() + RatVec{Rat(1), Rat(0)}, 2));
  CHECK_FALSE(poincare_symmetry_check(p, s.frobenius(), 3));

  const PoincareSeries line = poincare_series(branch({}));
  CHECK(line.numerator.empty());
  CHECK(line.denominator == std::vector<RatVec>{RatVec{Rat(1)}});

  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const QOSemigroup r = build_semigroup(qoinv::testing::random_char_exponents(rng, {.d = 1 + static_cast<std::size_t>(t % 3)}));
    CHECK(poincare_symmetry_check(poincare_series(r), r.frobenius(), r.d()));
  }
}
