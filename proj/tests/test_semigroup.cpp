#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qoinv/semigroup.hpp"

using namespace qoinv;

namespace {

RatVec e2(const char* a, const char* b) { return RatVec{parse_rational(a), parse_rational(b)}; }
RatVec m2(long a, long b) { return RatVec({Rat(a), Rat(b)}, Basis::M); }

QOSemigroup worked_example() {
  return build_semigroup(validate({e2("3/2", "0"), e2("7/4", "0"), e2("2", "1/2")}, 2));
}

QOSemigroup branch(std::vector<const char*> lambdas) {
  std::vector<RatVec> exps;
  for (auto l : lambdas) exps.push_back(RatVec{parse_rational(l)});
  return build_semigroup(validate(exps, 1));
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidInput;
}

}  // namespace

TEST_CASE("validation") {
  SUBCASE("worked example") {
    auto c = validate({e2("3/2", "0"), e2("7/4", "0"), e2("2", "1/2")}, 2);
    CHECK(c.indices == std::vector<Int>{2, 2, 2});
    CHECK(c.normalized);
    CHECK(c.well_ordered);
  }
  SUBCASE("cusp") {
    auto c = validate({RatVec{Rat(3, 2)}}, 1);
    CHECK(c.indices == std::vector<Int>{2});
  }
  SUBCASE("errors") {
    CHECK(code_of([] { validate({e2("3/2", "0"), e2("3/2", "0")}, 2); }) == Errc::NotStrictlyIncreasing);
    CHECK(code_of([] { validate({e2("3/2", "0"), e2("1", "1")}, 2); }) == Errc::NotStrictlyIncreasing);
    CHECK(code_of([] { validate({e2("-1/2", "0")}, 2); }) == Errc::NegativeExponent);
    CHECK(code_of([] { validate({e2("3/2", "0"), e2("5/2", "0")}, 2); }) == Errc::IndexOne);
    CHECK(code_of([] { validate({e2("1", "1")}, 2); }) == Errc::IndexOne);
    CHECK(code_of([] { validate({RatVec{Rat(1, 2), Rat(0)}}, 1); }) == Errc::DimensionMismatch);
  }
  SUBCASE("non-normalized input is accepted with a warning") {
    // variables not well ordered: second column dominates the first
    auto c = validate({e2("0", "3/2")}, 2);
    CHECK_FALSE(c.well_ordered);
    CHECK_FALSE(c.normalized);
    CHECK_FALSE(c.warnings.empty());
    // λ_1 on the first axis needs λ_{1,1} > 1
    auto c2 = validate({e2("1/2", "0")}, 2);
    CHECK_FALSE(c2.normalized);
  }
  SUBCASE("g = 0") {
    auto c = validate({}, 3);
    CHECK(c.g() == 0);
    CHECK(c.normalized);
  }
}

TEST_CASE("worked example semigroup") {
  const QOSemigroup s = worked_example();
  CHECK(s.semigroup_exponents() == std::vector<RatVec>{e2("3/2", "0"), e2("13/4", "0"), e2("27/4", "1/2")});
  CHECK(s.lattice().basis() == std::vector<RatVec>{e2("1/4", "0"), e2("0", "1/2")});
  CHECK(s.to_m(e2("1", "0")) == m2(4, 0));
  CHECK(s.to_m(e2("0", "1")) == m2(0, 2));
  CHECK(s.to_m(s.semigroup_exponents()[0]) == m2(6, 0));
  CHECK(s.to_m(s.semigroup_exponents()[1]) == m2(13, 0));
  CHECK(s.to_m(s.semigroup_exponents()[2]) == m2(27, 1));
  CHECK(s.relations() == IntMat{{3, 0, -2, 0, 0}, {5, 0, 1, -2, 0}, {12, 1, 1, 0, -2}});
  CHECK(s.m_indices() == std::vector<std::size_t>{1, 3});
  CHECK(s.to_m(s.frobenius()) == m2(42, -1));
  CHECK(s.degree() == 8);
}

TEST_CASE("plane branches") {
  SUBCASE("cusp") {
    const QOSemigroup s = branch({"3/2"});
    CHECK(s.semigroup_exponents() == std::vector<RatVec>{RatVec{Rat(3, 2)}});
    CHECK(s.relations() == IntMat{{3, -2}});
    CHECK(s.frobenius() == RatVec{Rat(1, 2)});
  }
  SUBCASE("two characteristic exponents") {
    const QOSemigroup s = branch({"3/2", "13/4"});
    CHECK(s.semigroup_exponents() == std::vector<RatVec>{RatVec{Rat(3, 2)}, RatVec{Rat(19, 4)}});
    CHECK(s.relations() == IntMat{{3, -2, 0}, {8, 1, -2}});
  }
}

TEST_CASE("m indices") {
  CHECK(build_semigroup(validate({}, 2)).m_indices() == std::vector<std::size_t>{1, 1});
  CHECK(build_semigroup(validate({e2("3/2", "1/2")}, 2)).m_indices() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("frobenius vector of the smooth case") {
  const QOSemigroup s = build_semigroup(validate({}, 3));
  CHECK(s.frobenius() == RatVec{Rat(-1), Rat(-1), Rat(-1)});
}

TEST_CASE("membership") {
  const QOSemigroup s = worked_example();
  CHECK(gamma_member(s.frobenius() + e2("1", "1"), s));
  CHECK_FALSE(gamma_member(m2(1, 0), s));
  CHECK(gamma_member(m2(0, 0), s));
  CHECK(gamma_member(m2(19, 0), s));  // λ̄_1 + λ̄_2
  CHECK_FALSE(gamma_member(m2(42, -1), s));
  CHECK_THROWS_AS(gamma_member(RatVec{Rat(1)}, s), Error);
  MembershipOptions tiny{.weight_cap = 10};
  CHECK_THROWS_AS(gamma_member(m2(400, 0), s, tiny), Error);
}

TEST_CASE("membership agrees with plain enumeration") {
  const QOSemigroup s = worked_example();
  for (long a = 0; a <= 40; ++a)
    for (long b = 0; b <= 4; ++b) {
      const RatVec v = s.to_e(m2(a, b));
      CHECK(gamma_member(v, s) == qoinv::testing::brute_gamma_member(v, s.generators()));
    }
}

TEST_CASE("structural properties on random inputs") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 150; ++t) {
    const std::size_t d = 1 + t % 3;
    auto c = qoinv::testing::random_char_exponents(rng, {.d = d, .require_normalized = false});
    const QOSemigroup s = build_semigroup(c);
    const std::size_t g = s.g();
    const auto& bar = s.semigroup_exponents();
    CHECK(semigroup_exponents_recursive(c) == semigroup_exponents_closed_form(c));
    for (std::size_t j = 1; j < g; ++j) {
      CHECK(precedes_eq(s.exponents()[j], bar[j]));
      if (j >= 1 && j + 1 < g) CHECK(precedes(Rat(s.indices()[j]) * bar[j], bar[j + 1]));
    }
    // relation rows: exact identity and coefficient bounds
    for (std::size_t j = 0; j < g; ++j) {
      RatVec sum = RatVec::zero(d);
      for (std::size_t i = 0; i < d + g; ++i) sum += Rat(s.relations()(j, i)) * s.generators()[i];
      CHECK(sum.is_zero());
      for (std::size_t i = 0; i < d; ++i) CHECK(s.relations()(j, i) >= 0);
      for (std::size_t k = 0; k < j; ++k) {
        CHECK(s.relations()(j, d + k) >= 0);
        CHECK(s.relations()(j, d + k) < s.indices()[k]);
      }
      CHECK(s.relations()(j, d + j) == -s.indices()[j]);
    }
    CHECK(s.degree() == lattice_index(s.lattices().front(), s.lattice()));
    // m_i is the first λ̄ with a nonzero i-th coordinate; later ones reach 1 there
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t first = g + 1;
      for (std::size_t j = 0; j < g; ++j)
        if (bar[j][i] != 0) {
          first = j + 1;
          break;
        }
      CHECK(s.m_indices()[i] == first);
      for (std::size_t j = 0; j < g; ++j) {
        if (s.m_indices()[i] < j + 1) CHECK(bar[j][i] >= 1);
        if (j >= 1 && bar[j][i] > 0 && bar[j][i] < 1) CHECK(s.m_indices()[i] == j + 1);
      }
    }
  }
}

TEST_CASE("minimality probe of the Frobenius vector") {
  // γ_0 - e_i misses Γ at some interior point: the shifted vector is not a
  // Frobenius vector.
  const QOSemigroup s = worked_example();
  const std::vector<RatVec> points = qoinv::testing::interior_points(s.lattice(), Rat(3));
  for (std::size_t i = 0; i < 2; ++i) {
    const RatVec shifted = s.frobenius() - RatVec::unit(2, i);
    bool fails_somewhere = false;
    for (const auto& a : points)
      if (!gamma_member(shifted + a, s)) fails_somewhere = true;
    CHECK(fails_somewhere);
  }
}
