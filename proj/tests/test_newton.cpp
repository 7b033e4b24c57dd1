#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qoinv/newton.hpp"

using namespace qoinv;

namespace {

RatVec m2(long a, long b) { return RatVec({Rat(a), Rat(b)}, Basis::M); }

QOSemigroup worked_example() {
  return build_semigroup(validate({RatVec{Rat(3, 2), Rat(0)}, RatVec{Rat(7, 4), Rat(0)}, RatVec{Rat(2), Rat(1, 2)}}, 2));
}

std::vector<std::vector<Int>> rays_of(const DualFan2D& fan) {
  std::vector<std::vector<Int>> out;
  for (const auto& r : fan.rays) out.push_back(r.ray);
  return out;
}

MonomialIdeal ideal_m(const QOSemigroup& s, std::vector<RatVec> gens_m) {
  std::vector<RatVec> e;
  for (const auto& g : gens_m) e.push_back(s.to_e(g));
  return minimalize(MonomialIdeal(Ambient::normal_cone(s.lattice()), e));
}

}  // namespace

TEST_CASE("support function") {
  std::vector<RatVec> j3{m2(4, 2), m2(12, 1)};
  CHECK(ord(j3, std::vector<Int>{1, 8}) == 20);
  CHECK(ord(j3, std::vector<Int>{0, 1}) == 1);
  std::vector<RatVec> one{m2(5, 7)};
  CHECK(ord(one, std::vector<Int>{2, 3}) == 31);
  CHECK_THROWS_AS(ord(std::vector<RatVec>{}, std::vector<Int>{1, 0}), Error);
}

TEST_CASE("dual fan of the logarithmic Jacobian ideal") {
  const QOSemigroup s = worked_example();
  const DualFan2D fan = dual_fan(log_jacobian_qo(s));
  CHECK(rays_of(fan) == std::vector<std::vector<Int>>{{1, 0}, {0, 1}, {1, 8}});
  std::vector<Rat> ords;
  for (const auto& r : fan.rays) ords.push_back(r.ord);
  CHECK(ords == std::vector<Rat>{4, 1, 20});
  CHECK(k_set(fan).size() == 3);
  CHECK(fan.vertices == std::vector<RatVec>{m2(4, 2), m2(12, 1)});
}

TEST_CASE("dual fan corner cases") {
  const Ambient z = Ambient::normal_cone(Lattice::standard(2));
  MonomialIdeal principal(z, {RatVec{Rat(1), Rat(1)}});
  CHECK(rays_of(dual_fan(principal)) == std::vector<std::vector<Int>>{{1, 0}, {0, 1}});
  MonomialIdeal axis(z, {RatVec{Rat(1), Rat(0)}});
  auto k = k_set(dual_fan(axis));
  REQUIRE(k.size() == 1);
  CHECK(k[0].ray == std::vector<Int>{1, 0});
  // a generator on the segment between two others does not create a ray
  MonomialIdeal collinear(z, {RatVec{Rat(0), Rat(4)}, RatVec{Rat(2), Rat(2)}, RatVec{Rat(4), Rat(0)}});
  CHECK(rays_of(dual_fan(collinear)) == rays_of(dual_fan(minimalize(MonomialIdeal(z, {RatVec{Rat(0), Rat(4)}, RatVec{Rat(4), Rat(0)}})))));
  MonomialIdeal unit(z, {RatVec::zero(2)});
  CHECK_THROWS_AS(dual_fan(unit), Error);
  const Ambient z3 = Ambient::normal_cone(Lattice::standard(3));
  CHECK_THROWS_AS(dual_fan(MonomialIdeal(z3, {RatVec{Rat(1), Rat(1), Rat(1)}})), Error);
}

TEST_CASE("nu bar values") {
  const QOSemigroup s = worked_example();
  const MonomialIdeal log = log_jacobian_qo(s);
  CHECK(nu_bar(std::vector<RatVec>{m2(12, 1)}, log).value == NuValue{false, 1});
  const NuBar two = nu_bar(std::vector<RatVec>{m2(16, 3)}, log);
  CHECK(two.value == NuValue{false, 2});
  REQUIRE(two.table.size() == 3);
  CHECK(two.table[0].ratio == 4);
  CHECK(two.table[1].ratio == 3);
  CHECK(two.table[2].ratio == 2);
  CHECK(nu_bar(std::vector<RatVec>{}, log).value == NuValue::infinity());

  const Ambient z = Ambient::normal_cone(Lattice::standard(2));
  MonomialIdeal xy(z, {RatVec{Rat(1), Rat(1)}});
  CHECK(nu_bar(std::vector<RatVec>{RatVec{Rat(2), Rat(3)}}, xy).value == NuValue{false, 2});

  const Ambient line = Ambient::normal_cone(Lattice::standard(1));
  MonomialIdeal ta(line, {RatVec{Rat(3)}});
  CHECK(nu_bar(std::vector<RatVec>{RatVec{Rat(7)}}, ta).value == NuValue{false, Rat(7, 3)});

  CHECK_THROWS_AS(nu_bar(std::vector<RatVec>{m2(1, 1)}, MonomialIdeal(Ambient::normal_cone(s.lattice()), {RatVec::zero(2)})),
                  Error);
}

TEST_CASE("nu bar of ideal pairs") {
  const QOSemigroup s = worked_example();
  const MonomialIdeal log = log_jacobian_qo(s);
  const MonomialIdeal toric = toric_log_jacobian_qo(s);
  CHECK(nu_bar_ideal_pair(log, log).value == NuValue{false, 1});
  std::vector<RatVec> doubled;
  for (const auto& g : qoinv::testing::minkowski_power(log.generators(), 2)) doubled.push_back(g);
  MonomialIdeal sq = minimalize(MonomialIdeal(log.ambient(), doubled));
  CHECK(nu_bar_ideal_pair(sq, log).value == NuValue{false, 2});
  // rays of ℐ_3: (1,0), (0,1), (1,27); ord_ℐ = 4, 1, 58 and ord_𝒥 = 4, 1, 39
  const NuBar pair = nu_bar_ideal_pair(log, toric);
  CHECK(pair.value == NuValue{false, Rat(39, 58)});
  CHECK(rays_of(dual_fan(toric)) == std::vector<std::vector<Int>>{{1, 0}, {0, 1}, {1, 27}});
  // the pairwise hull oracle: min over generators of 𝒥_3
  Rat oracle = -1;
  for (const auto& g : log.generators()) {
    Rat t = qoinv::testing::hull_scaling_oracle(g, toric.generators());
    if (oracle < 0 || t < oracle) oracle = t;
  }
  CHECK(oracle == Rat(39, 58));
}

TEST_CASE("fan correctness and nu bar laws on random surfaces") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const QOSemigroup s = build_semigroup(qoinv::testing::random_char_exponents(rng, {.d = 2}));
    for (const MonomialIdeal& ideal : {log_jacobian_qo(s), toric_log_jacobian_qo(s)}) {
      const DualFan2D fan = dual_fan(ideal);
      std::vector<RatVec> gens_m;
      for (const auto& g : ideal.generators()) gens_m.push_back(s.to_m(g));
      for (const auto& ray : fan.rays) {
        CHECK(primitive(ray.ray) == ray.ray);
        std::size_t attained = 0;
        for (const auto& u : gens_m) {
          Rat pairing = Rat(ray.ray[0]) * u[0] + Rat(ray.ray[1]) * u[1];
          CHECK(pairing >= ray.ord);
          if (pairing == ray.ord) ++attained;
        }
        CHECK(attained >= (ray.boundary ? 1U : 2U));
      }
      for (std::size_t a = 0; a < fan.rays.size(); ++a)
        for (std::size_t b = a + 1; b < fan.rays.size(); ++b)
          CHECK(fan.rays[a].ray[0] * fan.rays[b].ray[1] != fan.rays[a].ray[1] * fan.rays[b].ray[0]);

      // random monomials: oracle agreement, homogeneity, superadditivity
      for (int k = 0; k < 4; ++k) {
        const RatVec a = s.generators()[rng() % s.generators().size()] + s.generators()[rng() % s.generators().size()];
        const RatVec b = s.generators()[rng() % s.generators().size()];
        const Rat na = nu_bar(std::vector<RatVec>{a}, ideal).value.value;
        const Rat nb = nu_bar(std::vector<RatVec>{b}, ideal).value.value;
        CHECK(na == qoinv::testing::hull_scaling_oracle(a, ideal.generators()));
        CHECK(nu_bar(std::vector<RatVec>{Rat(3) * a}, ideal).value.value == 3 * na);
        CHECK(nu_bar(std::vector<RatVec>{a + b}, ideal).value.value >= na + nb);
        for (std::size_t p = 1; p <= 3; ++p)
          if (qoinv::testing::dominated(a, qoinv::testing::minkowski_power(ideal.generators(), p))) CHECK(na >= Rat(static_cast<long>(p)));
      }
    }
  }
}

TEST_CASE("basis invariance") {
  const QOSemigroup s = worked_example();
  const MonomialIdeal log = log_jacobian_qo(s);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 12; ++t) {
    const IntMat u = qoinv::testing::random_unimodular(rng, 2);
    std::vector<RatVec> basis;
    for (std::size_t r = 0; r < 2; ++r) {
      RatVec v = RatVec::zero(2);
      for (std::size_t c = 0; c < 2; ++c) v += Rat(u(r, c)) * s.lattice().basis()[c];
      basis.push_back(v);
    }
    const Lattice other = Lattice::from_basis(basis);
    REQUIRE(other == s.lattice());
    const MonomialIdeal moved(Ambient::normal_cone(other), log.generators());
    for (const auto& phi : {m2(12, 1), m2(16, 3), m2(31, 1)}) {
      const std::vector<RatVec> support{s.to_e(phi)};
      CHECK(nu_bar(support, moved).value == nu_bar(support, log).value);
    }
  }
}
