#include "qoinv/newton.hpp"

#include <algorithm>

namespace qoinv {

namespace {

// Turns a rational covector into a primitive integer one (same direction).
std::vector<Int> primitive_covector(const std::vector<Rat>& c) {
  Int den = 1;
  for (const auto& x : c) den = lcm(den, x.get_den());
  std::vector<Int> ints;
  for (const auto& x : c) ints.push_back(Rat(x * den).get_num());
  return primitive(ints);
}

// Covector given in e-dual coordinates, expressed in the dual of the lattice basis.
std::vector<Int> to_dual_coords(const std::vector<Rat>& covector_e, const Lattice& m) {
  std::vector<Rat> c;
  for (const auto& v : m.basis()) {
    Rat s = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) s += covector_e[i] * v[i];
    c.push_back(s);
  }
  return primitive_covector(c);
}

void require_normal_cone(const MonomialIdeal& ideal) {
  if (ideal.ambient().kind() != Ambient::Kind::NormalCone) {
    throw Error(Errc::AmbientMismatch, "dual fans are built for ideals of σ∨ ∩ M");
  }
  if (ideal.ambient().dim() > 2) {
    throw Error(Errc::UnsupportedDimension, "dual fans are implemented for d <= 2");
  }
}

std::vector<RatVec> in_m_coords(std::span<const RatVec> exps, const Lattice& m) {
  std::vector<RatVec> out;
  for (const auto& e : exps) {
    RatVec v = e.basis() == Basis::M ? e : m.to_basis(e);
    if (!v.is_integral() || !is_nonnegative(m.from_basis(v))) {
      throw Error(Errc::NotInAmbient, "exponent outside σ∨ ∩ M");
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Rat ord(std::span<const RatVec> support, std::span<const Int> ray) {
  if (support.empty()) throw Error(Errc::EmptySupport, "ord of an empty support");
  Rat best;
  bool first = true;
  for (const auto& u : support) {
    if (u.basis() != Basis::M) throw Error(Errc::BasisMismatch, "ord pairs N with M-coordinates");
    if (u.dim() != ray.size()) throw Error(Errc::DimensionMismatch, "ord pairing");
    Rat s = 0;
    for (std::size_t i = 0; i < ray.size(); ++i) s += Rat(ray[i]) * u[i];
    if (first || s < best) best = s;
    first = false;
  }
  return best;
}

std::vector<RatVec> newton_vertices(std::span<const RatVec> points) {
  for (const auto& p : points)
    if (p.dim() != 2 || p.basis() != Basis::E)
      throw Error(Errc::DimensionMismatch, "Newton polygon expects planar e-coordinates");
  // Minimal elements, sorted by x; their y values then strictly decrease.
  std::vector<RatVec> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  std::vector<RatVec> stairs;
  for (const auto& p : pts) {
    if (!stairs.empty() && precedes_eq(stairs.back(), p)) continue;
    if (!stairs.empty() && stairs.back()[0] == p[0]) continue;
    stairs.push_back(p);
  }
  // Lower convex chain.
  std::vector<RatVec> hull;
  for (const auto& p : stairs) {
    while (hull.size() >= 2) {
      const RatVec& a = hull[hull.size() - 2];
      const RatVec& b = hull.back();
      Rat cross = (b[0] - a[0]) * (p[1] - b[1]) - (b[1] - a[1]) * (p[0] - b[0]);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

DualFan2D dual_fan(const MonomialIdeal& ideal) {
  require_normal_cone(ideal);
  if (ideal.generators().empty() || ideal.is_unit()) {
    throw Error(Errc::NotProper, "dual fan of the zero or unit ideal");
  }
  const Lattice& m = ideal.ambient().lattice();
  const std::size_t d = m.dim();
  const auto& gens = ideal.generators();
  std::vector<RatVec> gens_m = in_m_coords(gens, m);

  DualFan2D fan;
  std::vector<RatVec> verts_e;
  if (d == 2) {
    verts_e = newton_vertices(gens);
  } else {
    verts_e.push_back(*std::min_element(gens.begin(), gens.end()));
  }
  for (const auto& v : verts_e) fan.vertices.push_back(m.to_basis(v));

  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rat> e_star(d);
    e_star[i] = 1;
    fan.rays.push_back({to_dual_coords(e_star, m), 0, true});
  }
  for (std::size_t k = 0; k + 1 < verts_e.size(); ++k) {
    const RatVec& v = verts_e[k];
    const RatVec& w = verts_e[k + 1];
    std::vector<Rat> normal{v[1] - w[1], w[0] - v[0]};
    fan.rays.push_back({to_dual_coords(normal, m), 0, false});
  }
  for (auto& r : fan.rays) r.ord = ord(gens_m, r.ray);
  return fan;
}

std::vector<FanRay> k_set(const DualFan2D& fan) {
  std::vector<FanRay> out;
  for (const auto& r : fan.rays)
    if (r.ord > 0) out.push_back(r);
  return out;
}

namespace {

NuBar ratios_over_k(const std::vector<RatVec>& numerator_m, const MonomialIdeal& ideal) {
  require_normal_cone(ideal);
  if (ideal.is_unit()) throw Error(Errc::NotProper, "ν̄ needs a proper ideal");
  const DualFan2D fan = dual_fan(ideal);
  NuBar out;
  if (numerator_m.empty()) {
    out.value = NuValue::infinity();
    return out;
  }
  bool first = true;
  for (const auto& r : k_set(fan)) {
    RayRatio row{r.ray, ord(numerator_m, r.ray), r.ord, 0};
    row.ratio = row.ord_numerator / row.ord_ideal;
    if (first || row.ratio < out.value.value) out.value = {false, row.ratio};
    first = false;
    out.table.push_back(std::move(row));
  }
  return out;
}

}  // namespace

NuBar nu_bar(std::span<const RatVec> phi_support, const MonomialIdeal& ideal) {
  require_normal_cone(ideal);
  return ratios_over_k(in_m_coords(phi_support, ideal.ambient().lattice()), ideal);
}

NuBar nu_bar_ideal_pair(const MonomialIdeal& j, const MonomialIdeal& i) {
  if (!(j.ambient() == i.ambient())) throw Error(Errc::AmbientMismatch, "ν̄ of ideals in different rings");
  require_normal_cone(i);
  return ratios_over_k(in_m_coords(j.generators(), i.ambient().lattice()), i);
}

}  // namespace qoinv
