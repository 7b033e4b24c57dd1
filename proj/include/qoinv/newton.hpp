#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qoinv/monomial_ideal.hpp"

namespace qoinv {

/// Rational number or +∞.
struct NuValue {
  bool infinite = false;
  Rat value;

  static NuValue infinity() { return {true, Rat(0)}; }
  friend bool operator==(const NuValue& a, const NuValue& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

/// Support function min_{u ∈ support} <ray, u>. Exponents must be tagged M and
/// the ray is given in coordinates of the dual lattice N. Any dimension.
Rat ord(std::span<const RatVec> support, std::span<const Int> ray);

/// Vertices of the Newton polygon conv(points) + σ∨ for d = 2, in
/// e-coordinates, sorted by increasing first coordinate.
std::vector<RatVec> newton_vertices(std::span<const RatVec> points);

struct FanRay {
  std::vector<Int> ray;  // primitive, N-coordinates
  Rat ord;               // ord of the defining ideal
  bool boundary = false; // ray of σ rather than a polygon edge normal
};

/// Dual fan of the Newton polygon of a monomial ideal in σ∨ ∩ M (d <= 2).
struct DualFan2D {
  std::vector<RatVec> vertices;  // M-coordinates
  std::vector<FanRay> rays;      // boundary rays of σ first, then edge normals
};

/// Throws UnsupportedDimension for d > 2 and AmbientMismatch outside a
/// normal-cone ambient.
DualFan2D dual_fan(const MonomialIdeal& ideal);

/// Rays with positive ord value (the exceptional divisors of the blowup).
std::vector<FanRay> k_set(const DualFan2D& fan);

struct RayRatio {
  std::vector<Int> ray;
  Rat ord_numerator;  // ord of φ (or of J)
  Rat ord_ideal;      // ord of I
  Rat ratio;
};

struct NuBar {
  NuValue value;
  std::vector<RayRatio> table;  // one row per ray of K(I)
};

/// ν̄_I(φ) for a polynomial φ given by its exponents (tag e or M) in σ∨ ∩ M;
/// empty support means φ = 0 and yields +∞. Throws NotProper for the unit ideal.
NuBar nu_bar(std::span<const RatVec> phi_support, const MonomialIdeal& ideal);

/// ν̄_I(J) = min over K(I) of ord_J / ord_I.
NuBar nu_bar_ideal_pair(const MonomialIdeal& j, const MonomialIdeal& i);

}  // namespace qoinv
