#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "qoinv/error.hpp"
#include "qoinv/rational.hpp"

namespace qoinv {

/// Coordinate system a vector is written in: the canonical basis e_1..e_d of
/// Z^d, or the chosen integral basis of a finer lattice M.
enum class Basis { E, M };

std::string_view basis_name(Basis b) noexcept;

/// Exact rational vector tagged with its coordinate system. Arithmetic
/// between vectors of different tags throws BasisMismatch.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::vector<Rat> coords, Basis basis = Basis::E);
  RatVec(std::initializer_list<Rat> coords, Basis basis = Basis::E);

  static RatVec zero(std::size_t dim, Basis basis = Basis::E);
  static RatVec unit(std::size_t dim, std::size_t i, Basis basis = Basis::E);
  static RatVec from_integers(std::span<const Int> coords, Basis basis);

  std::size_t dim() const noexcept { return coords_.size(); }
  Basis basis() const noexcept { return basis_; }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rat>& coords() const noexcept { return coords_; }

  bool is_zero() const;
  bool is_integral() const;
  /// Throws InvalidInput if some coordinate is not an integer.
  std::vector<Int> to_integers() const;
  /// Same coordinates, different tag. Only for explicit, checked conversions.
  RatVec retagged(Basis basis) const { return RatVec(coords_, basis); }

  RatVec& operator+=(const RatVec& o);
  RatVec& operator-=(const RatVec& o);
  friend RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
  friend RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
  friend RatVec operator-(const RatVec& a);
  friend RatVec operator*(const Rat& s, const RatVec& v);

  friend bool operator==(const RatVec& a, const RatVec& b);
  /// Lexicographic; used only to key ordered containers.
  friend bool operator<(const RatVec& a, const RatVec& b);

 private:
  void check_compatible(const RatVec& o) const;

  std::vector<Rat> coords_;
  Basis basis_ = Basis::E;
};

/// a ⪯ b, i.e. b - a has nonnegative coordinates.
bool precedes_eq(const RatVec& a, const RatVec& b);
/// a ⪯ b and a != b.
bool precedes(const RatVec& a, const RatVec& b);
bool is_nonnegative(const RatVec& v);
/// Sum of coordinates.
Rat coordinate_sum(const RatVec& v);

/// Dense integer matrix with arbitrary-precision entries.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);
  IntMat(std::initializer_list<std::initializer_list<long>> rows);
  static IntMat from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);
  static IntMat identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Int> row(std::size_t r) const;
  std::vector<Int> col(std::size_t c) const;

  IntMat transpose() const;
  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend bool operator==(const IntMat& a, const IntMat& b) = default;

  void swap_rows(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

struct HermiteForm {
  IntMat h;          // row-style Hermite normal form, zero rows last
  IntMat u;          // unimodular, u * m == h
  std::size_t rank;  // number of nonzero rows of h
};

/// Row-style Hermite normal form: echelon with positive pivots and entries
/// above each pivot reduced into [0, pivot).
HermiteForm hnf(const IntMat& m);

/// Invariant factors d_1 | d_2 | ... of the Smith normal form (nonzero ones).
std::vector<Int> smith_invariants(const IntMat& m);

/// A basis of the integer kernel {v in Z^cols : m v = 0}, returned in
/// Hermite normal form. Empty when m is injective.
std::vector<std::vector<Int>> kernel_basis(const IntMat& m);

/// Rank over Q of the matrix whose rows are the given vectors.
std::size_t rank(std::span<const RatVec> rows);
std::size_t rank(const IntMat& m);
/// Determinant of the square matrix whose columns are the given vectors.
Rat determinant(std::span<const RatVec> columns);
Int determinant(const IntMat& m);

/// True iff the d vectors (each of dimension d) are linearly independent.
bool wedge_nonzero(std::span<const RatVec> vectors);

/// v / gcd(v). Throws ZeroVector for v = 0.
std::vector<Int> primitive(std::span<const Int> v);

/// Full-rank lattice in Q^d, stored by a basis in e-coordinates together with
/// the Hermite form of its scaled integer generators.
class Lattice {
 public:
  Lattice() = default;

  static Lattice standard(std::size_t dim);
  /// Lattice generated by the vectors; basis is the Hermite basis.
  /// Throws Singular if the generators do not span Q^d.
  static Lattice from_generators(std::span<const RatVec> generators, std::size_t dim);
  /// Lattice with exactly this basis (kept for coordinates).
  static Lattice from_basis(std::span<const RatVec> basis);

  std::size_t dim() const noexcept { return basis_.size(); }
  /// Basis vectors in e-coordinates.
  const std::vector<RatVec>& basis() const noexcept { return basis_; }
  /// Smallest N with the lattice contained in (1/N) Z^d.
  const Int& denominator() const noexcept { return denominator_; }
  /// Square Hermite form of N * lattice (rows generate it).
  const IntMat& scaled_hnf() const noexcept { return scaled_hnf_; }
  /// |det basis|.
  Rat covolume() const;

  bool contains(const RatVec& v) const;
  /// e-coordinates -> rational coordinates in the lattice basis (tag M).
  RatVec to_basis(const RatVec& v) const;
  /// Basis coordinates (tag M) -> e-coordinates.
  RatVec from_basis(const RatVec& v) const;
  /// Like to_basis but requires membership and returns integers.
  std::vector<Int> integer_coords(const RatVec& v) const;

  /// Same set of points (bases may differ).
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.denominator_ == b.denominator_ && a.scaled_hnf_ == b.scaled_hnf_;
  }

 private:
  void finish();

  std::vector<RatVec> basis_;
  std::vector<std::vector<Rat>> inverse_;  // inverse of the column-basis matrix
  Int denominator_ = 1;
  IntMat scaled_hnf_;
};

/// Index [sup : sub]. Throws NotSublattice when sub is not contained in sup.
Int lattice_index(const Lattice& sub, const Lattice& sup);

/// Throws DimensionMismatch when dimensions differ.
bool lattice_member(const RatVec& v, const Lattice& lattice);

}  // namespace qoinv
