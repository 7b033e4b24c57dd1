#include "qoinv/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace qoinv {

std::string_view basis_name(Basis b) noexcept { return b == Basis::E ? "e" : "M"; }

// ---------------------------------------------------------------- RatVec

RatVec::RatVec(std::vector<Rat> coords, Basis basis) : coords_(std::move(coords)), basis_(basis) {
  for (auto& c : coords_) c.canonicalize();
}

RatVec::RatVec(std::initializer_list<Rat> coords, Basis basis)
    : RatVec(std::vector<Rat>(coords), basis) {}

RatVec RatVec::zero(std::size_t dim, Basis basis) { return RatVec(std::vector<Rat>(dim), basis); }

RatVec RatVec::unit(std::size_t dim, std::size_t i, Basis basis) {
  std::vector<Rat> c(dim);
  c.at(i) = 1;
  return RatVec(std::move(c), basis);
}

RatVec RatVec::from_integers(std::span<const Int> coords, Basis basis) {
  std::vector<Rat> c;
  c.reserve(coords.size());
  for (const auto& x : coords) c.emplace_back(x);
  return RatVec(std::move(c), basis);
}

bool RatVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

bool RatVec::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return is_integer(c); });
}

std::vector<Int> RatVec::to_integers() const {
  std::vector<Int> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    if (!is_integer(c)) throw Error(Errc::InvalidInput, "non-integral coordinate " + to_string(c));
    out.push_back(c.get_num());
  }
  return out;
}

void RatVec::check_compatible(const RatVec& o) const {
  if (o.basis_ != basis_) {
    throw Error(Errc::BasisMismatch, "mixing " + std::string(basis_name(basis_)) + " and " +
                                         std::string(basis_name(o.basis_)) + " coordinates");
  }
  if (o.dim() != dim()) throw Error(Errc::DimensionMismatch, "vector dimensions differ");
}

RatVec& RatVec::operator+=(const RatVec& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RatVec& RatVec::operator-=(const RatVec& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RatVec operator-(const RatVec& a) {
  RatVec r = a;
  for (auto& c : r.coords_) c = -c;
  return r;
}

RatVec operator*(const Rat& s, const RatVec& v) {
  RatVec r = v;
  for (auto& c : r.coords_) c *= s;
  return r;
}

bool operator==(const RatVec& a, const RatVec& b) {
  return a.basis_ == b.basis_ && a.coords_ == b.coords_;
}

bool operator<(const RatVec& a, const RatVec& b) {
  if (a.basis_ != b.basis_) return a.basis_ < b.basis_;
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

bool precedes_eq(const RatVec& a, const RatVec& b) { return is_nonnegative(b - a); }

bool precedes(const RatVec& a, const RatVec& b) { return !(a == b) && precedes_eq(a, b); }

bool is_nonnegative(const RatVec& v) {
  return std::all_of(v.coords().begin(), v.coords().end(), [](const Rat& c) { return c >= 0; });
}

Rat coordinate_sum(const RatVec& v) {
  Rat s = 0;
  for (const auto& c : v.coords()) s += c;
  return s;
}

// ---------------------------------------------------------------- IntMat

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Int> IntMat::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Int> IntMat::col(std::size_t c) const {
  std::vector<Int> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shapes");
  IntMat p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

void IntMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMat::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMat::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

// ---------------------------------------------------------------- normal forms

HermiteForm hnf(const IntMat& m) {
  IntMat h = m;
  IntMat u = IntMat::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Euclid on the column below pivot_row until a single nonzero remains.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t r = pivot_row; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        if (best == h.rows() || abs(h(r, col)) < abs(h(best, col))) best = r;
      }
      if (best == h.rows()) break;
      h.swap_rows(pivot_row, best);
      u.swap_rows(pivot_row, best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        Int q = floor_div(h(r, col), h(pivot_row, col));
        h.add_row_multiple(r, pivot_row, -q);
        u.add_row_multiple(r, pivot_row, -q);
        if (h(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Int q = floor_div(h(r, col), h(pivot_row, col));
      h.add_row_multiple(r, pivot_row, -q);
      u.add_row_multiple(r, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u), pivot_row};
}

std::vector<Int> smith_invariants(const IntMat& m) {
  IntMat a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<Int> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a(r, c) != 0 && (pr == rows || abs(a(r, c)) < abs(a(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return diag;
      a.swap_rows(t, pr);
      for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, t), a(r, pc));
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        Int q = floor_div(a(r, t), a(t, t));
        a.add_row_multiple(r, t, -q);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        Int q = floor_div(a(t, c), a(t, t));
        if (q != 0)
          for (std::size_t r = 0; r < rows; ++r) a(r, c) -= q * a(r, t);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility condition on the remaining block.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != 0) {
            a.add_row_multiple(t, r, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a(t, t)));
  }
  return diag;
}

std::vector<std::vector<Int>> kernel_basis(const IntMat& m) {
  const HermiteForm hf = hnf(m.transpose());
  std::vector<std::vector<Int>> rows;
  for (std::size_t r = hf.rank; r < hf.u.rows(); ++r) rows.push_back(hf.u.row(r));
  if (rows.empty()) return rows;
  const HermiteForm reduced = hnf(IntMat::from_rows(rows, m.cols()));
  std::vector<std::vector<Int>> out;
  for (std::size_t r = 0; r < reduced.rank; ++r) out.push_back(reduced.h.row(r));
  return out;
}

namespace {

// Gaussian elimination over Q on a row-major copy; returns (rank, det).
std::pair<std::size_t, Rat> eliminate(std::vector<std::vector<Rat>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  Rat det = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) {
      det = 0;
      continue;
    }
    if (p != r) {
      std::swap(a[p], a[r]);
      det = -det;
    }
    det *= a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  if (r < rows || rows != cols) det = 0;
  return {r, det};
}

std::vector<std::vector<Rat>> to_rational(const IntMat& m) {
  std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  return a;
}

}  // namespace

std::size_t rank(std::span<const RatVec> rows) {
  std::vector<std::vector<Rat>> a;
  for (const auto& v : rows) a.push_back(v.coords());
  return eliminate(std::move(a)).first;
}

std::size_t rank(const IntMat& m) { return eliminate(to_rational(m)).first; }

Rat determinant(std::span<const RatVec> columns) {
  const std::size_t n = columns.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t c = 0; c < n; ++c) {
    if (columns[c].dim() != n) throw Error(Errc::DimensionMismatch, "determinant needs a square matrix");
    for (std::size_t r = 0; r < n; ++r) a[r][c] = columns[c][r];
  }
  return eliminate(std::move(a)).second;
}

Int determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "determinant needs a square matrix");
  Rat d = eliminate(to_rational(m)).second;
  return d.get_num();
}

bool wedge_nonzero(std::span<const RatVec> vectors) {
  if (vectors.empty()) return true;
  const std::size_t d = vectors.size();
  for (const auto& v : vectors)
    if (v.dim() != d) throw Error(Errc::DimensionMismatch, "wedge needs d vectors of dimension d");
  return determinant(vectors) != 0;
}

std::vector<Int> primitive(std::span<const Int> v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw Error(Errc::ZeroVector, "primitive vector of zero");
  std::vector<Int> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x / g);
  return out;
}

// ---------------------------------------------------------------- Lattice

namespace {

Int common_denominator(std::span<const RatVec> vs) {
  Int n = 1;
  for (const auto& v : vs)
    for (const auto& c : v.coords()) n = lcm(n, c.get_den());
  return n;
}

}  // namespace

Lattice Lattice::standard(std::size_t dim) {
  std::vector<RatVec> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(RatVec::unit(dim, i));
  return from_basis(basis);
}

Lattice Lattice::from_generators(std::span<const RatVec> generators, std::size_t dim) {
  for (const auto& g : generators) {
    if (g.dim() != dim) throw Error(Errc::DimensionMismatch, "generator dimension");
    if (g.basis() != Basis::E) throw Error(Errc::BasisMismatch, "lattice generators must be in e-coordinates");
  }
  const Int n = common_denominator(generators);
  IntMat scaled(generators.size(), dim);
  for (std::size_t r = 0; r < generators.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) scaled(r, c) = Rat(n * generators[r][c]).get_num();
  const HermiteForm hf = hnf(scaled);
  if (hf.rank != dim) throw Error(Errc::Singular, "generators do not span a full-rank lattice");
  Lattice l;
  for (std::size_t r = 0; r < dim; ++r) {
    std::vector<Rat> c(dim);
    for (std::size_t k = 0; k < dim; ++k) c[k] = Rat(hf.h(r, k), n);
    l.basis_.emplace_back(std::move(c), Basis::E);
  }
  l.finish();
  return l;
}

Lattice Lattice::from_basis(std::span<const RatVec> basis) {
  const std::size_t dim = basis.size();
  for (const auto& b : basis) {
    if (b.dim() != dim) throw Error(Errc::DimensionMismatch, "basis must be square");
    if (b.basis() != Basis::E) throw Error(Errc::BasisMismatch, "basis vectors must be in e-coordinates");
  }
  if (determinant(basis) == 0) throw Error(Errc::Singular, "basis is singular");
  Lattice l;
  l.basis_.assign(basis.begin(), basis.end());
  l.finish();
  return l;
}

void Lattice::finish() {
  const std::size_t d = basis_.size();
  denominator_ = common_denominator(basis_);
  IntMat scaled(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) scaled(r, c) = Rat(denominator_ * basis_[r][c]).get_num();
  HermiteForm hf = hnf(scaled);
  scaled_hnf_ = std::move(hf.h);

  // Invert the column matrix B (B[r][c] = basis_[c][r]) by Gauss-Jordan.
  std::vector<std::vector<Rat>> a(d, std::vector<Rat>(2 * d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) a[r][c] = basis_[c][r];
    a[r][d + r] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    Rat inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (std::size_t k = 0; k < 2 * d; ++k) a[r][k] -= f * a[c][k];
    }
  }
  inverse_.assign(d, std::vector<Rat>(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) inverse_[r][c] = a[r][d + c];
}

Rat Lattice::covolume() const { return abs(determinant(basis_)); }

bool Lattice::contains(const RatVec& v) const {
  if (v.dim() != dim()) throw Error(Errc::DimensionMismatch, "lattice membership");
  if (v.basis() != Basis::E) throw Error(Errc::BasisMismatch, "membership expects e-coordinates");
  const std::size_t d = dim();
  std::vector<Int> x(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rat s = denominator_ * v[i];
    if (!is_integer(s)) return false;
    x[i] = s.get_num();
  }
  // Triangular solve against the square upper-triangular Hermite rows.
  for (std::size_t col = 0; col < d; ++col) {
    const Int& pivot = scaled_hnf_(col, col);
    if (x[col] % pivot != 0) return false;
    Int k = x[col] / pivot;
    for (std::size_t c = col; c < d; ++c) x[c] -= k * scaled_hnf_(col, c);
  }
  return true;
}

RatVec Lattice::to_basis(const RatVec& v) const {
  if (v.dim() != dim()) throw Error(Errc::DimensionMismatch, "coordinate change");
  if (v.basis() != Basis::E) throw Error(Errc::BasisMismatch, "to_basis expects e-coordinates");
  std::vector<Rat> out(dim());
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) out[r] += inverse_[r][c] * v[c];
  return RatVec(std::move(out), Basis::M);
}

RatVec Lattice::from_basis(const RatVec& v) const {
  if (v.dim() != dim()) throw Error(Errc::DimensionMismatch, "coordinate change");
  if (v.basis() != Basis::M) throw Error(Errc::BasisMismatch, "from_basis expects M-coordinates");
  RatVec out = RatVec::zero(dim());
  for (std::size_t k = 0; k < dim(); ++k) out += v[k] * basis_[k];
  return out;
}

std::vector<Int> Lattice::integer_coords(const RatVec& v) const {
  RatVec m = to_basis(v);
  if (!m.is_integral()) throw Error(Errc::NotInAmbient, "vector is not in the lattice");
  return m.to_integers();
}

Int lattice_index(const Lattice& sub, const Lattice& sup) {
  if (sub.dim() != sup.dim()) throw Error(Errc::DimensionMismatch, "lattice index");
  for (const auto& b : sub.basis())
    if (!sup.contains(b)) throw Error(Errc::NotSublattice, "sub-lattice basis vector outside the lattice");
  Rat ratio = sub.covolume() / sup.covolume();
  if (!is_integer(ratio)) throw Error(Errc::NonIntegerIndex, "covolume ratio " + to_string(ratio));
  return ratio.get_num();
}

bool lattice_member(const RatVec& v, const Lattice& lattice) { return lattice.contains(v); }

}  // namespace qoinv
