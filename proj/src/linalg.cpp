#include "liealg/linalg.hpp"

#include <algorithm>

namespace liealg {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = Scalar(1);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector length " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_same_size(a.size(), b.size());
  Vector out(a.begin(), a.end());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_same_size(a.size(), b.size());
  Vector out(a.begin(), a.end());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
  return out;
}

Vector scale(const Scalar& s, std::span<const Scalar> v) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

void axpy(Vector& a, const Scalar& s, std::span<const Scalar> b) {
  require_same_size(a.size(), b.size());
  if (s.is_zero()) return;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (!b[k].is_zero()) a[k] += s * b[k];
  }
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows[r].size(), cols);
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_same_size(cols[c].size(), rows);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return liealg::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  }
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  }
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto& x : out.row(r)) x *= s;
  return out;
}

Vector operator*(const Matrix& m, std::span<const Scalar> v) {
  require_same_size(m.cols(), v.size());
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!v[c].is_zero() && !m(r, c).is_zero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

Vector left_multiply(std::span<const Scalar> v, const Matrix& m) {
  require_same_size(m.rows(), v.size());
  Vector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) out[c] += v[r] * m(r, c);
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorCode::DimensionMismatch, "hstack row mismatch");
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
  Matrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    std::copy(top.row(r).begin(), top.row(r).end(), out.row(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::copy(bottom.row(r).begin(), bottom.row(r).end(), out.row(top.rows() + r).begin());
  return out;
}

// ------------------------------------------------------------ elimination

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && m(found, col).is_zero()) ++found;
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      auto a = m.row(found);
      auto b = m.row(pivot_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    Scalar inv = m(pivot_row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(pivot_row, c).is_zero()) m(pivot_row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(pivot_row, c).is_zero()) m(r, c) -= factor * m(pivot_row, c);
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

RrefResult rref(const Matrix& m) {
  // Pivot on the left block only; the identity block records the row operations.
  Matrix augmented = hstack({m, Matrix::identity(m.rows())});
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  const std::size_t width = augmented.cols();
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && augmented(found, col).is_zero()) ++found;
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      auto a = augmented.row(found);
      auto b = augmented.row(pivot_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    Scalar inv = augmented(pivot_row, col).inv();
    for (std::size_t c = col; c < width; ++c) {
      if (!augmented(pivot_row, c).is_zero()) augmented(pivot_row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || augmented(r, col).is_zero()) continue;
      Scalar factor = augmented(r, col);
      for (std::size_t c = col; c < width; ++c) {
        if (!augmented(pivot_row, c).is_zero()) augmented(r, c) -= factor * augmented(pivot_row, c);
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  RrefResult out;
  out.reduced = Matrix(m.rows(), m.cols());
  out.transform = Matrix(m.rows(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.reduced(r, c) = augmented(r, c);
    for (std::size_t c = 0; c < m.rows(); ++c) out.transform(r, c) = augmented(r, m.cols() + c);
  }
  out.rank = pivots.size();
  out.pivots = std::move(pivots);
  return out;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return rref_in_place(copy).size();
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::SingularMatrix, "non-square matrix has no inverse");
  RrefResult r = rref(m);
  if (r.rank != m.rows()) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  return r.transform;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

// --------------------------------------------------------------- Subspace

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

Subspace Subspace::row_space(const Matrix& m) {
  Matrix reduced = m;
  std::vector<std::size_t> pivots = rref_in_place(reduced);
  Subspace s;
  s.ambient_ = m.cols();
  s.basis_ = Matrix(pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::copy(reduced.row(r).begin(), reduced.row(r).end(), s.basis_.row(r).begin());
  }
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return zero(ambient);
  return row_space(Matrix::from_rows(vectors, ambient));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
  return out;
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_) {
    throw Error(ErrorCode::AmbientMismatch,
                "vector length " + std::to_string(v.size()) + " vs ambient " + std::to_string(ambient_));
  }
  // Reduced echelon form: the coordinate on row r is the entry at its pivot.
  Vector coords(dim());
  Vector residual(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    coords[r] = v[pivots_[r]];
    axpy(residual, -coords[r], basis_.row(r));
  }
  if (!liealg::is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::AmbientMismatch, "subspace ambient mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::AmbientMismatch, "subspace_sum of different ambient dimensions");
  }
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Subspace::row_space(vstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::AmbientMismatch, "subspace_intersect of different ambient dimensions");
  }
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
  // c_a A = c_b B  <=>  (c_a, c_b) [A; -B] = 0.
  Matrix stacked = vstack(a.basis(), Scalar(-1) * b.basis());
  Subspace combos = kernel(stacked.transpose());
  std::vector<Vector> vectors;
  for (std::size_t r = 0; r < combos.dim(); ++r) {
    Vector ca(combos.basis().row(r).begin(), combos.basis().row(r).begin() + a.dim());
    vectors.push_back(left_multiply(ca, a.basis()));
  }
  return Subspace::span(n, vectors);
}

bool subspace_contains(const Subspace& a, std::span<const Scalar> v) { return a.contains(v); }

Matrix extend_to_full_basis(const Subspace& a) {
  const std::size_t n = a.ambient_dim();
  Matrix out(n, n);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    std::copy(a.basis().row(r).begin(), a.basis().row(r).end(), out.row(r).begin());
  }
  std::size_t next = a.dim();
  std::size_t p = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (p < a.pivots().size() && a.pivots()[p] == col) {
      ++p;
      continue;
    }
    out(next++, col) = Scalar(1);
  }
  return out;
}

Subspace kernel(const Matrix& a) {
  Matrix reduced = a;
  std::vector<std::size_t> pivots = rref_in_place(reduced);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

LinearSolution solve_linear(const Matrix& a, std::span<const Scalar> rhs) {
  if (rhs.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length mismatch");
  const std::size_t n = a.cols();
  Matrix augmented(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n) = rhs[r];
  }
  std::vector<std::size_t> pivots = rref_in_place(augmented);
  LinearSolution out;
  out.kernel = kernel(a);
  out.consistent = pivots.empty() || pivots.back() != n;
  out.particular = Vector(n);
  if (out.consistent) {
    for (std::size_t r = 0; r < pivots.size(); ++r) out.particular[pivots[r]] = augmented(r, n);
  }
  return out;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& rhs) {
  if (rhs.rows() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs rows mismatch");
  Matrix out(a.cols(), rhs.cols());
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    LinearSolution s = solve_linear(a, rhs.column(c));
    if (!s.consistent) return std::nullopt;
    for (std::size_t r = 0; r < a.cols(); ++r) out(r, c) = s.particular[r];
  }
  return out;
}

}  // namespace liealg
