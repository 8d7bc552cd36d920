#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "liealg/field.hpp"

namespace liealg {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& s, std::span<const Scalar> v);
/// a += s * b
void axpy(Vector& a, const Scalar& s, std::span<const Scalar> b);

/// Dense row-major matrix over Scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& m);
Vector operator*(const Matrix& m, std::span<const Scalar> v);
/// Row vector times matrix: v^T m.
Vector left_multiply(std::span<const Scalar> v, const Matrix& m);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const Matrix& top, const Matrix& bottom);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  /// Invertible row-operation matrix with transform * input == reduced.
  Matrix transform;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
/// In-place reduction without tracking the transform; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);
std::size_t rank(const Matrix& m);
/// Throws SingularMatrix when m is not invertible.
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Subspace of F^n stored as a reduced row-echelon basis without zero rows,
/// so two subspaces are equal exactly when their bases are.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the canonical basis, or nullopt when v is outside.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, std::span<const Scalar> v);

/// Rows 0..dim-1 are the canonical basis of `a`; the remaining rows are the
/// unit vectors at the non-pivot columns in ascending order.
Matrix extend_to_full_basis(const Subspace& a);

struct LinearSolution {
  bool consistent = false;
  Vector particular;
  Subspace kernel;
};

/// Solves A x = rhs. The kernel is reported even when the system is inconsistent.
LinearSolution solve_linear(const Matrix& a, std::span<const Scalar> rhs);
/// Solves A X = B column by column; nullopt when any column is inconsistent.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& rhs);
Subspace kernel(const Matrix& a);

}  // namespace liealg
