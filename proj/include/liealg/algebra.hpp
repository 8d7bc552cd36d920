#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "liealg/linalg.hpp"

namespace liealg {

/// Linear map F^source -> F^target; column k holds the image of basis vector k.
struct LinearMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Matrix matrix;

  Vector apply(std::span<const Scalar> v) const { return matrix * v; }
};

/// Finite-dimensional Lie algebra given by structure constants.
///
/// Only the brackets [e_i, e_j] with i < j are stored, so antisymmetry holds
/// by construction; the Jacobi identity is checked by validate().
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Sets [e_i, e_j] = value. Handles i > j by antisymmetry; i == j requires value == 0.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  /// [e_i, e_j] as a coordinate vector (any order of i, j).
  Vector bracket(std::size_t i, std::size_t j) const;
  /// Structure constant c_{ij}^k.
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// Structure-constant equality, ignoring labels.
  bool same_table(const LieAlgebra& other) const {
    return dim_ == other.dim_ && table_ == other.table_;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t dim_ = 0;
  std::vector<Vector> table_;  // pairs (i < j) in lexicographic order
  std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(std::size_t dim, const std::string& prefix = "x");

struct ValidationReport {
  bool ok = true;
  /// First failing triple i < j < k in lexicographic order.
  std::array<std::size_t, 3> triple{};
  Vector residual;
};

ValidationReport validate(const LieAlgebra& l);
Vector bracket_eval(const LieAlgebra& l, std::span<const Scalar> x, std::span<const Scalar> y);
/// Matrix of ad(x): column k = [x, e_k].
Matrix adjoint(const LieAlgebra& l, std::span<const Scalar> x);
Subspace product_space(const LieAlgebra& l, const Subspace& a, const Subspace& b);
Subspace derived_algebra(const LieAlgebra& l);
Subspace center(const LieAlgebra& l);
bool is_subalgebra(const LieAlgebra& l, const Subspace& s);
bool is_ideal(const LieAlgebra& l, const Subspace& s);

struct Restriction {
  LieAlgebra algebra;
  LinearMap inclusion;  // n x dim(I)
};

struct Quotient {
  LieAlgebra algebra;
  LinearMap projection;  // (n - dim I) x n
  /// Lifts of the quotient basis: the complement rows of extend_to_full_basis.
  Matrix lifts;
};

/// Throws NotASubalgebra.
Restriction restrict_to(const LieAlgebra& l, const Subspace& s);
/// Throws NotAnIdeal.
Quotient quotient(const LieAlgebra& l, const Subspace& ideal);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Rewrites l in the basis f_a = sum_k p(a, k) e_k (rows of p are the new
/// basis vectors). change_basis(change_basis(l, p), q) == change_basis(l, q * p).
LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p);
bool is_isomorphism_via(const LieAlgebra& source, const LieAlgebra& target, const Matrix& p);

}  // namespace liealg
