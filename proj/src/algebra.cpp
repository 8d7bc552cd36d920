#include "liealg/algebra.hpp"

namespace liealg {

std::vector<std::string> default_labels(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) out.push_back(prefix + std::to_string(k + 1));
  return out;
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), table_(dim * (dim == 0 ? 0 : dim - 1) / 2, Vector(dim)) {
  set_labels(labels.empty() ? default_labels(dim) : std::move(labels));
}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (labels.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "label count mismatch");
  labels_ = std::move(labels);
}

std::size_t LieAlgebra::index(std::size_t i, std::size_t j) const {
  // Pairs (i, j), i < j, enumerated row by row.
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= dim_ || j >= dim_ || value.size() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "bracket index or length out of range");
  }
  if (i == j) {
    if (!is_zero(value)) throw Error(ErrorCode::InvalidParameter, "[e_i, e_i] must vanish");
    return;
  }
  if (i < j) {
    table_[index(i, j)] = value;
  } else {
    table_[index(j, i)] = scale(Scalar(-1), value);
  }
}

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw Error(ErrorCode::DimensionMismatch, "bracket index out of range");
  if (i == j) return Vector(dim_);
  if (i < j) return table_[index(i, j)];
  return scale(Scalar(-1), table_[index(j, i)]);
}

Scalar LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return Scalar();
  if (i < j) return table_[index(i, j)].at(k);
  return -table_[index(j, i)].at(k);
}

Vector bracket_eval(const LieAlgebra& l, std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t n = l.dim();
  if (x.size() != n || y.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "bracket operand length differs from algebra dimension");
  }
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || y[j].is_zero()) continue;
      axpy(out, x[i] * y[j], l.bracket(i, j));
    }
  }
  return out;
}

Matrix adjoint(const LieAlgebra& l, std::span<const Scalar> x) {
  const std::size_t n = l.dim();
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Vector image = bracket_eval(l, x, unit_vector(n, k));
    for (std::size_t r = 0; r < n; ++r) out(r, k) = image[r];
  }
  return out;
}

ValidationReport validate(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  ValidationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector r = bracket_eval(l, ei, l.bracket(j, k));
        r = add(r, bracket_eval(l, ej, l.bracket(k, i)));
        r = add(r, bracket_eval(l, ek, l.bracket(i, j)));
        if (!is_zero(r)) {
          report.ok = false;
          report.triple = {i, j, k};
          report.residual = std::move(r);
          return report;
        }
      }
    }
  }
  return report;
}

Subspace product_space(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
  const std::size_t n = l.dim();
  if (a.ambient_dim() != n || b.ambient_dim() != n) {
    throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension differs from algebra");
  }
  std::vector<Vector> brackets;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t s = 0; s < b.dim(); ++s) {
      Vector v = bracket_eval(l, a.basis().row(r), b.basis().row(s));
      if (!is_zero(v)) brackets.push_back(std::move(v));
    }
  }
  return Subspace::span(n, brackets);
}

Subspace derived_algebra(const LieAlgebra& l) {
  Subspace full = Subspace::full(l.dim());
  return product_space(l, full, full);
}

Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  if (n == 0) return Subspace::zero(0);
  // Row (j, k): sum_i x_i c_{ij}^k = 0.
  Matrix system(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) system(j * n + k, i) = l.structure_constant(i, j, k);
  return kernel(system);
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& s) {
  return s.contains(product_space(l, s, s));
}

bool is_ideal(const LieAlgebra& l, const Subspace& s) {
  return s.contains(product_space(l, Subspace::full(l.dim()), s));
}

Restriction restrict_to(const LieAlgebra& l, const Subspace& s) {
  if (s.ambient_dim() != l.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace ambient mismatch");
  const std::size_t d = s.dim();
  Restriction out{LieAlgebra(d), LinearMap{d, l.dim(), s.basis().transpose()}};
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      Vector v = bracket_eval(l, s.basis().row(a), s.basis().row(b));
      auto coords = s.coordinates(v);
      if (!coords) {
        throw Error(ErrorCode::NotASubalgebra, "subspace is not closed under the bracket",
                    "basis rows " + std::to_string(a) + "," + std::to_string(b));
      }
      out.algebra.set_bracket(a, b, *coords);
    }
  }
  return out;
}

Quotient quotient(const LieAlgebra& l, const Subspace& ideal) {
  const std::size_t n = l.dim();
  if (ideal.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "subspace ambient mismatch");
  if (!is_ideal(l, ideal)) throw Error(ErrorCode::NotAnIdeal, "subspace is not an ideal");
  const std::size_t d = ideal.dim();
  const std::size_t m = n - d;
  Matrix full = extend_to_full_basis(ideal);
  // Coordinates of v in the extended basis: c with c^T full = v^T, i.e. c = full^{-T} v.
  Matrix to_coords = inverse(full).transpose();
  Quotient out{LieAlgebra(m), LinearMap{n, m, Matrix(m, n)}, Matrix(m, n)};
  for (std::size_t a = 0; a < m; ++a) {
    std::copy(full.row(d + a).begin(), full.row(d + a).end(), out.lifts.row(a).begin());
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < m; ++a) out.projection.matrix(a, k) = to_coords(d + a, k);
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      Vector v = bracket_eval(l, out.lifts.row(a), out.lifts.row(b));
      out.algebra.set_bracket(a, b, out.projection.apply(v));
    }
  }
  // The projection must be a homomorphism.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = out.projection.apply(l.bracket(i, j));
      Vector rhs = bracket_eval(out.algebra, out.projection.matrix.column(i), out.projection.matrix.column(j));
      if (lhs != rhs) {
        throw Error(ErrorCode::InternalContradiction, "quotient projection is not a homomorphism");
      }
    }
  }
  return out;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n1 = a.dim(), n2 = b.dim(), n = n1 + n2;
  LieAlgebra out(n, default_labels(n));
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = i + 1; j < n1; ++j) {
      Vector v(n);
      Vector src = a.bracket(i, j);
      std::copy(src.begin(), src.end(), v.begin());
      out.set_bracket(i, j, v);
    }
  }
  for (std::size_t i = 0; i < n2; ++i) {
    for (std::size_t j = i + 1; j < n2; ++j) {
      Vector v(n);
      Vector src = b.bracket(i, j);
      std::copy(src.begin(), src.end(), v.begin() + static_cast<std::ptrdiff_t>(n1));
      out.set_bracket(n1 + i, n1 + j, v);
    }
  }
  return out;
}

LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p) {
  const std::size_t n = l.dim();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorCode::DimensionMismatch, "basis matrix shape");
  Matrix to_coords = inverse(p).transpose();  // throws SingularMatrix
  LieAlgebra out(n, l.labels());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector v = bracket_eval(l, p.row(a), p.row(b));
      out.set_bracket(a, b, to_coords * v);
    }
  }
  return out;
}

bool is_isomorphism_via(const LieAlgebra& source, const LieAlgebra& target, const Matrix& p) {
  if (source.dim() != target.dim()) throw Error(ErrorCode::DimensionMismatch, "algebra dimensions differ");
  return change_basis(source, p).same_table(target);
}

}  // namespace liealg
