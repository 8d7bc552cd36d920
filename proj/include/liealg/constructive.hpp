#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

enum class StructureFamily { AbelianLeft, HeisenbergLeft };

/// (D, b) presentation of an algebra whose right nilpotent part is Abelian.
///
/// Basis convention: y_1..y_m span the near-perfect radical, x_1..x_q lift a
/// basis of the left part. D[a](j, k) is the y_j coefficient of [x_a, y_k],
/// so D[a] * v is the y-coordinate vector of [x_a, v]. b maps (a, c), a < c,
/// to the y-coordinates of [x_a, x_c] (minus x_q on Heisenberg pairs);
/// absent entries are zero.
struct StructureData {
  StructureFamily family = StructureFamily::AbelianLeft;
  std::size_t left_dim = 0;   // q: n1, or 2p+1
  std::size_t right_dim = 0;  // m: n2, or n
  std::vector<Matrix> d;
  std::map<std::pair<std::size_t, std::size_t>, Vector> b;

  std::size_t heisenberg_p() const { return family == StructureFamily::HeisenbergLeft ? (left_dim - 1) / 2 : 0; }
  /// b entry for any ordered pair, with antisymmetry and zero default.
  Vector b_at(std::size_t a, std::size_t c) const;
  void set_b(std::size_t a, std::size_t c, const Vector& v);

  friend bool operator==(const StructureData&, const StructureData&) = default;
};

std::string_view to_string(StructureFamily family);

/// Witness that an algebra splits as a direct sum of ideals.
struct DirectSumWitness {
  std::vector<Subspace> ideals;
  std::vector<LieAlgebra> components;
  /// Rows: the component bases, concatenated in order.
  Matrix assembly;
};

/// Builds and verifies a witness from explicit bases (rows) of each block.
/// Throws InternalContradiction if the blocks do not form a direct sum of ideals.
DirectSumWitness make_direct_sum_witness(const LieAlgebra& l, const std::vector<std::vector<Vector>>& blocks);
/// Re-checks every witness invariant against l.
bool verify_witness(const LieAlgebra& l, const DirectSumWitness& w);

/// A(n)-A(1) with n >= 2 splits as A(1)-A(1) plus n-1 copies of A(1).
/// Throws WrongTag, InternalContradiction.
DirectSumWitness decompose_an_a1(const LieAlgebra& l);

struct Canonicalization {
  Matrix basis;  // rows x_1..x_{2p+1}, y in the input coordinates
  LieAlgebra canonical;
};

/// Rewrites any H_p-A(1) algebra in the basis where [x_{2l-1}, x_{2l}] = x_{2p+1}
/// and [x_1, y] = y are the only nonzero brackets. Throws WrongTag, InternalContradiction.
Canonicalization canonicalize_hp_a1(const LieAlgebra& l);

struct Extraction {
  StructureData data;
  /// Rows y_1..y_m, x_1..x_q in the input coordinates.
  Matrix basis;
};

/// Throws WrongTag unless the tag is A(n1)-A(n2) or H_p-A(n).
Extraction extract_structure(const LieAlgebra& l);

struct ConstraintFailure {
  std::string equation;  // "commutator", "span", "triple"
  std::vector<std::size_t> indices;
  std::string detail;
};

struct ConstraintReport {
  bool shape_ok = true;
  std::vector<ConstraintFailure> failures;

  bool ok() const { return shape_ok && failures.empty(); }
  /// Failures of the equations that come from the Jacobi identity (everything but "span").
  bool jacobi_ok() const;
};

ConstraintReport verify_constraints(const StructureData& data);

/// Bracket table on (y_1..y_m, x_1..x_q) without any checks.
LieAlgebra assemble(const StructureData& data);
/// Throws ConstraintViolation when verify_constraints fails.
LieAlgebra build_from_structure(const StructureData& data);

struct TransformResult {
  StructureData data;
  /// New basis (rows) in the coordinates of build_from_structure(input):
  /// y~ = S y, x~ = G x + R y.
  Matrix certificate;
};

/// r: q x m, s: m x m, g: q x q. Throws SingularMatrix, NotQuotientPreserving.
TransformResult apply_admissible_transform(const StructureData& data, const Matrix& r, const Matrix& s,
                                           const Matrix& g);

/// Reads (D, b) off an algebra already written in a (y, x) basis.
StructureData read_structure(const LieAlgebra& l, StructureFamily family, std::size_t left_dim,
                             std::size_t right_dim);

}  // namespace liealg
