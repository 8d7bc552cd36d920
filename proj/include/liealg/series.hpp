#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

enum class SeriesKind { Derived, LowerCentral, Extended };

std::string_view to_string(SeriesKind kind);

/// A descending chain of subspaces of one ambient coordinate space.
///
/// Plain series stop at the first zero term, or repeat the first term whose
/// successor equals it (so a stabilizing series ends with two equal dims).
struct SeriesReport {
  SeriesKind kind = SeriesKind::LowerCentral;
  std::vector<Subspace> terms;
  std::vector<std::size_t> dims;
  /// Index of the smallest term: the stable term, or the first zero term.
  std::size_t stabilized_at = 0;
  /// Extended series only: index of the near-perfect radical in the chain.
  std::optional<std::size_t> split_at;
};

SeriesReport derived_series(const LieAlgebra& l);
SeriesReport lower_central_series(const LieAlgebra& l);

/// Smallest term of the lower central series.
Subspace near_perfect_radical(const LieAlgebra& l);

struct NilpotencyInfo {
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::optional<std::size_t> nilindex;
};

NilpotencyInfo nilpotency_solvability(const LieAlgebra& l);
bool is_nilpotent(const LieAlgebra& l);
bool is_solvable(const LieAlgebra& l);

/// Lower central series of l down to NP(l), followed by the lower central
/// series of NP(l) itself (embedded in l's coordinates) down to zero.
/// Throws NotSolvableNonnilpotent.
SeriesReport extended_lcs(const LieAlgebra& l);

struct NilpotentDecomposition {
  Subspace np_radical;
  LieAlgebra left;   // l / NP(l)
  LieAlgebra right;  // NP(l) as an algebra
  LinearMap left_map;   // projection
  LinearMap right_map;  // inclusion
  Matrix left_lifts;
};

/// Throws NotSolvableNonnilpotent.
NilpotentDecomposition left_right_nilpotent(const LieAlgebra& l);

/// Throws NotSolvableNonnilpotent unless l is solvable with NP(l) != 0.
void require_solvable_nonnilpotent(const LieAlgebra& l);

}  // namespace liealg
