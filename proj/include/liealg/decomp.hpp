#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liealg/constructive.hpp"

namespace liealg {

/// Polynomial over Q(i), coefficients from the constant term up, no trailing zeros.
using Polynomial = std::vector<Scalar>;

/// Monic minimal polynomial, found from the first linear dependence among powers.
Polynomial minimal_polynomial(const Matrix& m);
Matrix evaluate(const Polynomial& f, const Matrix& m);

/// Linear maps phi with phi[x, y] = [phi x, y] for all x, y.
struct Centroid {
  std::size_t algebra_dim = 0;
  std::vector<Matrix> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const Matrix& m) const;
};

/// Throws InternalContradiction if the solution space is not a unital
/// associative algebra (which would mean a bug in the solver).
Centroid centroid(const LieAlgebra& l);

/// Searches single basis elements, pairwise sums and one generic combination
/// for a minimal polynomial with coprime factors over Q(i).
std::optional<Matrix> find_idempotent(const Centroid& c);

enum class VerdictStatus { Decomposable, Indecomposable, Unknown };
std::string_view to_string(VerdictStatus status);

struct DecomposabilityVerdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::optional<DirectSumWitness> witness;
  std::string reason;
  std::size_t centroid_dim = 0;
};

DecomposabilityVerdict decomposability(const LieAlgebra& l);

struct SearchReport {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t decomposable = 0;
  std::size_t indecomposable = 0;
  std::size_t unknown = 0;
  /// Samples for which no admissible candidate was generated.
  std::size_t skipped = 0;
  std::size_t rejected_candidates = 0;
  /// Indecomposable instances: counterexample candidates for manual review.
  std::vector<StructureData> flagged;
  std::vector<StructureData> unknown_instances;

  /// Associative; order of arguments fixes the order of the instance lists.
  void merge(const SearchReport& other);
};

/// Random A(n1)-A(n2) instances checked for decomposability. Sample k uses a
/// generator seeded from (seed, k), so the report does not depend on `threads`
/// (0 = hardware concurrency). Throws InvalidParameters unless n1 > n2 >= 1
/// and samples >= 1.
SearchReport conjecture_search(std::size_t n1, std::size_t n2, std::size_t samples, std::uint64_t seed,
                               unsigned threads = 0);

/// One candidate as used by conjecture_search, or nullopt after too many rejections.
std::optional<StructureData> random_abelian_structure(std::size_t n1, std::size_t n2, std::uint64_t seed,
                                                      std::uint64_t index, std::size_t* rejections = nullptr);

}  // namespace liealg
