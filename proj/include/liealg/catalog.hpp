#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liealg/algebra.hpp"

namespace liealg {

using ParamMap = std::map<std::string, Scalar>;

/// Algebras named in the classification examples, keyed by label.
///
/// Labels: A(n), H(p), F4, canonical_HpA1(p), s2_1, s3_1(a), s3_2, s4_1,
/// s4_2, s4_3(a,b), s4_4(a), s4_6, s4_8(a), s4_10, s4_11, s6_26.
/// Parameters are any nonzero Gaussian rationals; the normalization
/// inequalities that pick family representatives (0 < |a| <= 1 and the like)
/// are not enforced. Brackets not listed are zero.
namespace catalog {

struct LabelInfo {
  std::string label;
  std::vector<std::string> params;
  std::string description;
};

const std::vector<LabelInfo>& labels();

/// Throws UnknownLabel, MissingParameter, InvalidParameter.
LieAlgebra make(const std::string& label, const ParamMap& params = {});

LieAlgebra abelian(std::size_t n);
/// H_p on x1..x_{2p+1}: [x_{2l-1}, x_{2l}] = x_{2p+1}.
LieAlgebra heisenberg(std::size_t p);
/// Basis x1..x_{2p+1}, y: Heisenberg brackets plus [x1, y] = y.
LieAlgebra canonical_hp_a1(std::size_t p);

/// A fixture with parameters fixed and the classification data it must reproduce.
struct CatalogEntry {
  std::string label;
  ParamMap params;
  std::string expected_tag;
  std::vector<std::size_t> lcs_dims;
  std::vector<std::size_t> extended_dims;
  /// Near-perfect radical, as 0-based indices of the spanning basis vectors.
  std::vector<std::size_t> np_basis;
};

/// The solvable nonnilpotent fixtures with their expected classification.
const std::vector<CatalogEntry>& solvable_fixtures();

LieAlgebra make(const CatalogEntry& entry);

}  // namespace catalog
}  // namespace liealg
