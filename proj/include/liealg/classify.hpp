#pragma once

#include <string>

#include "liealg/algebra.hpp"

namespace liealg {

enum class NilpotentKind { Abelian, Heisenberg, Filiform, TwoStep, Unknown };

/// Recognized class of a nilpotent algebra. `parameter` is p for
/// Heisenberg and the dimension otherwise.
struct NilpotentClass {
  NilpotentKind kind = NilpotentKind::Unknown;
  std::size_t parameter = 0;

  /// "A(n)", "H<p>", "F(n)", "2step(n)" or "U(n)".
  std::string to_string() const;
  friend bool operator==(const NilpotentClass&, const NilpotentClass&) = default;
};

struct DecompositionTag {
  NilpotentClass left;
  NilpotentClass right;

  std::string to_string() const { return left.to_string() + "-" + right.to_string(); }
  friend bool operator==(const DecompositionTag&, const DecompositionTag&) = default;
};

/// Priority: Abelian > Heisenberg > Filiform > TwoStep > Unknown. Throws NotNilpotent.
NilpotentClass recognize_nilpotent(const LieAlgebra& l);

/// Classes of l / NP(l) and NP(l). Throws NotSolvableNonnilpotent.
DecompositionTag decomposition_tag(const LieAlgebra& l);

/// For an algebra recognized as H_p: a basis (rows) in which the brackets are
/// exactly [x_{2l-1}, x_{2l}] = x_{2p+1}. Throws WrongTag otherwise.
Matrix heisenberg_basis(const LieAlgebra& l);

}  // namespace liealg
