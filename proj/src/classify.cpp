#include "liealg/classify.hpp"

#include "liealg/catalog.hpp"
#include "liealg/series.hpp"

namespace liealg {

std::string NilpotentClass::to_string() const {
  const std::string n = std::to_string(parameter);
  switch (kind) {
    case NilpotentKind::Abelian: return "A(" + n + ")";
    case NilpotentKind::Heisenberg: return "H" + n;
    case NilpotentKind::Filiform: return "F(" + n + ")";
    case NilpotentKind::TwoStep: return "2step(" + n + ")";
    case NilpotentKind::Unknown: return "U(" + n + ")";
  }
  return "U(" + n + ")";
}

NilpotentClass recognize_nilpotent(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  SeriesReport lcs = lower_central_series(l);
  if (!lcs.terms.back().is_zero()) throw Error(ErrorCode::NotNilpotent, "algebra is not nilpotent");

  Subspace derived = n == 0 ? Subspace::zero(0) : lcs.terms[1];
  if (derived.is_zero()) return {NilpotentKind::Abelian, n};

  if (derived.dim() == 1 && center(l) == derived) {
    // A radical vector of the induced form on L/Z would be central, so the
    // form is nondegenerate and n is odd.
    if (n % 2 != 1) throw Error(ErrorCode::InternalContradiction, "Heisenberg candidate of even dimension");
    return {NilpotentKind::Heisenberg, (n - 1) / 2};
  }

  if (n >= 4) {
    std::vector<std::size_t> expected{n};
    for (std::size_t k = n - 2; k >= 1; --k) expected.push_back(k);
    expected.push_back(0);
    if (lcs.dims == expected) return {NilpotentKind::Filiform, n};
  }

  if (lcs.stabilized_at == 2) return {NilpotentKind::TwoStep, n};
  return {NilpotentKind::Unknown, n};
}

DecompositionTag decomposition_tag(const LieAlgebra& l) {
  NilpotentDecomposition parts = left_right_nilpotent(l);
  return {recognize_nilpotent(parts.left), recognize_nilpotent(parts.right)};
}

namespace {

// [x, y] = form(x, y) z on an algebra with one-dimensional derived algebra span{z}.
Scalar pairing(const LieAlgebra& l, const Subspace& derived, std::span<const Scalar> x,
               std::span<const Scalar> y) {
  auto coords = derived.coordinates(bracket_eval(l, x, y));
  if (!coords) throw Error(ErrorCode::InternalContradiction, "bracket escapes the derived algebra");
  return coords->empty() ? Scalar() : (*coords)[0];
}

}  // namespace

Matrix heisenberg_basis(const LieAlgebra& l) {
  NilpotentClass cls = is_nilpotent(l) ? recognize_nilpotent(l) : NilpotentClass{};
  if (cls.kind != NilpotentKind::Heisenberg) {
    throw Error(ErrorCode::WrongTag, "algebra is not a Heisenberg algebra", cls.to_string());
  }
  const std::size_t n = l.dim();
  const std::size_t p = cls.parameter;
  Subspace derived = derived_algebra(l);
  Vector z = derived.basis().row_vector(0);

  Matrix extended = extend_to_full_basis(derived);
  std::vector<Vector> pool;
  for (std::size_t r = 1; r < n; ++r) pool.push_back(extended.row_vector(r));

  // Symplectic Gram-Schmidt for the form B with [x, y] = B(x, y) z.
  std::vector<Vector> rows;
  while (!pool.empty()) {
    Vector u = pool.front();
    pool.erase(pool.begin());
    std::size_t partner = pool.size();
    Scalar value;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      value = pairing(l, derived, u, pool[k]);
      if (!value.is_zero()) {
        partner = k;
        break;
      }
    }
    if (partner == pool.size()) throw Error(ErrorCode::InternalContradiction, "degenerate Heisenberg pairing");
    Vector v = scale(value.inv(), pool[partner]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    for (auto& w : pool) {
      Scalar wv = pairing(l, derived, w, v);
      Scalar wu = pairing(l, derived, w, u);
      axpy(w, -wv, u);
      axpy(w, wu, v);
    }
    rows.push_back(std::move(u));
    rows.push_back(std::move(v));
  }
  rows.push_back(z);
  Matrix basis = Matrix::from_rows(rows, n);
  if (!is_isomorphism_via(l, catalog::heisenberg(p), basis)) {
    throw Error(ErrorCode::InternalContradiction, "symplectic basis does not realize the Heisenberg table");
  }
  return basis;
}

}  // namespace liealg
