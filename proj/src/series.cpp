#include "liealg/series.hpp"

namespace liealg {

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Derived: return "derived";
    case SeriesKind::LowerCentral: return "lcs";
    case SeriesKind::Extended: return "extended";
  }
  return "unknown";
}

namespace {

template <typename Step>
SeriesReport descend(SeriesKind kind, Subspace start, Step step) {
  SeriesReport report;
  report.kind = kind;
  report.terms.push_back(std::move(start));
  while (true) {
    const Subspace& current = report.terms.back();
    if (current.is_zero()) break;
    Subspace next = step(current);
    bool stable = next.dim() == current.dim();
    report.terms.push_back(std::move(next));
    if (stable) break;
  }
  for (const auto& t : report.terms) report.dims.push_back(t.dim());
  report.stabilized_at = report.terms.back().is_zero() ? report.terms.size() - 1 : report.terms.size() - 2;
  return report;
}

}  // namespace

SeriesReport derived_series(const LieAlgebra& l) {
  return descend(SeriesKind::Derived, Subspace::full(l.dim()),
                 [&](const Subspace& s) { return product_space(l, s, s); });
}

SeriesReport lower_central_series(const LieAlgebra& l) {
  Subspace full = Subspace::full(l.dim());
  return descend(SeriesKind::LowerCentral, full,
                 [&](const Subspace& s) { return product_space(l, full, s); });
}

Subspace near_perfect_radical(const LieAlgebra& l) {
  return lower_central_series(l).terms.back();
}

NilpotencyInfo nilpotency_solvability(const LieAlgebra& l) {
  NilpotencyInfo info;
  SeriesReport lcs = lower_central_series(l);
  info.is_nilpotent = lcs.terms.back().is_zero();
  if (info.is_nilpotent) info.nilindex = lcs.stabilized_at;
  info.is_solvable = info.is_nilpotent || derived_series(l).terms.back().is_zero();
  return info;
}

bool is_nilpotent(const LieAlgebra& l) { return lower_central_series(l).terms.back().is_zero(); }

bool is_solvable(const LieAlgebra& l) { return derived_series(l).terms.back().is_zero(); }

void require_solvable_nonnilpotent(const LieAlgebra& l) {
  NilpotencyInfo info = nilpotency_solvability(l);
  if (info.is_nilpotent) {
    throw Error(ErrorCode::NotSolvableNonnilpotent, "algebra is nilpotent (near-perfect radical is zero)");
  }
  if (!info.is_solvable) {
    throw Error(ErrorCode::NotSolvableNonnilpotent, "algebra is not solvable");
  }
}

SeriesReport extended_lcs(const LieAlgebra& l) {
  require_solvable_nonnilpotent(l);
  SeriesReport outer = lower_central_series(l);
  SeriesReport report;
  report.kind = SeriesKind::Extended;
  // Drop the repeated stable term; NP(l) appears once.
  report.terms.assign(outer.terms.begin(), outer.terms.begin() + static_cast<std::ptrdiff_t>(outer.stabilized_at) + 1);
  report.split_at = outer.stabilized_at;

  const Subspace& np = report.terms.back();
  Restriction inner = restrict_to(l, np);
  SeriesReport inner_lcs = lower_central_series(inner.algebra);
  if (!inner_lcs.terms.back().is_zero()) {
    throw Error(ErrorCode::InternalContradiction, "near-perfect radical of a solvable algebra is not nilpotent");
  }
  for (std::size_t k = 1; k < inner_lcs.terms.size(); ++k) {
    std::vector<Vector> embedded;
    for (const auto& v : inner_lcs.terms[k].basis_vectors()) embedded.push_back(inner.inclusion.apply(v));
    report.terms.push_back(Subspace::span(l.dim(), embedded));
  }
  for (const auto& t : report.terms) report.dims.push_back(t.dim());
  for (std::size_t k = 1; k < report.terms.size(); ++k) {
    if (report.dims[k] >= report.dims[k - 1] || !report.terms[k - 1].contains(report.terms[k])) {
      throw Error(ErrorCode::InternalContradiction, "extended series is not strictly decreasing");
    }
  }
  report.stabilized_at = report.terms.size() - 1;
  return report;
}

NilpotentDecomposition left_right_nilpotent(const LieAlgebra& l) {
  require_solvable_nonnilpotent(l);
  Subspace np = near_perfect_radical(l);
  Quotient q = quotient(l, np);
  Restriction r = restrict_to(l, np);
  if (!is_nilpotent(q.algebra) || !is_nilpotent(r.algebra)) {
    throw Error(ErrorCode::InternalContradiction, "left or right component is not nilpotent");
  }
  return NilpotentDecomposition{std::move(np), std::move(q.algebra), std::move(r.algebra),
                                std::move(q.projection), std::move(r.inclusion), std::move(q.lifts)};
}

}  // namespace liealg
