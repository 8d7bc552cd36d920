#include "liealg/constructive.hpp"

#include "liealg/catalog.hpp"
#include "liealg/classify.hpp"
#include "liealg/series.hpp"

namespace liealg {

std::string_view to_string(StructureFamily family) {
  return family == StructureFamily::AbelianLeft ? "AbelianLeft" : "HeisenbergLeft";
}

Vector StructureData::b_at(std::size_t a, std::size_t c) const {
  if (a == c) return Vector(right_dim);
  bool flip = a > c;
  auto it = b.find(flip ? std::pair{c, a} : std::pair{a, c});
  if (it == b.end()) return Vector(right_dim);
  return flip ? scale(Scalar(-1), it->second) : it->second;
}

void StructureData::set_b(std::size_t a, std::size_t c, const Vector& v) {
  if (a == c) throw Error(ErrorCode::InvalidParameter, "b is only defined for distinct indices");
  Vector value = a < c ? v : scale(Scalar(-1), v);
  auto key = a < c ? std::pair{a, c} : std::pair{c, a};
  if (is_zero(value)) {
    b.erase(key);
  } else {
    b[key] = std::move(value);
  }
}

// ------------------------------------------------------- direct sum witness

namespace {

LieAlgebra block_sum(const std::vector<LieAlgebra>& components) {
  LieAlgebra out(0);
  for (const auto& c : components) out = direct_sum(out, c);
  return out;
}

}  // namespace

DirectSumWitness make_direct_sum_witness(const LieAlgebra& l, const std::vector<std::vector<Vector>>& blocks) {
  const std::size_t n = l.dim();
  DirectSumWitness w;
  std::vector<Vector> rows;
  std::vector<std::size_t> offsets;
  for (const auto& block : blocks) {
    offsets.push_back(rows.size());
    rows.insert(rows.end(), block.begin(), block.end());
    w.ideals.push_back(Subspace::span(n, block));
  }
  offsets.push_back(rows.size());
  if (rows.size() != n) throw Error(ErrorCode::InternalContradiction, "blocks do not span the algebra");
  w.assembly = Matrix::from_rows(rows, n);
  if (!is_invertible(w.assembly)) throw Error(ErrorCode::InternalContradiction, "blocks are linearly dependent");

  LieAlgebra rewritten = change_basis(l, w.assembly);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const std::size_t lo = offsets[k], hi = offsets[k + 1];
    LieAlgebra comp(hi - lo);
    for (std::size_t a = lo; a < hi; ++a) {
      for (std::size_t c = a + 1; c < hi; ++c) {
        Vector v = rewritten.bracket(a, c);
        comp.set_bracket(a - lo, c - lo, Vector(v.begin() + static_cast<std::ptrdiff_t>(lo),
                                                v.begin() + static_cast<std::ptrdiff_t>(hi)));
      }
    }
    w.components.push_back(std::move(comp));
  }
  if (!verify_witness(l, w)) throw Error(ErrorCode::InternalContradiction, "blocks are not a direct sum of ideals");
  return w;
}

bool verify_witness(const LieAlgebra& l, const DirectSumWitness& w) {
  const std::size_t n = l.dim();
  if (w.ideals.size() != w.components.size() || w.assembly.rows() != n || w.assembly.cols() != n) return false;
  if (!is_invertible(w.assembly)) return false;
  Subspace total = Subspace::zero(n);
  std::size_t offset = 0;
  for (std::size_t k = 0; k < w.ideals.size(); ++k) {
    const Subspace& ideal = w.ideals[k];
    if (!is_ideal(l, ideal)) return false;
    if (!subspace_intersect(total, ideal).is_zero()) return false;
    total = subspace_sum(total, ideal);
    std::vector<Vector> block;
    for (std::size_t r = 0; r < w.components[k].dim(); ++r) block.push_back(w.assembly.row_vector(offset + r));
    if (Subspace::span(n, block) != ideal || ideal.dim() != w.components[k].dim()) return false;
    offset += w.components[k].dim();
  }
  if (!total.is_full()) return false;
  return change_basis(l, w.assembly).same_table(block_sum(w.components));
}

// ------------------------------------------------------------ A(n)-A(1)

namespace {

DecompositionTag tag_or_wrong(const LieAlgebra& l) {
  try {
    return decomposition_tag(l);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotSolvableNonnilpotent) throw Error(ErrorCode::WrongTag, e.what());
    throw;
  }
}

// Coefficient c with v = c * y for the spanning vector of a one-dimensional subspace.
Scalar multiple_of(const Subspace& line, const Vector& v, const char* what) {
  auto coords = line.coordinates(v);
  if (!coords) throw Error(ErrorCode::InternalContradiction, std::string(what) + " leaves the expected line");
  return (*coords)[0];
}

}  // namespace

DirectSumWitness decompose_an_a1(const LieAlgebra& l) {
  DecompositionTag tag = tag_or_wrong(l);
  if (tag.left.kind != NilpotentKind::Abelian || tag.left.parameter < 2 ||
      tag.right != NilpotentClass{NilpotentKind::Abelian, 1}) {
    throw Error(ErrorCode::WrongTag, "expected an A(n)-A(1) algebra with n >= 2", tag.to_string());
  }
  const std::size_t n = l.dim();
  Subspace line = near_perfect_radical(l);
  Vector y = line.basis().row_vector(0);

  // Some basis vector acts on y by a nonzero scalar; rescale it so [x, y] = y.
  Vector x;
  for (std::size_t i = 0; i < n && x.empty(); ++i) {
    Vector e = unit_vector(n, i);
    Scalar alpha = multiple_of(line, bracket_eval(l, e, y), "[e_i, y]");
    if (!alpha.is_zero()) x = scale(alpha.inv(), e);
  }
  if (x.empty()) throw Error(ErrorCode::InternalContradiction, "no element acts nontrivially on the derived algebra");

  Matrix extended = extend_to_full_basis(Subspace::span(n, {x, y}));
  std::vector<Vector> zs;
  for (std::size_t r = 2; r < n; ++r) {
    Vector u = extended.row_vector(r);
    Scalar alpha = multiple_of(line, bracket_eval(l, u, y), "[u, y]");
    Scalar beta = multiple_of(line, bracket_eval(l, u, x), "[u, x]");
    Vector z = u;
    axpy(z, -alpha, x);
    axpy(z, beta, y);
    if (!is_zero(bracket_eval(l, z, y)) || !is_zero(bracket_eval(l, z, x))) {
      throw Error(ErrorCode::InternalContradiction, "complement vector does not commute with x and y");
    }
    zs.push_back(std::move(z));
  }
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = i + 1; j < zs.size(); ++j) {
      if (!is_zero(bracket_eval(l, zs[i], zs[j]))) {
        throw Error(ErrorCode::InternalContradiction, "complement vectors do not commute",
                    std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
  std::vector<std::vector<Vector>> blocks{{x, y}};
  for (auto& z : zs) blocks.push_back({z});
  return make_direct_sum_witness(l, blocks);
}

// ------------------------------------------------------------ H_p-A(1)

Canonicalization canonicalize_hp_a1(const LieAlgebra& l) {
  DecompositionTag tag = tag_or_wrong(l);
  if (tag.left.kind != NilpotentKind::Heisenberg || tag.right != NilpotentClass{NilpotentKind::Abelian, 1}) {
    throw Error(ErrorCode::WrongTag, "expected an H_p-A(1) algebra", tag.to_string());
  }
  const std::size_t p = tag.left.parameter;
  const std::size_t m = 2 * p + 1;  // left dimension; index m - 1 is the central element
  const std::size_t n = l.dim();
  NilpotentDecomposition parts = left_right_nilpotent(l);
  const Subspace& line = parts.np_radical;
  const Vector y = line.basis().row_vector(0);

  // Lift a Heisenberg basis of L / NP(L).
  Matrix h = heisenberg_basis(parts.left);
  std::vector<Vector> u;
  for (std::size_t a = 0; a < m; ++a) u.push_back(left_multiply(h.row(a), parts.left_lifts));

  auto actions = [&](const std::vector<Vector>& vs) {
    std::vector<Scalar> alpha;
    for (const auto& v : vs) alpha.push_back(multiple_of(line, bracket_eval(l, v, y), "[u_i, y]"));
    return alpha;
  };
  std::vector<Scalar> alpha = actions(u);
  if (!alpha[m - 1].is_zero()) throw Error(ErrorCode::InternalContradiction, "central lift acts on NP(L)");

  // Bring the first acting vector to position 0 with a symplectic move, then scale.
  std::size_t first = m;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (!alpha[i].is_zero()) {
      first = i;
      break;
    }
  }
  if (first == m) throw Error(ErrorCode::InternalContradiction, "no lift acts on NP(L)");
  const std::size_t pair = first / 2;
  if (pair != 0) {
    std::swap(u[0], u[2 * pair]);
    std::swap(u[1], u[2 * pair + 1]);
  }
  if (first % 2 == 1) {
    Vector old0 = u[0];
    u[0] = u[1];
    u[1] = scale(Scalar(-1), old0);
  }
  alpha = actions(u);
  const Scalar a0 = alpha[0];
  u[0] = scale(a0.inv(), u[0]);
  u[1] = scale(a0, u[1]);
  alpha = actions(u);

  std::vector<Vector> v = u;
  for (std::size_t t = 1; t < p; ++t) {
    axpy(v[1], -alpha[2 * t + 1], u[2 * t]);
    axpy(v[1], alpha[2 * t], u[2 * t + 1]);
  }
  axpy(v[1], -alpha[1], u[0]);
  for (std::size_t i = 2; i + 1 < m; ++i) axpy(v[i], -alpha[i], u[0]);

  std::vector<Scalar> check = actions(v);
  if (!check[0].is_one()) throw Error(ErrorCode::InternalContradiction, "[v_1, y] != y");
  for (std::size_t i = 1; i < m; ++i) {
    if (!check[i].is_zero()) throw Error(ErrorCode::InternalContradiction, "[v_i, y] != 0", std::to_string(i));
  }

  // beta_{1,j}: the y-part of [v_1, v_j] after removing the Heisenberg term.
  auto beta_first = [&](std::size_t j) {
    Vector w = bracket_eval(l, v[0], v[j]);
    if (j == 1) w = sub(w, v[m - 1]);
    return multiple_of(line, w, "[v_1, v_j]");
  };
  std::vector<Vector> x = v;
  axpy(x[1], -(beta_first(1) + beta_first(m - 1)), y);
  for (std::size_t i = 2; i < m; ++i) axpy(x[i], -beta_first(i), y);

  std::vector<Vector> rows = x;
  rows.push_back(y);
  Canonicalization out{Matrix::from_rows(rows, n), LieAlgebra()};
  out.canonical = change_basis(l, out.basis);
  LieAlgebra target = catalog::canonical_hp_a1(p);
  if (!out.canonical.same_table(target)) {
    throw Error(ErrorCode::InternalContradiction, "residual y-terms did not vanish in the final table");
  }
  out.canonical.set_labels(target.labels());
  return out;
}

// ------------------------------------------------------- structure data

StructureData read_structure(const LieAlgebra& l, StructureFamily family, std::size_t left_dim,
                             std::size_t right_dim) {
  const std::size_t m = right_dim, q = left_dim;
  if (l.dim() != m + q) throw Error(ErrorCode::DimensionMismatch, "algebra dimension differs from m + q");
  const bool heis = family == StructureFamily::HeisenbergLeft;
  StructureData data{family, q, m, {}, {}};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!is_zero(l.bracket(i, j))) throw Error(ErrorCode::InternalContradiction, "y-span is not Abelian");
    }
  }
  for (std::size_t a = 0; a < q; ++a) {
    Matrix d(m, m);
    for (std::size_t k = 0; k < m; ++k) {
      Vector v = l.bracket(m + a, k);
      for (std::size_t j = 0; j < m; ++j) d(j, k) = v[j];
      for (std::size_t c = 0; c < q; ++c) {
        if (!v[m + c].is_zero()) throw Error(ErrorCode::InternalContradiction, "[x, y] leaves the y-span");
      }
    }
    data.d.push_back(std::move(d));
  }
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t c = a + 1; c < q; ++c) {
      Vector v = l.bracket(m + a, m + c);
      const bool leading = heis && a % 2 == 0 && c == a + 1 && c + 1 < q;
      for (std::size_t e = 0; e < q; ++e) {
        Scalar expected = (leading && e == q - 1) ? Scalar(1) : Scalar(0);
        if (v[m + e] != expected) {
          throw Error(ErrorCode::NotQuotientPreserving, "x-brackets do not present the left algebra canonically",
                      std::to_string(a) + "," + std::to_string(c));
        }
      }
      data.set_b(a, c, Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m)));
    }
  }
  return data;
}

Extraction extract_structure(const LieAlgebra& l) {
  DecompositionTag tag = tag_or_wrong(l);
  if (tag.right.kind != NilpotentKind::Abelian ||
      (tag.left.kind != NilpotentKind::Abelian && tag.left.kind != NilpotentKind::Heisenberg)) {
    throw Error(ErrorCode::WrongTag, "expected an A(n1)-A(n2) or H_p-A(n) algebra", tag.to_string());
  }
  const bool heis = tag.left.kind == NilpotentKind::Heisenberg;
  NilpotentDecomposition parts = left_right_nilpotent(l);
  const std::size_t n = l.dim();
  const std::size_t m = parts.np_radical.dim();
  const std::size_t q = n - m;

  std::vector<Vector> rows = parts.np_radical.basis_vectors();
  if (heis) {
    Matrix h = heisenberg_basis(parts.left);
    for (std::size_t a = 0; a < q; ++a) rows.push_back(left_multiply(h.row(a), parts.left_lifts));
  } else {
    for (std::size_t a = 0; a < q; ++a) rows.push_back(parts.left_lifts.row_vector(a));
  }
  Extraction out{StructureData{}, Matrix::from_rows(rows, n)};
  out.data = read_structure(change_basis(l, out.basis),
                            heis ? StructureFamily::HeisenbergLeft : StructureFamily::AbelianLeft, q, m);
  ConstraintReport report = verify_constraints(out.data);
  if (!report.ok()) {
    throw Error(ErrorCode::InternalContradiction, "extracted structure data violates its constraints",
                report.failures.empty() ? "shape" : report.failures.front().equation);
  }
  return out;
}

bool ConstraintReport::jacobi_ok() const {
  if (!shape_ok) return false;
  for (const auto& f : failures) {
    if (f.equation != "span") return false;
  }
  return true;
}

namespace {

bool shape_is_valid(const StructureData& data, std::string& why) {
  const std::size_t q = data.left_dim, m = data.right_dim;
  if (m == 0 || q == 0) return why = "empty left or right part", false;
  if (data.family == StructureFamily::HeisenbergLeft && (q < 3 || q % 2 == 0)) {
    return why = "Heisenberg family needs an odd left dimension >= 3", false;
  }
  if (data.d.size() != q) return why = "expected one D matrix per x generator", false;
  for (const auto& d : data.d) {
    if (d.rows() != m || d.cols() != m) return why = "D matrices must be m x m", false;
  }
  for (const auto& [key, v] : data.b) {
    if (key.first >= key.second || key.second >= q || v.size() != m) return why = "malformed b entry", false;
  }
  return true;
}

// Nonzero when (a, c) is a Heisenberg pair (2l-1, 2l) of the left algebra.
int pairing_sign(const StructureData& data, std::size_t a, std::size_t c) {
  if (data.family != StructureFamily::HeisenbergLeft) return 0;
  const std::size_t z = data.left_dim - 1;
  if (a == z || c == z) return 0;
  if (a % 2 == 0 && c == a + 1) return 1;
  if (c % 2 == 0 && a == c + 1) return -1;
  return 0;
}

}  // namespace

ConstraintReport verify_constraints(const StructureData& data) {
  ConstraintReport report;
  std::string why;
  if (!shape_is_valid(data, why)) {
    report.shape_ok = false;
    report.failures.push_back({"shape", {}, why});
    return report;
  }
  const std::size_t q = data.left_dim, m = data.right_dim;
  const std::size_t z = q - 1;

  // Jacobi on (x_a, x_c, y): [D_a, D_c] = (pairing) D_z.
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t c = a + 1; c < q; ++c) {
      Matrix expected = pairing_sign(data, a, c) != 0 ? data.d[z] : Matrix(m, m);
      if (commutator(data.d[a], data.d[c]) != expected) {
        report.failures.push_back({"commutator", {a, c}, "D commutator mismatch"});
      }
    }
  }

  if (rank(hstack(data.d)) != m) report.failures.push_back({"span", {}, "images of ad(x) do not span the y-part"});

  // Jacobi on (x_a, x_c, x_e): sum over cyclic shifts of D_a b_ce + pairing(c, e) b_{a, z}.
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t c = a + 1; c < q; ++c) {
      for (std::size_t e = c + 1; e < q; ++e) {
        const std::size_t cyc[3][3] = {{a, c, e}, {c, e, a}, {e, a, c}};
        Vector residual(m);
        for (const auto& t : cyc) {
          residual = add(residual, data.d[t[0]] * data.b_at(t[1], t[2]));
          int sign = pairing_sign(data, t[1], t[2]);
          if (sign != 0) axpy(residual, Scalar(sign), data.b_at(t[0], z));
        }
        for (std::size_t j = 0; j < m; ++j) {
          if (!residual[j].is_zero()) {
            report.failures.push_back({"triple", {a, c, e, j}, "residual " + residual[j].to_string()});
          }
        }
      }
    }
  }
  return report;
}

LieAlgebra assemble(const StructureData& data) {
  std::string why;
  if (!shape_is_valid(data, why)) throw Error(ErrorCode::ConstraintViolation, "malformed structure data: " + why);
  const std::size_t q = data.left_dim, m = data.right_dim, n = m + q;
  std::vector<std::string> names = default_labels(m, "y");
  for (const auto& s : default_labels(q, "x")) names.push_back(s);
  LieAlgebra l(n, names);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t k = 0; k < m; ++k) {
      Vector v(n);
      for (std::size_t j = 0; j < m; ++j) v[j] = data.d[a](j, k);
      l.set_bracket(m + a, k, v);
    }
    for (std::size_t c = a + 1; c < q; ++c) {
      Vector v(n);
      Vector bv = data.b_at(a, c);
      std::copy(bv.begin(), bv.end(), v.begin());
      if (pairing_sign(data, a, c) > 0) v[m + q - 1] = Scalar(1);
      l.set_bracket(m + a, m + c, v);
    }
  }
  return l;
}

LieAlgebra build_from_structure(const StructureData& data) {
  ConstraintReport report = verify_constraints(data);
  if (!report.ok()) {
    std::string context;
    for (const auto& f : report.failures) {
      if (!context.empty()) context += "; ";
      context += f.equation;
      for (auto k : f.indices) context += " " + std::to_string(k);
    }
    throw Error(ErrorCode::ConstraintViolation, "structure data violates its constraints", context);
  }
  return assemble(data);
}

TransformResult apply_admissible_transform(const StructureData& data, const Matrix& r, const Matrix& s,
                                           const Matrix& g) {
  const std::size_t q = data.left_dim, m = data.right_dim, n = m + q;
  if (r.rows() != q || r.cols() != m || s.rows() != m || s.cols() != m || g.rows() != q || g.cols() != q) {
    throw Error(ErrorCode::DimensionMismatch, "transform shapes must be R: q x m, S: m x m, G: q x q");
  }
  if (!is_invertible(s)) throw Error(ErrorCode::SingularMatrix, "S is singular");
  if (!is_invertible(g)) throw Error(ErrorCode::SingularMatrix, "G is singular");
  TransformResult out{StructureData{}, Matrix(n, n)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.certificate(i, j) = s(i, j);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t j = 0; j < m; ++j) out.certificate(m + a, j) = r(a, j);
    for (std::size_t c = 0; c < q; ++c) out.certificate(m + a, m + c) = g(a, c);
  }
  out.data = read_structure(change_basis(assemble(data), out.certificate), data.family, q, m);
  return out;
}

}  // namespace liealg
