#include "doctest.h"
#include "liealg/catalog.hpp"
#include "liealg/classify.hpp"
#include "liealg/constructive.hpp"
#include "liealg/series.hpp"
#include "structure_fuzz.hpp"
#include "support.hpp"

using namespace liealg;

namespace {

Vector e(std::size_t n, std::size_t k) { return unit_vector(n, k); }

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> rs;
  for (auto r : rows) {
    Vector v;
    for (long x : r) v.push_back(Scalar(x));
    rs.push_back(v);
  }
  return Matrix::from_rows(rs, rs.front().size());
}

Matrix one(long x) { return mat({{x}}); }

LieAlgebra reassemble(const DirectSumWitness& w) {
  LieAlgebra sum(0);
  for (const auto& c : w.components) sum = direct_sum(sum, c);
  return change_basis(sum, inverse(w.assembly));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  return ErrorCode::InternalContradiction;
}

}  // namespace

TEST_CASE("decompose A(2)-A(1) from the construction") {
  // Basis v1, v2, y with [v1, y] = y, [v2, y] = y.
  LieAlgebra l(3);
  l.set_bracket(0, 2, e(3, 2));
  l.set_bracket(1, 2, e(3, 2));
  DirectSumWitness w = decompose_an_a1(l);
  REQUIRE(w.ideals.size() == 2);
  CHECK(w.ideals[0] == Subspace::span(3, {e(3, 0), e(3, 2)}));
  CHECK(w.ideals[1] == Subspace::span(3, {sub(e(3, 1), e(3, 0))}));
  CHECK(verify_witness(l, w));
  CHECK(reassemble(w).same_table(l));
}

TEST_CASE("decompose already split inputs") {
  LieAlgebra two = direct_sum(catalog::make("s2_1"), catalog::abelian(1));
  DirectSumWitness w = decompose_an_a1(two);
  CHECK(w.ideals[0] == Subspace::span(3, {e(3, 0), e(3, 1)}));
  CHECK(w.ideals[1] == Subspace::span(3, {e(3, 2)}));

  LieAlgebra three = direct_sum(catalog::make("s2_1"), catalog::abelian(2));
  CHECK(decomposition_tag(three).to_string() == "A(3)-A(1)");
  DirectSumWitness w3 = decompose_an_a1(three);
  REQUIRE(w3.components.size() == 3);
  CHECK(decomposition_tag(w3.components[0]).to_string() == "A(1)-A(1)");
  CHECK(w3.components[1].dim() == 1);
  CHECK(w3.components[2].dim() == 1);
  CHECK(reassemble(w3).same_table(three));

  CHECK(code_of([] { decompose_an_a1(catalog::make("s2_1")); }) == ErrorCode::WrongTag);
  CHECK(code_of([] { decompose_an_a1(catalog::make("s4_1")); }) == ErrorCode::WrongTag);
  CHECK(code_of([] { decompose_an_a1(catalog::heisenberg(1)); }) == ErrorCode::WrongTag);
}

TEST_CASE("canonicalize s4_1") {
  LieAlgebra s41 = catalog::make("s4_1");
  Canonicalization c = canonicalize_hp_a1(s41);
  CHECK(c.canonical.same_table(catalog::canonical_hp_a1(1)));
  CHECK(is_isomorphism_via(s41, catalog::canonical_hp_a1(1), c.basis));
  // y is the x3 direction of s4_1.
  CHECK(Subspace::span(4, {c.basis.row_vector(3)}) == Subspace::span(4, {e(4, 2)}));
}

TEST_CASE("canonicalize fixed point and scrambles") {
  for (std::size_t p = 1; p <= 3; ++p) {
    LieAlgebra target = catalog::canonical_hp_a1(p);
    Canonicalization c = canonicalize_hp_a1(target);
    CHECK(c.basis == Matrix::identity(target.dim()));
    std::mt19937_64 rng(100 + p);
    for (int t = 0; t < 6; ++t) {
      LieAlgebra scrambled = change_basis(target, testing::random_invertible(target.dim(), rng));
      Canonicalization s = canonicalize_hp_a1(scrambled);
      CHECK(s.canonical.same_table(target));
      CHECK(is_isomorphism_via(scrambled, target, s.basis));
    }
  }
  CHECK(canonicalize_hp_a1(catalog::make("s6_26")).canonical.same_table(catalog::canonical_hp_a1(2)));
  CHECK(code_of([] { canonicalize_hp_a1(catalog::make("s4_11")); }) == ErrorCode::WrongTag);
}

TEST_CASE("extract s4_11") {
  Extraction x = extract_structure(catalog::make("s4_11"));
  CHECK(x.data.family == StructureFamily::AbelianLeft);
  REQUIRE(x.data.d.size() == 2);
  CHECK(x.data.d[0] == mat({{0, -1}, {0, 0}}));
  CHECK(x.data.d[1] == Matrix::identity(2));
  CHECK(x.data.b.empty());
  CHECK(verify_constraints(x.data).ok());
}

TEST_CASE("extract s3_1 and canonical H_p-A(1)") {
  Scalar a = Scalar::fraction(1, 2);
  Extraction x = extract_structure(catalog::make("s3_1", {{"a", a}}));
  REQUIRE(x.data.d.size() == 1);
  Matrix expected(2, 2);
  expected(0, 0) = 1;
  expected(1, 1) = a;
  CHECK(x.data.d[0] == expected);
  CHECK(x.data.b.empty());

  for (std::size_t p = 1; p <= 2; ++p) {
    Extraction h = extract_structure(catalog::canonical_hp_a1(p));
    CHECK(h.data.family == StructureFamily::HeisenbergLeft);
    REQUIRE(h.data.d.size() == 2 * p + 1);
    CHECK(h.data.d[0] == one(1));
    for (std::size_t k = 1; k < h.data.d.size(); ++k) CHECK(h.data.d[k] == one(0));
    CHECK(h.data.b.empty());
  }
  CHECK(code_of([] { extract_structure(catalog::make("s4_6")); }) == ErrorCode::WrongTag);
}

TEST_CASE("constraint reports") {
  StructureData bad{StructureFamily::AbelianLeft, 2, 2, {mat({{1, 1}, {0, 1}}), mat({{1, 0}, {0, 2}})}, {}};
  ConstraintReport r = verify_constraints(bad);
  CHECK_FALSE(r.ok());
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures[0].equation == "commutator");
  CHECK(r.failures[0].indices == std::vector<std::size_t>{0, 1});

  StructureData h1{StructureFamily::HeisenbergLeft, 3, 1, {one(1), one(0), one(0)}, {}};
  CHECK(verify_constraints(h1).ok());

  StructureData flat{StructureFamily::AbelianLeft, 2, 1, {one(0), one(0)}, {}};
  ConstraintReport span = verify_constraints(flat);
  CHECK_FALSE(span.ok());
  CHECK(span.jacobi_ok());

  StructureData misshapen{StructureFamily::HeisenbergLeft, 2, 1, {one(1), one(0)}, {}};
  CHECK_FALSE(verify_constraints(misshapen).shape_ok);
}

TEST_CASE("build from structure") {
  Scalar half = Scalar::fraction(1, 2);
  Matrix d(2, 2);
  d(0, 0) = 1;
  d(1, 1) = half;
  LieAlgebra s31 = build_from_structure({StructureFamily::AbelianLeft, 1, 2, {d}, {}});
  CHECK(s31.same_table(catalog::make("s3_1", {{"a", half}})));

  LieAlgebra h1 = build_from_structure({StructureFamily::HeisenbergLeft, 3, 1, {one(1), one(0), one(0)}, {}});
  // Basis (y, x1, x2, x3) versus canonical (x1, x2, x3, y).
  Matrix reorder(4, 4);
  reorder(0, 1) = 1;
  reorder(1, 2) = 1;
  reorder(2, 3) = 1;
  reorder(3, 0) = 1;
  CHECK(is_isomorphism_via(h1, catalog::canonical_hp_a1(1), reorder));

  LieAlgebra s411 = catalog::make("s4_11");
  Extraction x = extract_structure(s411);
  CHECK(is_isomorphism_via(s411, build_from_structure(x.data), x.basis));

  StructureData bad{StructureFamily::AbelianLeft, 2, 2, {mat({{1, 1}, {0, 1}}), mat({{1, 0}, {0, 2}})}, {}};
  CHECK(code_of([&] { build_from_structure(bad); }) == ErrorCode::ConstraintViolation);
}

TEST_CASE("admissible transforms") {
  StructureData s21{StructureFamily::AbelianLeft, 1, 1, {one(1)}, {}};
  TransformResult same = apply_admissible_transform(s21, Matrix(1, 1), Matrix::identity(1), Matrix::identity(1));
  CHECK(same.data == s21);
  TransformResult scaled = apply_admissible_transform(s21, Matrix(1, 1), one(2), Matrix::identity(1));
  CHECK(scaled.data.d[0] == one(1));
  CHECK(is_isomorphism_via(build_from_structure(s21), build_from_structure(scaled.data), scaled.certificate));

  StructureData s411 = extract_structure(catalog::make("s4_11")).data;
  Matrix swap = mat({{0, 1}, {1, 0}});
  TransformResult swapped = apply_admissible_transform(s411, Matrix(2, 2), Matrix::identity(2), swap);
  CHECK(swapped.data.d[0] == s411.d[1]);
  CHECK(swapped.data.d[1] == s411.d[0]);
  CHECK(swapped.data.b_at(0, 1) == scale(Scalar(-1), s411.b_at(0, 1)));
  CHECK(is_isomorphism_via(build_from_structure(s411), build_from_structure(swapped.data), swapped.certificate));
  CHECK(verify_constraints(swapped.data).ok());

  StructureData h1{StructureFamily::HeisenbergLeft, 3, 1, {one(1), one(0), one(0)}, {}};
  Matrix g = Matrix::identity(3);
  g(0, 0) = 2;  // scales [x1, x2] away from x3
  CHECK(code_of([&] { apply_admissible_transform(h1, Matrix(3, 1), one(1), g); }) ==
        ErrorCode::NotQuotientPreserving);
  CHECK(code_of([&] { apply_admissible_transform(h1, Matrix(3, 1), one(0), Matrix::identity(3)); }) ==
        ErrorCode::SingularMatrix);
}

TEST_CASE("random admissible transforms keep constraints") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> small(-2, 2);
  for (int t = 0; t < 20; ++t) {
    StructureData d = testing::fuzz_structure(StructureFamily::AbelianLeft, 3, 2, false, rng).data;
    Matrix r(3, 2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) r(i, j) = Scalar(small(rng));
    TransformResult tr = apply_admissible_transform(d, r, testing::random_invertible(2, rng),
                                                    testing::random_invertible(3, rng));
    CHECK(verify_constraints(tr.data).ok());
    CHECK(is_isomorphism_via(build_from_structure(d), build_from_structure(tr.data), tr.certificate));
  }
}

TEST_CASE("constraints agree with Jacobi on fuzzed data") {
  std::mt19937_64 rng(77);
  struct Shape {
    StructureFamily family;
    std::size_t q, m;
  };
  const Shape shapes[] = {{StructureFamily::AbelianLeft, 3, 2}, {StructureFamily::AbelianLeft, 4, 1},
                          {StructureFamily::HeisenbergLeft, 3, 2}, {StructureFamily::HeisenbergLeft, 5, 1}};
  for (const auto& s : shapes) {
    for (int t = 0; t < 15; ++t) {
      auto fc = testing::fuzz_structure(s.family, s.q, s.m, t % 3 == 0, rng);
      const bool constraints = verify_constraints(fc.data).ok();
      const bool jacobi = validate(assemble(fc.data)).ok;
      CHECK(constraints == jacobi);
      if (!fc.corrupted) {
        CHECK(constraints);
        Extraction x = extract_structure(build_from_structure(fc.data));
        CHECK(x.data == fc.data);
      }
    }
  }
}

TEST_CASE("literal mixed equation for alpha < 2l-1 disagrees with Jacobi") {
  // p = 2, m = 1, D = (1, 0, 0, 1, 0); shifting x3 by y introduces b_13 = 1, b_34 = -1.
  StructureData base{StructureFamily::HeisenbergLeft, 5, 1, {one(1), one(0), one(0), one(1), one(0)}, {}};
  Matrix r(5, 1);
  r(2, 0) = 1;
  StructureData d = apply_admissible_transform(base, r, one(1), Matrix::identity(5)).data;
  CHECK(d.b_at(0, 2) == Vector{Scalar(1)});
  CHECK(d.b_at(2, 3) == Vector{Scalar(-1)});
  CHECK(verify_constraints(d).ok());
  CHECK(validate(build_from_structure(d)).ok);

  // alpha = 1, (2l-1, 2l) = (3, 4), written with 0-based indices 0, 2, 3 and z = 4.
  auto entry = [&](std::size_t a, std::size_t c) { return d.b_at(a, c)[0]; };
  auto dd = [&](std::size_t a) { return d.d[a](0, 0); };
  Scalar literal = entry(0, 2) * dd(3) - entry(2, 3) * dd(0) + entry(0, 3) * dd(2) - entry(0, 4);
  Scalar from_jacobi = entry(0, 4) + dd(0) * entry(2, 3) - dd(2) * entry(0, 3) + dd(3) * entry(0, 2);
  CHECK(from_jacobi == Scalar(0));
  CHECK(literal == Scalar(2));
}
