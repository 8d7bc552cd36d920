#include "doctest.h"
#include "liealg/catalog.hpp"
#include "liealg/series.hpp"
#include "support.hpp"

using namespace liealg;

namespace {

using Dims = std::vector<std::size_t>;

Subspace span_units(std::size_t n, std::initializer_list<std::size_t> ks) {
  std::vector<Vector> vs;
  for (auto k : ks) vs.push_back(unit_vector(n, k));
  return Subspace::span(n, vs);
}

}  // namespace

TEST_CASE("derived series") {
  CHECK(derived_series(catalog::abelian(3)).dims == Dims{3, 0});
  CHECK(derived_series(catalog::make("s2_1")).dims == Dims{2, 1, 0});
  CHECK(derived_series(catalog::heisenberg(1)).dims == Dims{3, 1, 0});
}

TEST_CASE("lower central series") {
  SeriesReport s41 = lower_central_series(catalog::make("s4_1"));
  CHECK(s41.dims == Dims{4, 2, 1, 1});
  CHECK(s41.terms[1] == span_units(4, {0, 2}));
  CHECK(s41.terms.back() == span_units(4, {2}));
  CHECK(s41.stabilized_at == 2);

  CHECK(lower_central_series(catalog::canonical_hp_a1(2)).dims == Dims{6, 2, 1, 1});
  SeriesReport f4 = lower_central_series(catalog::make("F4"));
  CHECK(f4.dims == Dims{4, 2, 1, 0});
  CHECK(f4.stabilized_at == 3);
}

TEST_CASE("near-perfect radical") {
  CHECK(near_perfect_radical(catalog::heisenberg(2)).is_zero());
  CHECK(near_perfect_radical(catalog::make("F4")).is_zero());
  CHECK(near_perfect_radical(catalog::make("s2_1")) == span_units(2, {0}));
  CHECK(near_perfect_radical(catalog::make("s4_6")) == span_units(4, {0, 1, 2}));
}

TEST_CASE("nilpotency and solvability") {
  NilpotencyInfo a = nilpotency_solvability(catalog::abelian(3));
  CHECK(a.is_nilpotent);
  CHECK(a.is_solvable);
  CHECK(a.nilindex == 1);
  NilpotencyInfo h = nilpotency_solvability(catalog::heisenberg(2));
  CHECK(h.nilindex == 2);
  NilpotencyInfo s = nilpotency_solvability(catalog::make("s4_2"));
  CHECK(s.is_solvable);
  CHECK_FALSE(s.is_nilpotent);
  CHECK_FALSE(s.nilindex.has_value());
}

TEST_CASE("extended lower central series") {
  SeriesReport s46 = extended_lcs(catalog::make("s4_6"));
  CHECK(s46.dims == Dims{4, 3, 1, 0});
  CHECK(s46.split_at == 1);
  CHECK(s46.terms[2] == span_units(4, {0}));
  CHECK(extended_lcs(catalog::make("s2_1")).dims == Dims{2, 1, 0});
  CHECK(extended_lcs(catalog::canonical_hp_a1(2)).dims == Dims{6, 2, 1, 0});
  try {
    (void)extended_lcs(catalog::heisenberg(1));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSolvableNonnilpotent);
  }
}

TEST_CASE("left and right nilpotent algebras") {
  NilpotentDecomposition s41 = left_right_nilpotent(catalog::make("s4_1"));
  CHECK(s41.left.dim() == 3);
  CHECK(derived_algebra(s41.left).dim() == 1);
  CHECK(s41.right.same_table(catalog::abelian(1)));

  NilpotentDecomposition s411 = left_right_nilpotent(catalog::make("s4_11"));
  CHECK(s411.left.same_table(catalog::abelian(2)));
  CHECK(s411.right.same_table(catalog::abelian(2)));

  NilpotentDecomposition s32 = left_right_nilpotent(catalog::make("s3_2"));
  CHECK(s32.left.same_table(catalog::abelian(1)));
  CHECK(s32.right.same_table(catalog::abelian(2)));
  CHECK_THROWS_AS((void)left_right_nilpotent(catalog::abelian(2)), Error);
}

TEST_CASE("series properties on every solvable fixture") {
  std::mt19937_64 rng(41);
  for (const auto& f : catalog::solvable_fixtures()) {
    CAPTURE(f.label);
    LieAlgebra l = catalog::make(f);
    Subspace np = near_perfect_radical(l);
    CHECK(product_space(l, Subspace::full(l.dim()), np) == np);
    CHECK(derived_algebra(l).contains(np));
    CHECK(is_ideal(l, np));

    NilpotentDecomposition parts = left_right_nilpotent(l);
    CHECK(is_nilpotent(parts.left));
    CHECK(is_nilpotent(parts.right));

    // Quotient LCS dims are the ambient dims minus dim NP, truncated at zero.
    SeriesReport ambient = lower_central_series(l);
    SeriesReport left = lower_central_series(parts.left);
    for (std::size_t k = 0; k < left.dims.size(); ++k) {
      const std::size_t a = k < ambient.dims.size() ? ambient.dims[k] : ambient.dims.back();
      CHECK(left.dims[k] == a - np.dim());
    }

    for (const SeriesReport& s : {ambient, derived_series(l), extended_lcs(l)}) {
      for (std::size_t k = 0; k + 1 < s.terms.size(); ++k) CHECK(s.terms[k].contains(s.terms[k + 1]));
    }

    Matrix p = testing::random_invertible(l.dim(), rng);
    LieAlgebra m = change_basis(l, p);
    CHECK(lower_central_series(m).dims == ambient.dims);
    CHECK(extended_lcs(m).dims == extended_lcs(l).dims);
    CHECK(derived_series(m).dims == derived_series(l).dims);
  }
}
