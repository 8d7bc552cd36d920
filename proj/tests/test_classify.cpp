#include "doctest.h"
#include "liealg/catalog.hpp"
#include "liealg/classify.hpp"
#include "liealg/series.hpp"
#include "support.hpp"

using namespace liealg;

TEST_CASE("nilpotent recognition") {
  CHECK(recognize_nilpotent(catalog::abelian(3)).to_string() == "A(3)");
  CHECK(recognize_nilpotent(catalog::abelian(1)).to_string() == "A(1)");
  CHECK(recognize_nilpotent(catalog::heisenberg(2)).to_string() == "H2");
  CHECK(recognize_nilpotent(catalog::make("F4")).to_string() == "F(4)");

  // H1 + A(1): two-step but neither Heisenberg nor filiform.
  CHECK(recognize_nilpotent(direct_sum(catalog::heisenberg(1), catalog::abelian(1))).to_string() == "2step(4)");
  // F4 + A(1): nilindex 3 without the filiform profile.
  CHECK(recognize_nilpotent(direct_sum(catalog::make("F4"), catalog::abelian(1))).to_string() == "U(5)");

  try {
    (void)recognize_nilpotent(catalog::make("s2_1"));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNilpotent);
  }
}

TEST_CASE("decomposition tags") {
  CHECK(decomposition_tag(catalog::make("s2_1")).to_string() == "A(1)-A(1)");
  CHECK(decomposition_tag(catalog::make("s4_6")).to_string() == "A(1)-H1");
  CHECK(decomposition_tag(catalog::make("s4_3", {{"a", Scalar::fraction(1, 2)}, {"b", Scalar::fraction(1, 3)}}))
            .to_string() == "A(1)-A(3)");
  CHECK_THROWS_AS((void)decomposition_tag(catalog::heisenberg(1)), Error);
}

TEST_CASE("fixture tags are basis invariant") {
  std::mt19937_64 rng(8);
  for (const auto& f : catalog::solvable_fixtures()) {
    CAPTURE(f.label);
    LieAlgebra l = catalog::make(f);
    CHECK(decomposition_tag(l).to_string() == f.expected_tag);
    for (int t = 0; t < 3; ++t) {
      Matrix p = testing::random_invertible(l.dim(), rng);
      CHECK(decomposition_tag(change_basis(l, p)).to_string() == f.expected_tag);
    }
  }
}

TEST_CASE("Heisenberg basis certificate") {
  std::mt19937_64 rng(9);
  for (std::size_t p = 1; p <= 3; ++p) {
    LieAlgebra h = catalog::heisenberg(p);
    for (int t = 0; t < 5; ++t) {
      LieAlgebra scrambled = change_basis(h, testing::random_invertible(h.dim(), rng));
      Matrix basis = heisenberg_basis(scrambled);
      CHECK(is_isomorphism_via(scrambled, h, basis));
    }
  }
  // The nilradical of s4_6 is H1.
  LieAlgebra s46 = catalog::make("s4_6");
  Subspace nil = Subspace::span(4, {unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 2)});
  CHECK(is_ideal(s46, nil));
  LieAlgebra r = restrict_to(s46, nil).algebra;
  CHECK(recognize_nilpotent(r).to_string() == "H1");
  CHECK(is_isomorphism_via(r, catalog::heisenberg(1), heisenberg_basis(r)));

  try {
    (void)heisenberg_basis(catalog::abelian(3));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongTag);
  }
}
