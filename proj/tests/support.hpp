#pragma once

#include <random>

#include "liealg/linalg.hpp"

namespace liealg::testing {

// Random invertible matrix with small integer entries (rejection sampled).
inline Matrix random_invertible(std::size_t n, std::mt19937_64& rng, long range = 3) {
  std::uniform_int_distribution<long> dist(-range, range);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(dist(rng));
    if (is_invertible(m)) return m;
  }
}

inline Scalar random_scalar(std::mt19937_64& rng, long range = 4) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, range);
  return Scalar(mpq_class(mpz_class(num(rng)), mpz_class(den(rng))), mpq_class(mpz_class(num(rng)), mpz_class(den(rng))));
}

}  // namespace liealg::testing
