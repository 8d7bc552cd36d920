#pragma once

#include <random>

#include "liealg/constructive.hpp"

namespace liealg::testing {

// Cyclic residual sum D_a b_ce + pairing(c, e) b_{a,z} over the shifts of (a, c, e),
// written out independently of verify_constraints.
inline Vector triple_residual(const StructureData& d, std::size_t a, std::size_t c, std::size_t e) {
  const std::size_t z = d.left_dim - 1;
  auto pairing = [&](std::size_t u, std::size_t v) -> long {
    if (d.family != StructureFamily::HeisenbergLeft || u == z || v == z) return 0;
    if (u % 2 == 0 && v == u + 1) return 1;
    if (v % 2 == 0 && u == v + 1) return -1;
    return 0;
  };
  Vector r(d.right_dim);
  const std::size_t cyc[3][3] = {{a, c, e}, {c, e, a}, {e, a, c}};
  for (const auto& t : cyc) {
    r = add(r, d.d[t[0]] * d.b_at(t[1], t[2]));
    if (long s = pairing(t[1], t[2]); s != 0) axpy(r, Scalar(s), d.b_at(t[0], z));
  }
  return r;
}

inline bool spans(const StructureData& d) { return rank(hstack(d.d)) == d.right_dim; }

struct FuzzCase {
  StructureData data;
  bool corrupted = false;
};

// Random StructureData with commuting D (polynomials in one upper-triangular
// matrix, D_z = 0 for the Heisenberg family) and b drawn from the solution
// space of the triple equations. Corruption perturbs one D or b entry.
// Every returned case satisfies the spanning condition.
inline FuzzCase fuzz_structure(StructureFamily family, std::size_t q, std::size_t m, bool corrupt,
                               std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(-2, 2);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t c = a + 1; c < q; ++c) pairs.push_back({a, c});
  const bool heis = family == StructureFamily::HeisenbergLeft;

  for (;;) {
    Matrix t(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = r; c < m; ++c) t(r, c) = Scalar(small(rng));
    StructureData data{family, q, m, {}, {}};
    for (std::size_t a = 0; a < q; ++a) {
      Matrix d = Scalar(small(rng)) * Matrix::identity(m) + Scalar(small(rng)) * t;
      if (heis && a == q - 1) d = Matrix(m, m);
      data.d.push_back(std::move(d));
    }
    if (!spans(data)) continue;

    // Columns of the linear map b -> (all triple residuals).
    std::vector<Vector> columns;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      for (std::size_t k = 0; k < m; ++k) {
        StructureData probe = data;
        probe.set_b(pairs[p].first, pairs[p].second, unit_vector(m, k));
        Vector col;
        for (std::size_t a = 0; a < q; ++a)
          for (std::size_t c = a + 1; c < q; ++c)
            for (std::size_t e = c + 1; e < q; ++e) {
              Vector r = triple_residual(probe, a, c, e);
              col.insert(col.end(), r.begin(), r.end());
            }
        columns.push_back(std::move(col));
      }
    }
    const std::size_t unknowns = pairs.size() * m;
    std::vector<Vector> free;
    if (!columns.empty() && !columns.front().empty()) {
      free = kernel(Matrix::from_columns(columns, columns.front().size())).basis_vectors();
    } else {
      free = Subspace::full(unknowns).basis_vectors();
    }
    Vector b(unknowns);
    for (const auto& v : free) axpy(b, Scalar(small(rng)), v);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      Vector part(b.begin() + static_cast<std::ptrdiff_t>(p * m), b.begin() + static_cast<std::ptrdiff_t>((p + 1) * m));
      data.set_b(pairs[p].first, pairs[p].second, part);
    }

    FuzzCase out{data, false};
    if (corrupt) {
      std::uniform_int_distribution<std::size_t> which(0, 1);
      std::uniform_int_distribution<long> delta(1, 2);
      if (pairs.empty() || which(rng) == 0) {
        std::uniform_int_distribution<std::size_t> pick_a(0, q - 1), pick_r(0, m - 1);
        std::size_t a = pick_a(rng), r = pick_r(rng), c = pick_r(rng);
        out.data.d[a](r, c) += Scalar(delta(rng));
      } else {
        std::uniform_int_distribution<std::size_t> pick_p(0, pairs.size() - 1), pick_k(0, m - 1);
        auto [a, c] = pairs[pick_p(rng)];
        Vector v = out.data.b_at(a, c);
        v[pick_k(rng)] += Scalar(delta(rng));
        out.data.set_b(a, c, v);
      }
      out.corrupted = true;
      if (!spans(out.data)) continue;
    }
    return out;
  }
}

}  // namespace liealg::testing
