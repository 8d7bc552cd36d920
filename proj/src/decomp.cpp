#include "liealg/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <random>
#include <thread>

#include "liealg/classify.hpp"

namespace liealg {

// ----------------------------------------------------------- polynomials

namespace {

using Poly = Polynomial;

Poly trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

std::size_t degree(const Poly& p) { return p.empty() ? 0 : p.size() - 1; }
bool is_constant(const Poly& p) { return p.size() <= 1; }

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return trim(std::move(out));
}

Poly poly_scale(const Scalar& s, Poly p) {
  for (auto& c : p) c *= s;
  return trim(std::move(p));
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_scale(Scalar(-1), b)); }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return trim(std::move(out));
}

Poly poly_pow(const Poly& a, std::size_t k) {
  Poly out{Scalar(1)};
  for (std::size_t i = 0; i < k; ++i) out = poly_mul(out, a);
  return out;
}

std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  a = trim(std::move(a));
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1);
  const Scalar lead_inv = b.back().inv();
  for (std::size_t k = q.size(); k-- > 0;) {
    Scalar c = a[k + b.size() - 1] * lead_inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  return {trim(std::move(q)), trim(std::move(a))};
}

Poly monic(Poly p) {
  p = trim(std::move(p));
  if (p.empty()) return p;
  const Scalar lead_inv = p.back().inv();
  return poly_scale(lead_inv, std::move(p));
}

Poly poly_gcd(Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * Scalar(static_cast<long>(k));
  return trim(std::move(out));
}

Poly exact_div(const Poly& a, const Poly& b) { return poly_divmod(a, b).first; }

// Returns (g, u) with u a = g mod b, g monic gcd.
std::pair<Poly, Poly> ext_gcd_left(const Poly& a, const Poly& b) {
  Poly r0 = trim(a), r1 = trim(b);
  Poly s0{Scalar(1)}, s1{};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  Scalar lead_inv = r0.back().inv();
  return {poly_scale(lead_inv, r0), poly_scale(lead_inv, s0)};
}

// Squarefree factorization f = prod a_i^i (Yun), for monic f.
std::vector<std::pair<Poly, std::size_t>> squarefree_factors(const Poly& f) {
  std::vector<std::pair<Poly, std::size_t>> out;
  Poly fp = derivative(f);
  Poly b = poly_gcd(f, fp);
  Poly c = exact_div(f, b);
  Poly d = poly_sub(exact_div(fp, b), derivative(c));
  for (std::size_t i = 1; !is_constant(c); ++i) {
    Poly a = poly_gcd(c, d);
    if (!is_constant(a)) out.push_back({a, i});
    c = exact_div(c, a);
    d = poly_sub(exact_div(d, a), derivative(c));
  }
  return out;
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
  Scalar acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

// ---------------------------------------------- numeric root candidates

using Complex = std::complex<long double>;

Complex to_complex(const Scalar& s) { return {s.re().get_d(), s.im().get_d()}; }

// Aberth iteration on a squarefree monic polynomial; only used to propose
// candidates that are then checked exactly.
std::vector<Complex> approximate_roots(const Poly& p) {
  const std::size_t n = degree(p);
  std::vector<Complex> coeffs;
  for (const auto& c : p) coeffs.push_back(to_complex(c));
  long double bound = 0;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(coeffs[k]));
  bound += 1;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    long double angle = 2 * M_PIl * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L;
    z[k] = std::polar(bound, angle);
  }
  auto eval = [&](Complex x, Complex& dp) {
    Complex v = 0;
    dp = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      dp = dp * x + v;
      v = v * x + coeffs[k];
    }
    return v;
  };
  for (int iter = 0; iter < 1000; ++iter) {
    long double moved = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex dp;
      Complex v = eval(z[k], dp);
      if (v == Complex(0)) continue;
      Complex ratio = v / dp;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += Complex(1) / (z[k] - z[j]);
      }
      Complex w = ratio / (Complex(1) - ratio * sum);
      z[k] -= w;
      moved = std::max(moved, std::abs(w));
    }
    if (moved < 1e-15L) break;
  }
  return z;
}

// Nearest Gaussian integer as a Scalar, or nullopt if out of range.
std::optional<Scalar> round_gaussian(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
  if (std::abs(z.real()) > 1e15L || std::abs(z.imag()) > 1e15L) return std::nullopt;
  return Scalar(mpq_class(static_cast<long>(std::llround(z.real()))),
                mpq_class(static_cast<long>(std::llround(z.imag()))));
}

// A monic factor of the squarefree monic polynomial a of degree 1 or 2, strictly smaller than a.
std::optional<Poly> proper_factor(const Poly& a) {
  const std::size_t n = degree(a);
  if (n <= 1) return std::nullopt;
  if (n == 2) {
    Scalar disc = a[1] * a[1] - Scalar(4) * a[0];
    Scalar root;
    if (!gaussian_sqrt(disc, root)) return std::nullopt;
    return Poly{(a[1] - root) / Scalar(2), Scalar(1)};
  }
  // Roots in Q(i) of the monic a are r = s / den with s a Gaussian integer,
  // den the lcm of the coefficient denominators; likewise for quadratic factors.
  mpz_class den = 1;
  for (const auto& c : a) {
    den = lcm(den, c.re().get_den());
    den = lcm(den, c.im().get_den());
  }
  if (den > mpz_class(1L << 30)) return std::nullopt;
  const long double dd = den.get_d();
  const Scalar den_s = Scalar(mpq_class(den));
  std::vector<Complex> z = approximate_roots(a);
  for (const auto& root : z) {
    auto s = round_gaussian(root * dd);
    if (!s) continue;
    Scalar r = *s / den_s;
    if (poly_eval(a, r).is_zero()) return Poly{-r, Scalar(1)};
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      auto sum = round_gaussian((z[i] + z[j]) * dd);
      auto prod = round_gaussian(z[i] * z[j] * dd * dd);
      if (!sum || !prod) continue;
      Poly q{*prod / (den_s * den_s), -(*sum / den_s), Scalar(1)};
      if (poly_divmod(a, q).second.empty()) return q;
    }
  }
  return std::nullopt;
}

// Coprime nonconstant f, g with f g = mu.
std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& mu) {
  auto factors = squarefree_factors(mu);
  Poly f;
  if (factors.size() >= 2) {
    f = poly_pow(factors[0].first, factors[0].second);
  } else if (factors.size() == 1) {
    auto piece = proper_factor(factors[0].first);
    if (!piece) return std::nullopt;
    f = poly_pow(*piece, factors[0].second);
  } else {
    return std::nullopt;
  }
  auto [g, rem] = poly_divmod(mu, f);
  if (!rem.empty() || is_constant(f) || is_constant(g)) return std::nullopt;
  if (!is_constant(poly_gcd(f, g))) return std::nullopt;
  return std::pair{f, g};
}

Vector flatten(const Matrix& m) { return m.entries(); }

Matrix unflatten(const Vector& v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
  return m;
}

}  // namespace

Matrix evaluate(const Polynomial& f, const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (std::size_t k = f.size(); k-- > 0;) acc = acc * m + f[k] * Matrix::identity(n);
  return acc;
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vector> powers{flatten(Matrix::identity(n))};
  Matrix current = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * m;
    Vector target = flatten(current);
    LinearSolution sol = solve_linear(Matrix::from_columns(powers, n * n), target);
    if (sol.consistent) {
      Poly mu(k + 1);
      for (std::size_t j = 0; j < k; ++j) mu[j] = -sol.particular[j];
      mu[k] = Scalar(1);
      return mu;
    }
    powers.push_back(std::move(target));
  }
  throw Error(ErrorCode::InternalContradiction, "no polynomial relation up to degree n");
}

// -------------------------------------------------------------- centroid

bool Centroid::contains(const Matrix& m) const {
  const std::size_t n = algebra_dim;
  if (m.rows() != n || m.cols() != n) return false;
  if (basis.empty()) return m.is_zero();
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  return solve_linear(Matrix::from_columns(cols, n * n), flatten(m)).consistent;
}

Centroid centroid(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  // Unknown phi(r, k) at index r * n + k; phi e_k = sum_r phi(r, k) e_r.
  // Row (i, j, r): sum_k c_ij^k phi(r, k) - sum_m phi(m, i) c_mj^r = 0.
  std::vector<Vector> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = l.bracket(i, j);
  Matrix system(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0; r < n; ++r) {
        const std::size_t row = (i * n + j) * n + r;
        for (std::size_t k = 0; k < n; ++k) system(row, r * n + k) += table[i * n + j][k];
        for (std::size_t m = 0; m < n; ++m) system(row, m * n + i) -= table[m * n + j][r];
      }
    }
  }
  Centroid c{n, {}};
  for (const auto& v : kernel(system).basis_vectors()) c.basis.push_back(unflatten(v, n));

  if (!c.contains(Matrix::identity(n))) throw Error(ErrorCode::InternalContradiction, "identity not in centroid");
  for (const auto& a : c.basis) {
    for (const auto& b : c.basis) {
      if (!c.contains(a * b)) throw Error(ErrorCode::InternalContradiction, "centroid not closed under products");
    }
  }
  return c;
}

std::optional<Matrix> find_idempotent(const Centroid& c) {
  const std::size_t n = c.algebra_dim;
  std::vector<Matrix> candidates = c.basis;
  for (std::size_t a = 0; a < c.basis.size(); ++a)
    for (std::size_t b = a + 1; b < c.basis.size(); ++b) candidates.push_back(c.basis[a] + c.basis[b]);
  if (c.basis.size() > 2) {
    Matrix generic(n, n);
    for (std::size_t k = 0; k < c.basis.size(); ++k) {
      generic = generic + Scalar(static_cast<long>(k + 1)) * c.basis[k];
    }
    candidates.push_back(std::move(generic));
  }

  const Matrix id = Matrix::identity(n);
  for (const auto& m : candidates) {
    Poly mu = minimal_polynomial(m);
    if (degree(mu) < 2) continue;
    auto split = coprime_split(mu);
    if (!split) continue;
    // u f = 1 mod g, so e = (u f)(m) is 0 on ker f(m) and 1 on ker g(m).
    auto [g, u] = ext_gcd_left(split->first, split->second);
    if (!is_constant(g)) continue;
    Poly e_poly = poly_divmod(poly_mul(u, split->first), mu).second;
    Matrix e = evaluate(e_poly, m);
    if (e * e == e && !e.is_zero() && e != id && c.contains(e)) return e;
  }
  return std::nullopt;
}

// ------------------------------------------------------- decomposability

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Decomposable: return "Decomposable";
    case VerdictStatus::Indecomposable: return "Indecomposable";
    case VerdictStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

// C = F * identity + N with N a nilpotent two-sided ideal; then C is local and
// has no idempotents besides 0 and 1.
bool centroid_is_local(const Centroid& c) {
  const std::size_t n = c.algebra_dim;
  const Matrix id = Matrix::identity(n);
  std::vector<Vector> nil;
  for (const auto& b : c.basis) {
    Scalar trace;
    for (std::size_t k = 0; k < n; ++k) trace += b(k, k);
    Matrix shifted = b - (trace / Scalar(static_cast<long>(n))) * id;
    Matrix power = shifted;
    for (std::size_t k = 1; k < n; ++k) power = power * shifted;
    if (!power.is_zero()) return false;
    nil.push_back(flatten(shifted));
  }
  Subspace ideal = Subspace::span(n * n, nil);
  if (ideal.dim() + 1 != c.dim()) return false;
  auto products = [&](const Subspace& s) {
    std::vector<Vector> out;
    for (const auto& a : s.basis_vectors()) {
      for (const auto& b : ideal.basis_vectors()) out.push_back(flatten(unflatten(a, n) * unflatten(b, n)));
    }
    return Subspace::span(n * n, out);
  };
  if (!ideal.contains(products(ideal))) return false;
  Subspace chain = ideal;
  while (!chain.is_zero()) {
    Subspace next = products(chain);
    if (next.dim() >= chain.dim()) return false;
    chain = next;
  }
  return true;
}

}  // namespace

DecomposabilityVerdict decomposability(const LieAlgebra& l) {
  if (l.dim() == 0) throw Error(ErrorCode::InvalidParameters, "decomposability needs dim >= 1");
  const std::size_t n = l.dim();
  Centroid c = centroid(l);
  DecomposabilityVerdict verdict;
  verdict.centroid_dim = c.dim();
  if (c.dim() == 1) {
    verdict.status = VerdictStatus::Indecomposable;
    verdict.reason = "centroid dimension 1";
    return verdict;
  }
  if (auto e = find_idempotent(c)) {
    Subspace image = Subspace::row_space(e->transpose());
    Subspace ker = kernel(*e);
    if (!is_ideal(l, image) || !is_ideal(l, ker)) {
      throw Error(ErrorCode::InternalContradiction, "centroid idempotent does not split into ideals");
    }
    verdict.status = VerdictStatus::Decomposable;
    verdict.witness = make_direct_sum_witness(l, {image.basis_vectors(), ker.basis_vectors()});
    verdict.reason = "centroid idempotent of rank " + std::to_string(image.dim()) + " in dimension " +
                     std::to_string(n);
    return verdict;
  }
  if (centroid_is_local(c)) {
    verdict.status = VerdictStatus::Indecomposable;
    verdict.reason = "centroid is the identity plus a nilpotent ideal";
    return verdict;
  }
  verdict.status = VerdictStatus::Unknown;
  verdict.reason = "idempotent search exhausted";
  return verdict;
}

// ------------------------------------------------------------- conjecture

void SearchReport::merge(const SearchReport& other) {
  decomposable += other.decomposable;
  indecomposable += other.indecomposable;
  unknown += other.unknown;
  skipped += other.skipped;
  rejected_candidates += other.rejected_candidates;
  flagged.insert(flagged.end(), other.flagged.begin(), other.flagged.end());
  unknown_instances.insert(unknown_instances.end(), other.unknown_instances.begin(), other.unknown_instances.end());
}

std::optional<StructureData> random_abelian_structure(std::size_t n1, std::size_t n2, std::uint64_t seed,
                                                      std::uint64_t index, std::size_t* rejections) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  auto pick = [&](long lo, long hi) { return Scalar(std::uniform_int_distribution<long>(lo, hi)(rng)); };
  const std::size_t m = n2, q = n1;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t c = a + 1; c < q; ++c) pairs.push_back({a, c});
  auto pair_index = [&](std::size_t a, std::size_t c) {
    return static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), std::pair{a, c}) - pairs.begin());
  };

  for (int attempt = 0; attempt < 100; ++attempt) {
    // Polynomials in one upper-triangular matrix commute and stay upper triangular.
    Matrix t(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = r; c < m; ++c) t(r, c) = pick(-3, 3);
    std::vector<Matrix> powers{Matrix::identity(m)};
    for (std::size_t k = 1; k < m; ++k) powers.push_back(powers.back() * t);
    StructureData data{StructureFamily::AbelianLeft, q, m, {}, {}};
    for (std::size_t a = 0; a < q; ++a) {
      Matrix d(m, m);
      d = d + pick(-2, 2) * powers[0];
      d = d + pick(-2, 2) * t;
      for (std::size_t k = 1; k < m; ++k) d = d + pick(-1, 1) * powers[k];
      data.d.push_back(std::move(d));
    }

    // b solves the triple equations D_a b_ce + D_c b_ea + D_e b_ac = 0.
    const std::size_t unknowns = pairs.size() * m;
    std::vector<Vector> rows;
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t c = a + 1; c < q; ++c) {
        for (std::size_t e = c + 1; e < q; ++e) {
          for (std::size_t j = 0; j < m; ++j) {
            Vector row(unknowns);
            for (std::size_t k = 0; k < m; ++k) {
              row[pair_index(c, e) * m + k] += data.d[a](j, k);
              row[pair_index(a, e) * m + k] -= data.d[c](j, k);
              row[pair_index(a, c) * m + k] += data.d[e](j, k);
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
    std::vector<Vector> free = rows.empty() ? Subspace::full(unknowns).basis_vectors()
                                            : kernel(Matrix::from_rows(rows, unknowns)).basis_vectors();
    Vector b(unknowns);
    for (const auto& v : free) axpy(b, pick(-2, 2), v);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      data.set_b(pairs[p].first, pairs[p].second,
                 Vector(b.begin() + static_cast<std::ptrdiff_t>(p * m),
                        b.begin() + static_cast<std::ptrdiff_t>((p + 1) * m)));
    }
    if (verify_constraints(data).ok()) return data;
    if (rejections) ++*rejections;
  }
  return std::nullopt;
}

namespace {

SearchReport search_range(std::size_t n1, std::size_t n2, std::uint64_t seed, std::size_t begin,
                          std::size_t end) {
  SearchReport report;
  const std::string expected = "A(" + std::to_string(n1) + ")-A(" + std::to_string(n2) + ")";
  for (std::size_t k = begin; k < end; ++k) {
    auto data = random_abelian_structure(n1, n2, seed, k, &report.rejected_candidates);
    if (!data) {
      ++report.skipped;
      continue;
    }
    LieAlgebra l = build_from_structure(*data);
    if (decomposition_tag(l).to_string() != expected) {
      throw Error(ErrorCode::InternalContradiction, "generated instance has the wrong tag", expected);
    }
    DecomposabilityVerdict verdict = decomposability(l);
    switch (verdict.status) {
      case VerdictStatus::Decomposable: ++report.decomposable; break;
      case VerdictStatus::Indecomposable:
        ++report.indecomposable;
        report.flagged.push_back(*data);
        break;
      case VerdictStatus::Unknown:
        ++report.unknown;
        report.unknown_instances.push_back(*data);
        break;
    }
  }
  return report;
}

}  // namespace

SearchReport conjecture_search(std::size_t n1, std::size_t n2, std::size_t samples, std::uint64_t seed,
                               unsigned threads) {
  if (!(n1 > n2 && n2 >= 1 && samples >= 1)) {
    throw Error(ErrorCode::InvalidParameters, "conjecture search needs n1 > n2 >= 1 and samples >= 1",
                "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) + " samples=" + std::to_string(samples));
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(threads, samples);
  const std::size_t chunk = (samples + workers - 1) / workers;

  std::vector<std::future<SearchReport>> parts;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk, end = std::min(samples, begin + chunk);
    if (begin >= end) break;
    parts.push_back(std::async(std::launch::async, search_range, n1, n2, seed, begin, end));
  }
  SearchReport report;
  report.n1 = n1;
  report.n2 = n2;
  report.samples = samples;
  report.seed = seed;
  for (auto& part : parts) report.merge(part.get());
  return report;
}

}  // namespace liealg
