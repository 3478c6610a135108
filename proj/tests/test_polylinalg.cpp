#include "helpers.hpp"

#include <functional>

using namespace qroth;
using namespace qroth::test;

namespace {

const Poly X = Poly::x();

Poly det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Poly(1);
  if (n == 1) return m(0, 0);
  Poly out;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Poly term = m(0, c) * det_cofactor(minor);
    if (c % 2 == 0) out += term; else out -= term;
  }
  return out;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Invariant factors from determinantal divisors: d_k is the monic gcd of all
// k x k minors and f_k = d_k / d_{k-1}.
std::vector<Poly> invariant_factors_by_minors(const PolyMatrix& m) {
  std::vector<Poly> factors;
  Poly prev(1);
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    subsets(m.rows(), k, rows);
    subsets(m.cols(), k, cols);
    Poly d;
    for (const auto& rs : rows)
      for (const auto& cs : cols) {
        PolyMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
        d = gcd(d, det_cofactor(sub));
      }
    if (d.is_zero()) break;
    const PolyDivision div = divmod(d, prev);
    REQUIRE(div.remainder.is_zero());
    factors.push_back(div.quotient);
    prev = d;
  }
  return factors;
}

PolyMatrix random_unimodular_poly(Rng& rng, std::size_t n) {
  PolyMatrix u = PolyMatrix::identity(n);
  for (int step = 0; step < 6; ++step) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    if (i == j) continue;
    const Poly f = Poly::linear(z(rng.uniform(-2, 2)), z(rng.uniform(-1, 1), rng.uniform(-1, 1)));
    PolyMatrix e = PolyMatrix::identity(n);
    e(i, j) = f;
    u = u * e;
  }
  return u;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Poly p = (X - Poly(1)) * (X - Poly(2));
  CHECK(p == Poly(std::vector<Gaussian>{z(2), z(-3), z(1)}));
  const PolyDivision d = divmod(p, X - Poly(1));
  CHECK(d.quotient == X - Poly(2));
  CHECK(d.remainder.is_zero());
  CHECK(gcd(p, (X - Poly(2)) * (X + Poly(z(0, 1)))) == X - Poly(2));
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK(gcd(Poly(z(3)), X).is_one());
  CHECK(Poly().degree() == -1);
  CHECK_THROWS_AS(divmod(X, Poly()), std::domain_error);
  CHECK((X * Poly(z(2)) - Poly(1)).reciprocal() == Poly(std::vector<Gaussian>{z(2), z(-1)}));
}

TEST_CASE("linear system examples") {
  using RVec = std::vector<Rational>;
  auto sol = solve_linear_system(RMatrix::identity(2), RVec{r(3), r(-1)});
  CHECK(sol.consistent);
  CHECK(sol.particular == RVec{r(3), r(-1)});
  CHECK(sol.nullspace.empty());

  const RMatrix zero(2, 2);
  sol = solve_linear_system(zero, RVec{r(1), r(0)});
  CHECK_FALSE(sol.consistent);
  REQUIRE(sol.certificate.size() == 2);
  CHECK(sol.certificate[0] * r(1) + sol.certificate[1] * r(0) == r(1));

  const RMatrix a{{r(1), r(1)}, {r(2), r(2)}};
  sol = solve_linear_system(a, RVec{r(1), r(2)});
  CHECK(sol.consistent);
  CHECK(sol.particular == RVec{r(1), r(0)});
  REQUIRE(sol.nullspace.size() == 1);
  CHECK(sol.nullspace[0] == RVec{r(-1), r(1)});

  sol = solve_linear_system(a, RVec{r(1), r(3)});
  CHECK_FALSE(sol.consistent);
  const auto& y = sol.certificate;
  CHECK(y[0] * r(1) + y[1] * r(2) == r(0));
  CHECK(y[0] * r(1) + y[1] * r(3) == r(1));
  CHECK_THROWS_AS(solve_linear_system(a, RVec{r(1)}), DimensionError);
}

TEST_CASE("smith form examples") {
  const CMatrix nil{{z(0), z(1)}, {z(0), z(0)}};
  SmithForm sf = smith_normal_form(characteristic_matrix(nil));
  CHECK(sf.invariant_factors == std::vector<Poly>{Poly(1), X * X});
  CHECK(invariant_factors_by_minors(characteristic_matrix(nil)) == sf.invariant_factors);

  sf = smith_normal_form(characteristic_matrix(CMatrix(2, 2)));
  CHECK(sf.invariant_factors == std::vector<Poly>{X, X});
  CHECK(invariant_factors_by_minors(characteristic_matrix(CMatrix(2, 2))) == sf.invariant_factors);

  const CMatrix diag{{z(1), z(0)}, {z(0), z(2)}};
  sf = smith_normal_form(characteristic_matrix(diag));
  CHECK(sf.invariant_factors == std::vector<Poly>{Poly(1), (X - Poly(1)) * (X - Poly(2))});
  CHECK(invariant_factors_by_minors(characteristic_matrix(diag)) == sf.invariant_factors);

  PolyMatrix rank_one{{X, X}, {X, X}};
  sf = smith_normal_form(rank_one);
  CHECK(sf.rank == 1);
  CHECK(sf.invariant_factors == std::vector<Poly>{X});
  CHECK(smith_normal_form(PolyMatrix(2, 3)).rank == 0);
}

TEST_CASE("smith form agrees with determinantal divisors") {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    CMatrix a = random_cmatrix(rng, n, n, 3);
    if (t % 4 == 0) a = CMatrix(n, n);  // scalar and repeated-eigenvalue cases
    if (t % 4 == 1 && n > 1) {
      a(1, 0) = Gaussian();
      a(0, 0) = a(1, 1);
    }
    const PolyMatrix m = characteristic_matrix(a);
    CHECK(smith_normal_form(m).invariant_factors == invariant_factors_by_minors(m));
  }
  for (int t = 0; t < 20; ++t) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 3));
    PolyMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (rng.coin()) m(i, j) = Poly::linear(z(rng.uniform(-2, 2)), z(rng.uniform(-1, 1)));
    const SmithForm sf = smith_normal_form(m);
    CHECK(sf.invariant_factors == invariant_factors_by_minors(m));
    CHECK(sf.rank == sf.invariant_factors.size());
  }
}

TEST_CASE("smith form is invariant under unimodular operations") {
  Rng rng(22);
  for (int t = 0; t < 30; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const PolyMatrix m = characteristic_matrix(random_cmatrix(rng, n, n, 3));
    const PolyMatrix moved = random_unimodular_poly(rng, n) * m * random_unimodular_poly(rng, n);
    CHECK(smith_normal_form(moved) == smith_normal_form(m));
  }
}

TEST_CASE("characteristic polynomial and product of invariant factors") {
  CHECK(characteristic_polynomial(CMatrix{{z(1), z(0)}, {z(0), z(2)}}) ==
        (X - Poly(1)) * (X - Poly(2)));
  CHECK(characteristic_polynomial(CMatrix{{z(0, 1)}}) == X - Poly(z(0, 1)));
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const CMatrix a = random_cmatrix(rng, n, n, 4);
    Poly product(1);
    for (const Poly& f : smith_normal_form(characteristic_matrix(a)).invariant_factors)
      product *= f;
    CHECK(product == characteristic_polynomial(a));
    CHECK(product == det_cofactor(characteristic_matrix(a)).monic());
  }
}

TEST_CASE("similarity over C") {
  const CMatrix nil{{z(0), z(1)}, {z(0), z(0)}};
  CHECK_FALSE(similar_over_C(nil, CMatrix(2, 2)));
  CHECK(similar_over_C(nil, nil));
  CHECK_THROWS_AS(similar_over_C(nil, CMatrix(3, 3)), DimensionError);
  Rng rng(24);
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const CMatrix a = random_cmatrix(rng, n, n, 4);
    const CMatrix s = random_nonsingular_c(rng, n);
    CHECK(similar_over_C(a, s * a * *inverse(s)));
  }
}

TEST_CASE("strict equivalence of pencils") {
  const Pencil shifted0(CMatrix::identity(2), CMatrix(2, 2));
  const Pencil shifted1(CMatrix::identity(2), CMatrix::identity(2));
  CHECK(strictly_equivalent_pencils(shifted0, shifted1) == PencilVerdict::inequivalent);
  CHECK(strictly_equivalent_pencils(shifted0, shifted0) == PencilVerdict::equivalent);

  const Pencil singular(CMatrix{{z(1), z(0)}, {z(0), z(0)}}, CMatrix{{z(0), z(0)}, {z(0), z(0)}});
  CHECK_FALSE(is_regular(singular));
  CHECK(strictly_equivalent_pencils(singular, singular) == PencilVerdict::non_regular);

  // x N + I with N nilpotent has no finite elementary divisors
  const Pencil inf_a(CMatrix{{z(0), z(1)}, {z(0), z(0)}}, CMatrix::identity(2));
  const Pencil inf_b(CMatrix(2, 2), CMatrix::identity(2));
  CHECK(is_regular(inf_a));
  CHECK(smith_normal_form(inf_a.matrix()) == smith_normal_form(inf_b.matrix()));
  CHECK(strictly_equivalent_pencils(inf_a, inf_b) == PencilVerdict::inequivalent);

  Rng rng(25);
  for (int t = 0; t < 15; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const Pencil p(random_cmatrix(rng, n, n, 3), random_cmatrix(rng, n, n, 3));
    const CMatrix s = random_nonsingular_c(rng, n), rr = random_nonsingular_c(rng, n);
    const Pencil moved(s * p.lead * rr, s * p.constant * rr);
    const PencilVerdict v = strictly_equivalent_pencils(p, moved);
    CHECK(v == (is_regular(p) ? PencilVerdict::equivalent : PencilVerdict::non_regular));
  }
}
