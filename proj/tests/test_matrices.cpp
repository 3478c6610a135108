#include "helpers.hpp"

using namespace qroth;
using namespace qroth::test;

TEST_CASE("matrix basics") {
  const QMatrix a{{q(1), q(2)}, {q(3), q(4)}};
  CHECK(a.transpose() == QMatrix{{q(1), q(3)}, {q(2), q(4)}});
  CHECK(QMatrix::identity(2) * a == a);
  CHECK_THROWS_AS(a * QMatrix(3, 1), DimensionError);
  CHECK_THROWS_AS(a + QMatrix(2, 3), DimensionError);
  // order-preserving product over a noncommutative ring
  const QMatrix ii = scalar(Quaternion::i()), jj = scalar(Quaternion::j());
  CHECK(ii * jj == scalar(Quaternion::k()));
  CHECK(jj * ii == scalar(-Quaternion::k()));
}

TEST_CASE("split into complex parts") {
  auto parts = split_complex_parts(scalar(Quaternion::j()));
  CHECK(parts.first == CMatrix{{z(0)}});
  CHECK(parts.second == CMatrix{{z(1)}});
  parts = split_complex_parts(scalar(q(1, 1)));
  CHECK(parts.first == CMatrix{{z(1, 1)}});
  CHECK(parts.second == CMatrix{{z(0)}});
  parts = split_complex_parts(scalar(Quaternion::k()));
  CHECK(parts.first == CMatrix{{z(0)}});
  CHECK(parts.second == CMatrix{{z(0, 1)}});
  CHECK_THROWS_AS(join_complex_parts(CMatrix(2, 2), CMatrix(2, 3)), DimensionError);
}

TEST_CASE("hat of a matrix") {
  CHECK(hat_matrix(scalar(Quaternion::j()), Automorphism(-1)) == scalar(-Quaternion::j()));
  Rng rng(3);
  const QMatrix m = random_qmatrix(rng, 2, 3, 5);
  CHECK(hat_matrix(m, Automorphism(1)) == m);
  CHECK(hat_matrix(hat_matrix(m, Automorphism(-1)), Automorphism(-1)) == m);
}

TEST_CASE("complex adjoint examples") {
  CHECK(complex_adjoint(scalar(Quaternion::j())) == CMatrix{{z(0), z(1)}, {z(-1), z(0)}});
  CHECK(complex_adjoint(scalar(Quaternion::i())) == CMatrix{{z(0, 1), z(0)}, {z(0), z(0, -1)}});
  CHECK(complex_adjoint(QMatrix::identity(3)) == CMatrix::identity(6));
  const QMatrix rect{{q(1, 2, 3, 4), q(0, 0, 1)}};
  const CMatrix adj = complex_adjoint(rect);
  CHECK(adj.rows() == 2);
  CHECK(adj.cols() == 4);
  CHECK(from_complex_adjoint(adj) == rect);
}

TEST_CASE("twisted adjoint examples") {
  const QMatrix jj = scalar(Quaternion::j());
  CHECK(twisted_adjoint(jj, Automorphism(-1)) == CMatrix{{z(0), z(1)}, {z(1), z(0)}});
  CHECK(twisted_adjoint(jj, Automorphism(1)) == complex_adjoint(jj));
  CHECK(JTwist{-1, 2}.matrix() == CMatrix{{z(1), z(0), z(0), z(0)},
                                         {z(0), z(1), z(0), z(0)},
                                         {z(0), z(0), z(-1), z(0)},
                                         {z(0), z(0), z(0), z(-1)}});
}

TEST_CASE("real representation") {
  const RMatrix expected{{r(0), r(1), r(0), r(0)},
                         {r(1), r(0), r(0), r(0)},
                         {r(0), r(0), r(0), r(1)},
                         {r(0), r(0), r(1), r(0)}};
  CHECK(real_rep(scalar(Quaternion::i())) == expected);
  const QMatrix real{{q(2), q(-1)}, {q(0), q(5)}};
  const RMatrix rr = real_rep(real);
  CHECK(rr.block(0, 0, 2, 2) == RMatrix{{r(2), r(-1)}, {r(0), r(5)}});
  CHECK(rr.block(2, 2, 2, 2) == RMatrix{{r(-2), r(1)}, {r(0), r(-5)}});
  CHECK(rr.block(0, 2, 2, 6).is_zero());
  CHECK_THROWS_AS(real_rep(QMatrix(2, 3)), DimensionError);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const QMatrix a = random_qmatrix(rng, 3, 3, 5);
    const QMatrix b = random_qmatrix(rng, 3, 3, 5);
    CHECK(from_real_rep(real_rep(a)) == a);
    CHECK(real_rep(a + b) == real_rep(a) + real_rep(b));
  }
}

TEST_CASE("quaternion rank") {
  CHECK(quaternion_rank(QMatrix(3, 2)) == 0);
  CHECK(quaternion_rank(QMatrix::identity(4)) == 4);
  // second row is j times the first: j*(j, 1) = (-1, j)
  const QMatrix m{{Quaternion::j(), q(1)}, {q(-1), Quaternion::j()}};
  CHECK(quaternion_rank(m) == 1);
  CHECK(rank(complex_adjoint(m)) == 2);
  CHECK_FALSE(is_nonsingular(m));
  CHECK_FALSE(quaternion_inverse(m).has_value());
  // rank over H is not the rank over the commutative reading: (i, j) and (1, -k)
  const QMatrix n{{Quaternion::i(), Quaternion::j()}, {q(1), -Quaternion::k()}};
  CHECK(quaternion_rank(n) == 1);
}

TEST_CASE("block helpers") {
  CHECK(block_2x2(scalar(q(1)), scalar(q(1)), scalar(q(2))) ==
        QMatrix{{q(1), q(1)}, {q(0), q(2)}});
  const QMatrix a{{q(1), q(2)}, {q(3), q(4)}};
  const QMatrix b = scalar(Quaternion::k());
  CHECK(block_2x2(a, QMatrix(2, 1), b) == block_diag(a, b));
  CHECK(fill_block(BlockFill::identity, 3) == QMatrix::identity(3));
  CHECK(fill_block(BlockFill::zero, 2) == QMatrix(2, 2));
  const Blocks parts = extract_blocks(block_2x2(a, QMatrix{{q(7)}, {q(8)}}, b), 2, 1);
  CHECK(parts.top_left == a);
  CHECK(parts.top_right == QMatrix{{q(7)}, {q(8)}});
  CHECK(parts.bottom_left.is_zero());
  CHECK(parts.bottom_right == b);
  CHECK_THROWS_AS(block_2x2(a, QMatrix(2, 2), b), DimensionError);
}

TEST_CASE("homomorphism laws on random matrices") {
  Rng rng(77);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const std::size_t p = static_cast<std::size_t>(rng.uniform(1, 3));
    const QMatrix a = random_qmatrix(rng, m, n, 6);
    const QMatrix a2 = random_qmatrix(rng, m, n, 6);
    const QMatrix b = random_qmatrix(rng, n, p, 6);
    CHECK(complex_adjoint(a * b) == complex_adjoint(a) * complex_adjoint(b));
    CHECK(complex_adjoint(a + a2) == complex_adjoint(a) + complex_adjoint(a2));
    CHECK(from_complex_adjoint(complex_adjoint(a)) == a);
    const auto parts = split_complex_parts(a);
    CHECK(join_complex_parts(parts.first, parts.second) == a);
    for (int eps : {1, -1}) {
      const Automorphism aut(eps);
      const QMatrix sq = random_qmatrix(rng, m, m, 6);
      CHECK(complex_adjoint(hat_matrix(sq, aut)) ==
            JTwist{eps, m}.matrix() * complex_adjoint(sq) * JTwist{eps, m}.matrix());
      CHECK(twisted_adjoint(sq, aut) == JTwist{eps, m}.matrix() * complex_adjoint(sq));
      CHECK(hat_matrix(a * b, aut) == hat_matrix(a, aut) * hat_matrix(b, aut));
      CHECK(hat_matrix(hat_matrix(a, aut), aut) == a);
    }
  }
}

TEST_CASE("inverse exists exactly when the adjoint is nonsingular") {
  Rng rng(9);
  int singular = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    QMatrix a = random_qmatrix(rng, n, n, 2);
    if (t % 3 == 0 && n > 1)  // force a dependent row
      for (std::size_t c = 0; c < n; ++c) a(n - 1, c) = Quaternion::k() * a(0, c);
    const bool adj_nonsingular = inverse(complex_adjoint(a)).has_value();
    const auto inv = quaternion_inverse(a);
    CHECK(inv.has_value() == adj_nonsingular);
    CHECK(is_nonsingular(a) == adj_nonsingular);
    CHECK(quaternion_rank(a) * 2 == rank(complex_adjoint(a)));
    if (inv) {
      CHECK(a * *inv == QMatrix::identity(n));
      CHECK(*inv * a == QMatrix::identity(n));
    } else {
      ++singular;
    }
  }
  CHECK(singular > 0);
}
