#include "qroth/generate.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace qroth {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

std::string_view to_string(GenerateMode mode) {
  return mode == GenerateMode::solvable ? "solvable" : "arbitrary";
}

GenerateMode parse_mode(std::string_view name) {
  if (name == "solvable") return GenerateMode::solvable;
  if (name == "arbitrary") return GenerateMode::arbitrary;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

Rational random_rational(Rng& rng, long magnitude) {
  if (rng.coin()) return Rational(0);
  const long num = rng.uniform(-magnitude, magnitude);
  const long den = rng.uniform(1, magnitude);
  return Rational(num, den);
}

Quaternion random_quaternion(Rng& rng, long magnitude, bool complex_only) {
  Quaternion q;
  q.a = random_rational(rng, magnitude);
  q.b = random_rational(rng, magnitude);
  if (!complex_only) {
    q.c = random_rational(rng, magnitude);
    q.d = random_rational(rng, magnitude);
  }
  return q;
}

QMatrix random_qmatrix(Rng& rng, std::size_t rows, std::size_t cols, long magnitude,
                       bool complex_only) {
  QMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = random_quaternion(rng, magnitude, complex_only);
  return out;
}

namespace {

Quaternion random_unit(Rng& rng, bool complex_only) {
  const long which = rng.uniform(0, complex_only ? 1 : 3);
  const Quaternion units[4] = {Quaternion(1), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  return rng.coin() ? units[which] : -units[which];
}

Quaternion small_entry(Rng& rng, bool complex_only) {
  return rng.coin() ? Quaternion() : random_unit(rng, complex_only);
}

}  // namespace

QMatrix random_unimodular(Rng& rng, std::size_t n, bool complex_only) {
  QMatrix lower = QMatrix::identity(n);
  QMatrix upper = QMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      lower(r, c) = small_entry(rng, complex_only);
      upper(c, r) = small_entry(rng, complex_only);
    }
  return lower * upper;
}

QMatrix random_monomial(Rng& rng, std::size_t n, bool complex_only) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1))]);
  QMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) out(r, perm[r]) = random_unit(rng, complex_only);
  return out;
}

namespace {

struct Coefficients {
  QMatrix a, b;
};

// A = [[K, *], [0, *]] and B = [[*, *], [0, K_B]] with K_B = K (sylvester) or
// K^-1 (stein); X = [[0, I_k], [0, 0]] then solves the homogeneous equation.
// A monomial change of variables hides the block structure.
Coefficients coupled_hat(Rng& rng, const GenerateOptions& o) {
  const bool cx = o.complex_coefficients;
  const std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(std::min(o.m, o.n))));
  QMatrix a = random_qmatrix(rng, o.m, o.m, o.magnitude, cx);
  QMatrix b = random_qmatrix(rng, o.n, o.n, o.magnitude, cx);
  for (std::size_t r = k; r < o.m; ++r)
    for (std::size_t c = 0; c < k; ++c) a(r, c) = Quaternion();
  for (std::size_t r = o.n - k; r < o.n; ++r)
    for (std::size_t c = 0; c < o.n - k; ++c) b(r, c) = Quaternion();

  QMatrix kb;
  if (o.kind == EquationKind::sylvester_hat) {
    kb = a.block(0, 0, k, k);
  } else {
    // K = D U with D a diagonal of units and U unit upper triangular, so K^-1 stays small.
    QMatrix d(k, k);
    for (std::size_t i = 0; i < k; ++i) d(i, i) = random_unit(rng, cx);
    QMatrix u = QMatrix::identity(k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = r + 1; c < k; ++c) u(r, c) = small_entry(rng, cx);
    const QMatrix kk = d * u;
    a.set_block(0, 0, kk);
    kb = *quaternion_inverse(kk);
  }
  b.set_block(o.n - k, o.n - k, kb);

  const Automorphism aut(o.epsilon);
  const QMatrix p = random_monomial(rng, o.m, cx);
  const QMatrix q = random_monomial(rng, o.n, cx);
  // Same substitution as change_of_variables, which keeps the kernel dimension.
  const QMatrix p_inv = *quaternion_inverse(p);
  const QMatrix q_inv = *quaternion_inverse(q);
  if (o.kind == EquationKind::sylvester_hat)
    return {hat_matrix(p_inv, aut) * a * p, hat_matrix(q, aut) * b * q_inv};
  return {p_inv * a * hat_matrix(p, aut), hat_matrix(q, aut) * b * q_inv};
}

// A with a zero row, B with a zero column: e_r^T (AX - YB) e_c = 0 for all X, Y.
Coefficients coupled_two_sided(Rng& rng, const GenerateOptions& o) {
  const bool cx = o.complex_coefficients;
  QMatrix a = random_qmatrix(rng, o.m, o.m, o.magnitude, cx);
  QMatrix b = random_qmatrix(rng, o.n, o.n, o.magnitude, cx);
  const auto zr = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(o.m) - 1));
  const auto zc = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(o.n) - 1));
  for (std::size_t c = 0; c < o.m; ++c) a(zr, c) = Quaternion();
  for (std::size_t r = 0; r < o.n; ++r) b(r, zc) = Quaternion();
  return {std::move(a), std::move(b)};
}

}  // namespace

InstanceFile generate_instance(const GenerateOptions& o) {
  if (o.m < 1 || o.m > kMaxGeneratedDim || o.n < 1 || o.n > kMaxGeneratedDim)
    throw std::invalid_argument("m and n must lie in [1, " + std::to_string(kMaxGeneratedDim) + "]");
  if (o.magnitude < 1) throw std::invalid_argument("magnitude must be at least 1");
  const Automorphism aut(o.epsilon);
  const bool cx = o.complex_coefficients;

  Rng rng(o.seed);
  Coefficients coeffs;
  if (rng.coin()) {
    coeffs = o.kind == EquationKind::two_sided ? coupled_two_sided(rng, o) : coupled_hat(rng, o);
  } else {
    coeffs.a = random_qmatrix(rng, o.m, o.m, o.magnitude, cx);
    coeffs.b = random_qmatrix(rng, o.n, o.n, o.magnitude, cx);
  }

  if (o.mode == GenerateMode::arbitrary) {
    QMatrix c = random_qmatrix(rng, o.m, o.n, o.magnitude);
    return {kSchemaVersion, EquationInstance(o.kind, coeffs.a, coeffs.b, std::move(c), aut),
            std::nullopt, std::nullopt};
  }

  QMatrix x0 = random_qmatrix(rng, o.m, o.n, o.magnitude);
  std::optional<QMatrix> y0;
  if (o.kind == EquationKind::two_sided) y0 = random_qmatrix(rng, o.m, o.n, o.magnitude);
  EquationInstance inst(o.kind, coeffs.a, coeffs.b, QMatrix(o.m, o.n), aut);
  inst.c = apply_lhs(inst, x0, y0);
  return {kSchemaVersion, std::move(inst), std::move(x0), std::move(y0)};
}

}  // namespace qroth
