#pragma once

#include "qroth/suite.hpp"

#include <doctest.h>

namespace qroth::test {

inline Quaternion q(long a, long b = 0, long c = 0, long d = 0) {
  return Quaternion(Rational(a), Rational(b), Rational(c), Rational(d));
}

inline Gaussian z(long re, long im = 0) { return Gaussian{Rational(re), Rational(im)}; }

inline Rational r(long num, long den = 1) { return Rational(num, den); }

inline QMatrix scalar(const Quaternion& x) { return QMatrix{{x}}; }

/// Random nonsingular quaternion matrix with small entries.
inline QMatrix random_nonsingular(Rng& rng, std::size_t n, long magnitude = 3,
                                  bool complex_only = false) {
  while (true) {
    QMatrix m = random_qmatrix(rng, n, n, magnitude, complex_only);
    if (is_nonsingular(m)) return m;
  }
}

inline CMatrix random_cmatrix(Rng& rng, std::size_t rows, std::size_t cols, long magnitude = 5) {
  CMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      out(r, c) = Gaussian{random_rational(rng, magnitude), random_rational(rng, magnitude)};
  return out;
}

inline CMatrix random_nonsingular_c(Rng& rng, std::size_t n, long magnitude = 3) {
  while (true) {
    CMatrix m = random_cmatrix(rng, n, n, magnitude);
    if (inverse(m)) return m;
  }
}

}  // namespace qroth::test
