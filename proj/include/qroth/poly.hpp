#pragma once

// Univariate polynomials with Gaussian-rational coefficients, lowest degree
// first. Trailing zero coefficients are always stripped, so the zero
// polynomial has no coefficients and degree -1.

#include "qroth/gaussian.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qroth {

class Poly {
public:
  Poly() = default;
  Poly(Gaussian c);  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Gaussian(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Gaussian> coeffs);

  /// The indeterminate.
  static Poly x() { return Poly(std::vector<Gaussian>{Gaussian(0), Gaussian(1)}); }
  /// c0 + c1 * x
  static Poly linear(const Gaussian& c0, const Gaussian& c1) {
    return Poly(std::vector<Gaussian>{c0, c1});
  }

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0] == Gaussian(1); }
  [[nodiscard]] const std::vector<Gaussian>& coefficients() const { return c_; }
  [[nodiscard]] Gaussian coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Gaussian(); }
  [[nodiscard]] const Gaussian& leading() const { return c_.back(); }

  [[nodiscard]] Poly monic() const;
  [[nodiscard]] Gaussian eval(const Gaussian& x) const;
  /// x^deg * p(1/x); drops roots at zero.
  [[nodiscard]] Poly reciprocal() const;
  /// Conjugates every coefficient.
  [[nodiscard]] Poly conj() const;
  [[nodiscard]] std::string str() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

private:
  void trim();
  std::vector<Gaussian> c_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws std::domain_error for a zero divisor.
PolyDivision divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace qroth
