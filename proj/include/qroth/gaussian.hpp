#pragma once

#include "qroth/rational.hpp"

#include <string>

namespace qroth {

/// Element re + im*i of the Gaussian rationals Q(i).
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(long r) : re(r) {}                 // NOLINT(google-explicit-constructor)
  Gaussian(int r) : re(r) {}                  // NOLINT(google-explicit-constructor)
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian unit() { return {Rational(0), Rational(1)}; }

  [[nodiscard]] bool is_zero() const { return re.is_zero() && im.is_zero(); }
  [[nodiscard]] bool is_real() const { return im.is_zero(); }
  [[nodiscard]] Gaussian conj() const { return {re, -im}; }
  /// |z|^2
  [[nodiscard]] Rational norm() const { return re * re + im * im; }
  /// Throws std::domain_error on zero.
  [[nodiscard]] Gaussian inverse() const;
  [[nodiscard]] std::string str() const;

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) = default;
};

inline Gaussian conj(const Gaussian& z) { return z.conj(); }
inline Rational conj(const Rational& r) { return r; }

}  // namespace qroth
