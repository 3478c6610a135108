#pragma once

// Quaternions a + bi + cj + dk over the rationals, with i^2 = j^2 = k^2 = -1
// and ij = k. Every quaternion is also written h = u + v*j with
// u = a + bi and v = c + di complex.

#include "qroth/gaussian.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace qroth {

struct Quaternion {
  Rational a, b, c, d;

  Quaternion() = default;
  Quaternion(Rational real) : a(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  Quaternion(long real) : a(real) {}                 // NOLINT(google-explicit-constructor)
  Quaternion(int real) : a(real) {}                  // NOLINT(google-explicit-constructor)
  Quaternion(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
  Quaternion(const Gaussian& z) : a(z.re), b(z.im) {}  // NOLINT(google-explicit-constructor)

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  /// h = u + v*j
  static Quaternion from_split(const Gaussian& u, const Gaussian& v) {
    return {u.re, u.im, v.re, v.im};
  }
  [[nodiscard]] Gaussian u() const { return {a, b}; }
  [[nodiscard]] Gaussian v() const { return {c, d}; }

  [[nodiscard]] bool is_zero() const {
    return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero();
  }
  /// True when c = d = 0, i.e. the value lies in the complex subfield.
  [[nodiscard]] bool is_complex() const { return c.is_zero() && d.is_zero(); }
  [[nodiscard]] Quaternion conj() const { return {a, -b, -c, -d}; }
  [[nodiscard]] Rational norm() const { return a * a + b * b + c * c + d * d; }
  [[nodiscard]] Quaternion inverse() const;
  [[nodiscard]] std::string str() const;

  Quaternion& operator+=(const Quaternion& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    d += o.d;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    a -= o.a;
    b -= o.b;
    c -= o.c;
    d -= o.d;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o);

  friend Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
  friend Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
  friend Quaternion operator*(Quaternion p, const Quaternion& q) { return p *= q; }
  friend Quaternion operator-(const Quaternion& p) { return {-p.a, -p.b, -p.c, -p.d}; }
  friend bool operator==(const Quaternion& p, const Quaternion& q) = default;
};

/// Hamilton product.
Quaternion quat_mul(const Quaternion& p, const Quaternion& q);

/// Involutive automorphism a+bi+cj+dk -> a+bi+eps(cj+dk). eps = +1 is the
/// identity; eps = -1 is conjugation by i.
class Automorphism {
public:
  explicit Automorphism(int epsilon) : eps_(epsilon) {
    if (epsilon != 1 && epsilon != -1)
      throw std::invalid_argument("automorphism epsilon must be +1 or -1, got " +
                                  std::to_string(epsilon));
  }
  static Automorphism identity() { return Automorphism(1); }

  [[nodiscard]] int epsilon() const { return eps_; }
  [[nodiscard]] Quaternion apply(const Quaternion& q) const {
    if (eps_ == 1) return q;
    return {q.a, q.b, -q.c, -q.d};
  }
  Quaternion operator()(const Quaternion& q) const { return apply(q); }

  friend bool operator==(Automorphism, Automorphism) = default;

private:
  int eps_;
};

inline Quaternion apply_hat(const Quaternion& q, Automorphism aut) { return aut.apply(q); }

using Mat2 = std::array<std::array<Gaussian, 2>, 2>;

/// a+bi+cj+dk -> [[a+bi, c+di], [-c+di, a-bi]], an injective ring
/// homomorphism into 2x2 complex matrices.
Mat2 embed_scalar(const Quaternion& q);

Mat2 mat2_mul(const Mat2& x, const Mat2& y);

}  // namespace qroth
