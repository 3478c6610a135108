#include "qroth/quaternion.hpp"

#include <cctype>
#include <stdexcept>

namespace qroth {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

  mpq_class v;
  v.get_num() = mpz_class(std::string(num), 10);
  v.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (v.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Gaussian Gaussian::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero Gaussian rational");
  Rational n = norm();
  return {re / n, -im / n};
}

std::string Gaussian::str() const {
  if (im.is_zero()) return re.str();
  if (re.is_zero()) return im.str() + "i";
  return re.str() + (im.sign() > 0 ? "+" : "") + im.str() + "i";
}

Quaternion& Quaternion::operator*=(const Quaternion& o) {
  Rational na = a * o.a - b * o.b - c * o.c - d * o.d;
  Rational nb = a * o.b + b * o.a + c * o.d - d * o.c;
  Rational nc = a * o.c - b * o.d + c * o.a + d * o.b;
  Rational nd = a * o.d + b * o.c - c * o.b + d * o.a;
  a = std::move(na);
  b = std::move(nb);
  c = std::move(nc);
  d = std::move(nd);
  return *this;
}

Quaternion Quaternion::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero quaternion");
  Rational n = norm();
  return {a / n, -b / n, -c / n, -d / n};
}

std::string Quaternion::str() const {
  std::string out;
  auto term = [&out](const Rational& r, const char* unit) {
    if (r.is_zero()) return;
    if (!out.empty() && r.sign() > 0) out += "+";
    out += r.str();
    out += unit;
  };
  term(a, "");
  term(b, "i");
  term(c, "j");
  term(d, "k");
  return out.empty() ? "0" : out;
}

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

Mat2 embed_scalar(const Quaternion& q) {
  return {{{Gaussian(q.a, q.b), Gaussian(q.c, q.d)},
           {Gaussian(-q.c, q.d), Gaussian(q.a, -q.b)}}};
}

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out[r][c] = x[r][0] * y[0][c] + x[r][1] * y[1][c];
  return out;
}

}  // namespace qroth
