#include "qroth/poly.hpp"

#include <stdexcept>

namespace qroth {

Poly::Poly(Gaussian c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Gaussian> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero() || leading() == Gaussian(1)) return *this;
  const Gaussian inv = leading().inverse();
  Poly out = *this;
  for (auto& c : out.c_) c *= inv;
  return out;
}

Gaussian Poly::eval(const Gaussian& x) const {
  Gaussian acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::reciprocal() const {
  return Poly(std::vector<Gaussian>(c_.rbegin(), c_.rend()));
}

Poly Poly::conj() const {
  Poly out = *this;
  for (auto& c : out.c_) c = c.conj();
  return out;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string coeff = c_[k].str();
    const bool compound = !c_[k].is_real() && !c_[k].re.is_zero();
    if (k == 0) {
      out += coeff;
      continue;
    }
    if (!(c_[k] == Gaussian(1))) out += compound ? "(" + coeff + ")" : coeff;
    out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator-(const Poly& a) {
  Poly out = a;
  for (auto& c : out.c_) c = -c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Gaussian> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Gaussian> rem = a.coefficients();
  const int db = b.degree();
  std::vector<Gaussian> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Gaussian inv_lead = b.leading().inverse();
  const auto& bc = b.coefficients();
  for (int k = a.degree(); k >= db; --k) {
    const Gaussian q = rem[k] * inv_lead;
    if (q.is_zero()) continue;
    quot[k - db] = q;
    for (int t = 0; t <= db; ++t) rem[k - db + t] -= q * bc[t];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace qroth
