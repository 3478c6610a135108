#include "qroth/smith.hpp"

#include <algorithm>
#include <tuple>

namespace qroth {

namespace {

class SmithReducer {
public:
  explicit SmithReducer(PolyMatrix m) : m_(std::move(m)) {}

  SmithForm run() {
    SmithForm out;
    const std::size_t steps = std::min(m_.rows(), m_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!move_min_to(t)) break;
      while (true) {
        normalize_pivot(t);
        if (!clear_cross(t)) {
          move_min_to(t);
          continue;
        }
        if (fix_divisibility(t)) continue;
        break;
      }
      out.invariant_factors.push_back(m_(t, t));
    }
    out.rank = out.invariant_factors.size();
    return out;
  }

private:
  // Moves a pivot into (t, t): minimal degree first, then the Markowitz
  // count (row nonzeros - 1) * (column nonzeros - 1), then coefficient size.
  // Returns false when the trailing submatrix is zero.
  bool move_min_to(std::size_t t) {
    std::vector<std::size_t> row_nnz(m_.rows(), 0), col_nnz(m_.cols(), 0);
    for (std::size_t r = t; r < m_.rows(); ++r)
      for (std::size_t c = t; c < m_.cols(); ++c)
        if (!m_(r, c).is_zero()) {
          ++row_nnz[r];
          ++col_nnz[c];
        }
    bool found = false;
    std::tuple<int, std::size_t, std::size_t> best;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = t; r < m_.rows(); ++r)
      for (std::size_t c = t; c < m_.cols(); ++c) {
        const Poly& p = m_(r, c);
        if (p.is_zero()) continue;
        const int deg = p.degree();
        if (found && deg > std::get<0>(best)) continue;
        const std::size_t fill = (row_nnz[r] - 1) * (col_nnz[c] - 1);
        if (found && deg == std::get<0>(best) && fill > std::get<1>(best)) continue;
        const auto key = std::make_tuple(deg, fill, coefficient_size(p));
        if (!found || key < best) {
          found = true;
          best = key;
          br = r;
          bc = c;
        }
      }
    if (!found) return false;
    if (br != t)
      for (std::size_t c = 0; c < m_.cols(); ++c) std::swap(m_(br, c), m_(t, c));
    if (bc != t)
      for (std::size_t r = 0; r < m_.rows(); ++r) std::swap(m_(r, bc), m_(r, t));
    return true;
  }

  static std::size_t coefficient_size(const Poly& p) {
    std::size_t bits = 0;
    auto add = [&bits](const Rational& q) {
      bits += mpz_sizeinbase(q.raw().get_num_mpz_t(), 2) + mpz_sizeinbase(q.raw().get_den_mpz_t(), 2);
    };
    for (const Gaussian& g : p.coefficients()) {
      add(g.re);
      add(g.im);
    }
    return bits;
  }

  void normalize_pivot(std::size_t t) {
    const Gaussian lead = m_(t, t).leading();
    if (lead == Gaussian(1)) return;
    const Poly scale(lead.inverse());
    for (std::size_t c = t; c < m_.cols(); ++c)
      if (!m_(t, c).is_zero()) m_(t, c) = m_(t, c) * scale;
  }

  // Reduces row t and column t modulo the pivot. Returns true when both are
  // zero apart from the pivot.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    const Poly pivot = m_(t, t);
    for (std::size_t r = t + 1; r < m_.rows(); ++r) {
      if (m_(r, t).is_zero()) continue;
      auto [q, rem] = divmod(m_(r, t), pivot);
      if (!q.is_zero())
        for (std::size_t c = t; c < m_.cols(); ++c)
          if (!m_(t, c).is_zero()) m_(r, c) -= q * m_(t, c);
      if (!rem.is_zero()) clean = false;
    }
    for (std::size_t c = t + 1; c < m_.cols(); ++c) {
      if (m_(t, c).is_zero()) continue;
      auto [q, rem] = divmod(m_(t, c), pivot);
      if (!q.is_zero())
        for (std::size_t r = t; r < m_.rows(); ++r)
          if (!m_(r, t).is_zero()) m_(r, c) -= m_(r, t) * q;
      if (!rem.is_zero()) clean = false;
    }
    return clean;
  }

  // If some trailing entry is not a multiple of the pivot, adds its row to
  // row t and returns true.
  bool fix_divisibility(std::size_t t) {
    const Poly& pivot = m_(t, t);
    if (pivot.degree() == 0) return false;
    for (std::size_t r = t + 1; r < m_.rows(); ++r)
      for (std::size_t c = t + 1; c < m_.cols(); ++c) {
        if (m_(r, c).is_zero()) continue;
        if (divmod(m_(r, c), pivot).remainder.is_zero()) continue;
        for (std::size_t k = t; k < m_.cols(); ++k) m_(t, k) += m_(r, k);
        return true;
      }
    return false;
  }

  PolyMatrix m_;
};

}  // namespace

SmithForm smith_normal_form(PolyMatrix m) { return SmithReducer(std::move(m)).run(); }

PolyMatrix characteristic_matrix(const CMatrix& a) {
  if (!a.is_square()) throw DimensionError("characteristic matrix of non-square " + a.shape());
  PolyMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out(r, c) = Poly::linear(-a(r, c), Gaussian(r == c ? 1 : 0));
  return out;
}

Poly characteristic_polynomial(const CMatrix& a) {
  if (!a.is_square()) throw DimensionError("characteristic polynomial of non-square " + a.shape());
  const std::size_t n = a.rows();
  std::vector<Gaussian> coeffs(n + 1);
  coeffs[n] = Gaussian(1);
  CMatrix acc(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = a * acc;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += coeffs[n - k + 1];
    const CMatrix prod = a * acc;
    Gaussian trace;
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    coeffs[n - k] = -trace / Gaussian(static_cast<long>(k));
  }
  return Poly(std::move(coeffs));
}

bool similar_over_C(const CMatrix& a, const CMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError("similarity needs square matrices of equal size, got " + a.shape() +
                         " and " + b.shape());
  return smith_normal_form(characteristic_matrix(a)) ==
         smith_normal_form(characteristic_matrix(b));
}

Pencil::Pencil(CMatrix l, CMatrix m) : lead(std::move(l)), constant(std::move(m)) {
  if (lead.rows() != constant.rows() || lead.cols() != constant.cols())
    throw DimensionError("pencil coefficients have shapes " + lead.shape() + " and " +
                         constant.shape());
}

PolyMatrix Pencil::matrix() const {
  PolyMatrix out(lead.rows(), lead.cols());
  for (std::size_t r = 0; r < lead.rows(); ++r)
    for (std::size_t c = 0; c < lead.cols(); ++c)
      out(r, c) = Poly::linear(constant(r, c), lead(r, c));
  return out;
}

PolyMatrix Pencil::reversed() const {
  PolyMatrix out(lead.rows(), lead.cols());
  for (std::size_t r = 0; r < lead.rows(); ++r)
    for (std::size_t c = 0; c < lead.cols(); ++c)
      out(r, c) = Poly::linear(lead(r, c), constant(r, c));
  return out;
}

bool is_regular(const Pencil& p) {
  return p.lead.is_square() && smith_normal_form(p.matrix()).rank == p.size();
}

PencilVerdict strictly_equivalent_pencils(const Pencil& p, const Pencil& q) {
  if (p.lead.rows() != q.lead.rows() || p.lead.cols() != q.lead.cols())
    throw DimensionError("pencils have different shapes " + p.lead.shape() + " and " +
                         q.lead.shape());
  if (!p.lead.is_square()) return PencilVerdict::non_regular;
  const SmithForm pf = smith_normal_form(p.matrix());
  const SmithForm qf = smith_normal_form(q.matrix());
  if (pf.rank < p.size() || qf.rank < q.size()) return PencilVerdict::non_regular;
  if (!(pf == qf)) return PencilVerdict::inequivalent;
  return smith_normal_form(p.reversed()) == smith_normal_form(q.reversed())
             ? PencilVerdict::equivalent
             : PencilVerdict::inequivalent;
}

}  // namespace qroth
