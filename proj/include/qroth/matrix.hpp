#pragma once

// Dense row-major matrix over an arbitrary (possibly noncommutative) ring.
// Products keep the left/right order of factors, so Matrix<Quaternion>
// multiplies correctly.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qroth {

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

template <typename T>
class Matrix {
public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      throw DimensionError("matrix data size " + std::to_string(data_.size()) +
                           " does not match " + std::to_string(rows_) + "x" +
                           std::to_string(cols_));
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] const std::vector<T>& data() const { return data_; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Copy of rows [r0, r0+nr) x cols [c0, c0+nc).
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Matrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
    if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_)
      throw DimensionError("set_block out of range");
    for (std::size_t r = 0; r < src.rows_; ++r)
      for (std::size_t c = 0; c < src.cols_; ++c) (*this)(r0 + r, c0 + c) = src(r, c);
  }

  template <typename F>
  [[nodiscard]] auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(f(x));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a) {
    return a.map([](const T& x) { return -x; });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(r, k);
        if (x.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
      }
    return out;
  }

  /// Left scalar action s*M.
  friend Matrix operator*(const T& s, const Matrix& m) {
    return m.map([&s](const T& x) { return s * x; });
  }
  /// Right scalar action M*s.
  friend Matrix operator*(const Matrix& m, const T& s) {
    return m.map([&s](const T& x) { return x * s; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  [[nodiscard]] std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

private:
  void check_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError(std::string("shape mismatch in '") + op + "': " + shape() + " vs " +
                           o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// [[tl, tr], [bl, br]]
template <typename T>
Matrix<T> block_matrix(const Matrix<T>& tl, const Matrix<T>& tr, const Matrix<T>& bl,
                       const Matrix<T>& br) {
  if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() ||
      tr.cols() != br.cols())
    throw DimensionError("incompatible block shapes " + tl.shape() + ", " + tr.shape() + ", " +
                         bl.shape() + ", " + br.shape());
  Matrix<T> out(tl.rows() + bl.rows(), tl.cols() + tr.cols());
  out.set_block(0, 0, tl);
  out.set_block(0, tl.cols(), tr);
  out.set_block(tl.rows(), 0, bl);
  out.set_block(tl.rows(), tl.cols(), br);
  return out;
}

template <typename T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  return block_matrix(a, Matrix<T>(a.rows(), b.cols()), Matrix<T>(b.rows(), a.cols()), b);
}

}  // namespace qroth
