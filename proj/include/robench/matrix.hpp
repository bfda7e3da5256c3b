#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace robench {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) noexcept {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const noexcept {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  template <class U>
  [[nodiscard]] Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      out.data()[i] = static_cast<U>(data_[i]);
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// out = m * v. Every output row is accumulated left to right over the
/// columns, so results do not depend on how rows are grouped.
template <class T>
void matvec(const Matrix<T>& m, std::span<const T> v, std::span<T> out) noexcept {
  assert(v.size() == m.cols() && out.size() == m.rows());
  const std::size_t n = m.cols();
  const std::size_t rows = m.rows();
  const T* base = m.data().data();
  const T* x = v.data();
  std::size_t r = 0;
  // Four rows at a time for instruction-level parallelism; each row keeps
  // its own sequential accumulator.
  for (; r + 4 <= rows; r += 4) {
    const T* p0 = base + r * n;
    const T* p1 = p0 + n;
    const T* p2 = p1 + n;
    const T* p3 = p2 + n;
    T a0{}, a1{}, a2{}, a3{};
    for (std::size_t j = 0; j < n; ++j) {
      const T xj = x[j];
      a0 += p0[j] * xj;
      a1 += p1[j] * xj;
      a2 += p2[j] * xj;
      a3 += p3[j] * xj;
    }
    out[r] = a0;
    out[r + 1] = a1;
    out[r + 2] = a2;
    out[r + 3] = a3;
  }
  for (; r < rows; ++r) {
    const T* p = base + r * n;
    T acc{};
    for (std::size_t j = 0; j < n; ++j) acc += p[j] * x[j];
    out[r] = acc;
  }
}

/// max_{ij} |(Q^T Q - I)_{ij}|.
double orthonormality_residual(const Matrix<double>& q);

}  // namespace robench
