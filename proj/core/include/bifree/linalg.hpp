#pragma once

#include <cstddef>
#include <vector>

#include "bifree/error.hpp"
#include "bifree/scalar.hpp"

namespace bifree {

template <Scalar S>
using Vector = std::vector<S>;

/// Row-major dense matrix.
template <Scalar S>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), S{0}) {}

  static DenseMatrix identity(int n) {
    DenseMatrix out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = S{1};
    return out;
  }
  static DenseMatrix diagonal(const Vector<S>& values) {
    DenseMatrix out(static_cast<int>(values.size()), static_cast<int>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) out(static_cast<int>(i), static_cast<int>(i)) = values[i];
    return out;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const S& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  S& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<S> data_;
};

template <Scalar S>
DenseMatrix<S> operator*(const DenseMatrix<S>& x, const DenseMatrix<S>& y);
template <Scalar S>
Vector<S> operator*(const DenseMatrix<S>& x, const Vector<S>& v);
template <Scalar S>
DenseMatrix<S> operator+(const DenseMatrix<S>& x, const DenseMatrix<S>& y);
template <Scalar S>
DenseMatrix<S> operator-(const DenseMatrix<S>& x, const DenseMatrix<S>& y);
template <Scalar S>
DenseMatrix<S> scale(const DenseMatrix<S>& x, const S& factor);
template <Scalar S>
DenseMatrix<S> transpose(const DenseMatrix<S>& x);

template <Scalar S>
S dot(const Vector<S>& x, const Vector<S>& y);
template <Scalar S>
Vector<S> scale(const Vector<S>& x, const S& factor);
template <Scalar S>
Vector<S> operator-(const Vector<S>& x, const Vector<S>& y);

/// Largest absolute entry.
template <Scalar S>
S max_abs(const DenseMatrix<S>& x);
template <Scalar S>
S max_abs(const Vector<S>& x);

/// Gauss-Jordan inverse with partial pivoting. Throws SingularityError.
template <Scalar S>
DenseMatrix<S> inverse(const DenseMatrix<S>& x);

template <Scalar To, Scalar From>
DenseMatrix<To> convert(const DenseMatrix<From>& x) {
  DenseMatrix<To> out(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out(i, j) = scalar_cast<To>(x(i, j));
  return out;
}

template <Scalar To, Scalar From>
Vector<To> convert(const Vector<From>& x) {
  Vector<To> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(scalar_cast<To>(v));
  return out;
}

/// Eigenpairs of a real symmetric matrix; values ascending, vectors[k] is the k-th unit eigenvector.
struct SymmetricEigen {
  std::vector<double> values;
  std::vector<Vector<double>> vectors;
};

SymmetricEigen eigen_symmetric(const DenseMatrix<double>& x);

/// Operator 2-norm of a symmetric matrix (largest absolute eigenvalue).
double spectral_radius_symmetric(const DenseMatrix<double>& x);

}  // namespace bifree
