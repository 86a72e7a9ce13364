#include "bifree/linalg.hpp"

#include <algorithm>

#include <Eigen/Dense>

namespace bifree {

template <Scalar S>
DenseMatrix<S> operator*(const DenseMatrix<S>& x, const DenseMatrix<S>& y) {
  if (x.cols() != y.rows()) throw ShapeError("matrix product shape mismatch");
  DenseMatrix<S> out(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      if (is_zero(x(i, k))) continue;
      for (int j = 0; j < y.cols(); ++j) out(i, j) += x(i, k) * y(k, j);
    }
  return out;
}

template <Scalar S>
Vector<S> operator*(const DenseMatrix<S>& x, const Vector<S>& v) {
  if (static_cast<std::size_t>(x.cols()) != v.size()) throw ShapeError("matrix-vector shape mismatch");
  Vector<S> out(static_cast<std::size_t>(x.rows()), S{0});
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out[static_cast<std::size_t>(i)] += x(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

template <Scalar S>
DenseMatrix<S> operator+(const DenseMatrix<S>& x, const DenseMatrix<S>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw ShapeError("matrix sum shape mismatch");
  DenseMatrix<S> out(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) + y(i, j);
  return out;
}

template <Scalar S>
DenseMatrix<S> operator-(const DenseMatrix<S>& x, const DenseMatrix<S>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw ShapeError("matrix difference shape mismatch");
  DenseMatrix<S> out(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) - y(i, j);
  return out;
}

template <Scalar S>
DenseMatrix<S> scale(const DenseMatrix<S>& x, const S& factor) {
  DenseMatrix<S> out(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) * factor;
  return out;
}

template <Scalar S>
DenseMatrix<S> transpose(const DenseMatrix<S>& x) {
  DenseMatrix<S> out(x.cols(), x.rows());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out(j, i) = x(i, j);
  return out;
}

template <Scalar S>
S dot(const Vector<S>& x, const Vector<S>& y) {
  if (x.size() != y.size()) throw ShapeError("dot product of vectors of different length");
  S total{0};
  for (std::size_t i = 0; i < x.size(); ++i) total += x[i] * y[i];
  return total;
}

template <Scalar S>
Vector<S> scale(const Vector<S>& x, const S& factor) {
  Vector<S> out(x);
  for (auto& v : out) v *= factor;
  return out;
}

template <Scalar S>
Vector<S> operator-(const Vector<S>& x, const Vector<S>& y) {
  if (x.size() != y.size()) throw ShapeError("vector difference of different lengths");
  Vector<S> out(x);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= y[i];
  return out;
}

template <Scalar S>
S max_abs(const DenseMatrix<S>& x) {
  S best{0};
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) best = std::max(best, abs_value(x(i, j)));
  return best;
}

template <Scalar S>
S max_abs(const Vector<S>& x) {
  S best{0};
  for (const auto& v : x) best = std::max(best, abs_value(v));
  return best;
}

template <Scalar S>
DenseMatrix<S> inverse(const DenseMatrix<S>& x) {
  if (x.rows() != x.cols()) throw ShapeError("inverse of a non-square matrix");
  const int n = x.rows();
  DenseMatrix<S> a = x;
  DenseMatrix<S> out = DenseMatrix<S>::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (abs_value(a(r, col)) > abs_value(a(pivot, col))) pivot = r;
    if (is_zero(a(pivot, col))) throw SingularityError("matrix is singular");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(out(pivot, j), out(col, j));
      }
    const S p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      out(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      const S factor = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= factor * a(col, j);
        out(r, j) -= factor * out(col, j);
      }
    }
  }
  return out;
}

SymmetricEigen eigen_symmetric(const DenseMatrix<double>& x) {
  if (x.rows() != x.cols()) throw ShapeError("eigendecomposition of a non-square matrix");
  const int n = x.rows();
  SymmetricEigen out;
  if (n == 0) return out;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = 0.5 * (x(i, j) + x(j, i));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw SingularityError("symmetric eigensolver did not converge");
  for (int k = 0; k < n; ++k) {
    out.values.push_back(solver.eigenvalues()(k));
    Vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, k);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

double spectral_radius_symmetric(const DenseMatrix<double>& x) {
  const auto eig = eigen_symmetric(x);
  double best = 0.0;
  for (double v : eig.values) best = std::max(best, std::fabs(v));
  return best;
}

#define BIFREE_INSTANTIATE(S)                                                          \
  template DenseMatrix<S> operator*(const DenseMatrix<S>&, const DenseMatrix<S>&);     \
  template Vector<S> operator*(const DenseMatrix<S>&, const Vector<S>&);               \
  template DenseMatrix<S> operator+(const DenseMatrix<S>&, const DenseMatrix<S>&);     \
  template DenseMatrix<S> operator-(const DenseMatrix<S>&, const DenseMatrix<S>&);     \
  template DenseMatrix<S> scale(const DenseMatrix<S>&, const S&);                      \
  template DenseMatrix<S> transpose(const DenseMatrix<S>&);                            \
  template S dot(const Vector<S>&, const Vector<S>&);                                  \
  template Vector<S> scale(const Vector<S>&, const S&);                                \
  template Vector<S> operator-(const Vector<S>&, const Vector<S>&);                    \
  template S max_abs(const DenseMatrix<S>&);                                           \
  template S max_abs(const Vector<S>&);                                                \
  template DenseMatrix<S> inverse(const DenseMatrix<S>&);

BIFREE_INSTANTIATE(Rational)
BIFREE_INSTANTIATE(double)

#undef BIFREE_INSTANTIATE

}  // namespace bifree
