#include "awgcn/matrix.hpp"

#include <cmath>

#include "awgcn/error.hpp"

namespace awgcn {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorCode::ShapeMismatch, what);
}

}  // namespace

Matrix::Matrix(size_t rows, size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::ShapeMismatch, "matrix data length " + std::to_string(data_.size()) +
                                              " != " + std::to_string(rows_) + "x" +
                                              std::to_string(cols_));
  }
}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

void Matrix::check_finite(const std::string& context) const {
  for (double v : data_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument, context + ": non-finite matrix entry");
    }
  }
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matmul " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                    "x" + std::to_string(b.cols()));
  Matrix c(a.rows(), b.cols());
  const size_t n = a.rows(), k = a.cols(), m = b.cols();
  for (size_t i = 0; i < n; ++i) {
    const double* arow = a.row_ptr(i);
    double* crow = c.row_ptr(i);
    for (size_t p = 0; p < k; ++p) {
      const double av = arow[p];
      if (av == 0.0) continue;  // one-hot rows make this branch pay for itself
      const double* brow = b.row_ptr(p);
      for (size_t j = 0; j < m; ++j) crow[j] += av * brow[j];
    }
  }
  return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "matmul_tn row mismatch");
  Matrix c(a.cols(), b.cols());
  const size_t n = a.rows(), k = a.cols(), m = b.cols();
  for (size_t p = 0; p < n; ++p) {
    const double* arow = a.row_ptr(p);
    const double* brow = b.row_ptr(p);
    for (size_t i = 0; i < k; ++i) {
      const double av = arow[i];
      if (av == 0.0) continue;
      double* crow = c.row_ptr(i);
      for (size_t j = 0; j < m; ++j) crow[j] += av * brow[j];
    }
  }
  return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), "matmul_nt col mismatch");
  Matrix c(a.rows(), b.rows());
  const size_t n = a.rows(), k = a.cols(), m = b.rows();
  for (size_t i = 0; i < n; ++i) {
    const double* arow = a.row_ptr(i);
    double* crow = c.row_ptr(i);
    for (size_t j = 0; j < m; ++j) {
      const double* brow = b.row_ptr(j);
      double acc = 0.0;
      for (size_t p = 0; p < k; ++p) acc += arow[p] * brow[p];
      crow[j] = acc;
    }
  }
  return c;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  require(a.same_shape(b), "hadamard shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] * b.data()[i];
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

void add_inplace(Matrix& a, const Matrix& b) {
  require(a.same_shape(b), "add shape mismatch");
  for (size_t i = 0; i < a.size(); ++i) a.data()[i] += b.data()[i];
}

void scale_inplace(Matrix& a, double s) {
  for (double& v : a.data()) v *= s;
}

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
  require(a.cols() == x.size(), "matvec shape mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (size_t i = 0; i < a.rows(); ++i) {
    const double* arow = a.row_ptr(i);
    double acc = 0.0;
    for (size_t j = 0; j < a.cols(); ++j) acc += arow[j] * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<double> matvec_t(const Matrix& a, const std::vector<double>& x) {
  require(a.rows() == x.size(), "matvec_t shape mismatch");
  std::vector<double> y(a.cols(), 0.0);
  for (size_t i = 0; i < a.rows(); ++i) {
    const double* arow = a.row_ptr(i);
    const double xv = x[i];
    if (xv == 0.0) continue;
    for (size_t j = 0; j < a.cols(); ++j) y[j] += xv * arow[j];
  }
  return y;
}

}  // namespace awgcn
