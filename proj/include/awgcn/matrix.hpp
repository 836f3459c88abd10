#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace awgcn {

// Dense row-major matrix of 64-bit floats. Everything in this project is
// vocabulary-scale (a few hundred rows at most), so a flat vector with fixed
// accumulation order beats any clever backend: results are bit-reproducible
// on every machine and the gradient checks stay honest.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(size_t rows, size_t cols, std::vector<double> data);

  static Matrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  double at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  double* row_ptr(size_t r) { return data_.data() + r * cols_; }
  const double* row_ptr(size_t r) const { return data_.data() + r * cols_; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  void fill(double v) { data_.assign(data_.size(), v); }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  // Throws Error(ShapeMismatch/InvalidArgument) if any entry is NaN or Inf.
  void check_finite(const std::string& context) const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

// c = a * b with row-major (i, k, j) accumulation order.
Matrix matmul(const Matrix& a, const Matrix& b);

// c = a^T * b.
Matrix matmul_tn(const Matrix& a, const Matrix& b);

// c = a * b^T.
Matrix matmul_nt(const Matrix& a, const Matrix& b);

// Entrywise product; shapes must match.
Matrix hadamard(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

// a += b, shapes must match.
void add_inplace(Matrix& a, const Matrix& b);
void scale_inplace(Matrix& a, double s);

// y = a * x for a column vector x.
std::vector<double> matvec(const Matrix& a, const std::vector<double>& x);

// y = a^T * x.
std::vector<double> matvec_t(const Matrix& a, const std::vector<double>& x);

}  // namespace awgcn
