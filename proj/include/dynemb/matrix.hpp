#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace dynemb {

// Row-major dense matrix of doubles. Rows are contiguous so each one can be
// handed to the SIMD kernels as a span.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<double> values() noexcept { return data_; }
  std::span<const double> values() const noexcept { return data_; }

  bool same_shape(const Matrix& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }
  bool all_finite() const noexcept;

  Matrix transposed() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(double s, Matrix a);

// C = A * B
Matrix matmul(const Matrix& a, const Matrix& b);
// C = A^T * B
Matrix transpose_matmul(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);
double squared_frobenius(const Matrix& a);
// Largest eigenvalue of a symmetric matrix.
double max_eigenvalue(const Matrix& symmetric);
double max_abs_diff(const Matrix& a, const Matrix& b);

// Vertical concatenation; all blocks must share the column count.
Matrix vstack(std::span<const Matrix> blocks);

// Embedding file: "rows dim" header, then one row per line.
void write_embedding(std::ostream& os, const Matrix& m);
Matrix read_embedding(std::istream& is);
void save_embedding(const std::string& path, const Matrix& m);
Matrix load_embedding(const std::string& path);

// Transform file: "dim" header, then dim lines of dim reals.
void write_transform(std::ostream& os, const Matrix& w);
Matrix read_transform(std::istream& is);
void save_transform(const std::string& path, const Matrix& w);
Matrix load_transform(const std::string& path);

// Shortest decimal text that parses back to exactly the same double.
std::string format_real(double v);

}  // namespace dynemb
