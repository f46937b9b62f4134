#include "dynemb/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "dynemb/errors.hpp"
#include "dynemb/simd/kernels.hpp"

namespace dynemb {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool Matrix::all_finite() const noexcept {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (!same_shape(o)) throw ShapeError("matrix add: shape mismatch");
  simd::axpy(1.0, o.data_, data_);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (!same_shape(o)) throw ShapeError("matrix subtract: shape mismatch");
  simd::axpy(-1.0, o.data_, data_);
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  simd::scale(s, data_);
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double s = a(i, k);
      if (s != 0.0) simd::axpy(s, b.row(k), out);
    }
  }
  return c;
}

Matrix transpose_matmul(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("transpose_matmul: row counts differ");
  Matrix c(a.cols(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto brow = b.row(r);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double s = a(r, j);
      if (s != 0.0) simd::axpy(s, brow, c.row(j));
    }
  }
  return c;
}

double squared_frobenius(const Matrix& a) { return simd::dot(a.values(), a.values()); }

double frobenius_norm(const Matrix& a) { return std::sqrt(squared_frobenius(a)); }

double max_eigenvalue(const Matrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw ShapeError("max_eigenvalue: matrix is not square");
  if (symmetric.rows() == 0) return 0.0;
  const auto d = static_cast<Eigen::Index>(symmetric.rows());
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      symmetric.values().data(), d, d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw ShapeError("max_abs_diff: shape mismatch");
  double m = 0.0;
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) m = std::max(m, std::abs(av[i] - bv[i]));
  return m;
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw ShapeError("vstack: column counts differ");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    std::copy(b.values().begin(), b.values().end(), out.values().begin() + r0 * cols);
    r0 += b.rows();
  }
  return out;
}

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

namespace {

void write_rows(std::ostream& os, const Matrix& m) {
  std::string line;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    line.clear();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) line.push_back(' ');
      line += format_real(m(r, c));
    }
    line.push_back('\n');
    os << line;
  }
}

double parse_real(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, "not a real number: '" + std::string(tok) + "'");
  }
  return v;
}

void read_rows(std::istream& is, Matrix& m, std::size_t first_line) {
  std::string line;
  std::size_t lineno = first_line;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ++lineno;
    if (!std::getline(is, line)) throw ParseError(lineno, "unexpected end of matrix data");
    std::istringstream ls(line);
    std::string tok;
    std::size_t c = 0;
    while (ls >> tok) {
      if (c >= m.cols()) throw ParseError(lineno, "too many values in row");
      m(r, c++) = parse_real(tok, lineno);
    }
    if (c != m.cols()) throw ParseError(lineno, "too few values in row");
  }
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

void write_embedding(std::ostream& os, const Matrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  write_rows(os, m);
}

Matrix read_embedding(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError(1, "missing embedding header");
  std::istringstream hs(header);
  long long rows = -1, dim = -1;
  if (!(hs >> rows >> dim) || rows < 0 || dim < 1) {
    throw ParseError(1, "embedding header must be 'num_rows dim'");
  }
  Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(dim));
  read_rows(is, m, 1);
  return m;
}

void save_embedding(const std::string& path, const Matrix& m) {
  auto out = open_out(path);
  write_embedding(out, m);
}

Matrix load_embedding(const std::string& path) {
  auto in = open_in(path);
  return read_embedding(in);
}

void write_transform(std::ostream& os, const Matrix& w) {
  if (w.rows() != w.cols()) throw ShapeError("transform matrix must be square");
  os << w.rows() << '\n';
  write_rows(os, w);
}

Matrix read_transform(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError(1, "missing transform header");
  std::istringstream hs(header);
  long long dim = -1;
  if (!(hs >> dim) || dim < 1) throw ParseError(1, "transform header must be 'dim'");
  Matrix w(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  read_rows(is, w, 1);
  return w;
}

void save_transform(const std::string& path, const Matrix& w) {
  auto out = open_out(path);
  write_transform(out, w);
}

Matrix load_transform(const std::string& path) {
  auto in = open_in(path);
  return read_transform(in);
}

}  // namespace dynemb
