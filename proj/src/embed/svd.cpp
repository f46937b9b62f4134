#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "dynemb/embed_static.hpp"
#include "dynemb/errors.hpp"
#include "dynemb/simd/kernels.hpp"

namespace dynemb {
namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Matrix to_matrix(const RowMat& m) {
  Matrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  std::copy(m.data(), m.data() + m.size(), out.values().begin());
  return out;
}

RowMat to_eigen(const Matrix& m) {
  RowMat out(m.rows(), m.cols());
  std::copy(m.values().begin(), m.values().end(), out.data());
  return out;
}

// Sparse symmetric product: row v of A*X is the (weighted) sum of X's rows
// over v's neighbors.
Matrix sparse_product(const Snapshot& s, bool weighted, const Matrix& x) {
  Matrix y(s.vertex_count(), x.cols());
  for (Vertex v = 0; v < s.vertex_count(); ++v) {
    const auto nb = s.neighbors(v);
    const auto cnt = s.neighbor_counts(v);
    auto out = y.row(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      simd::axpy(weighted ? static_cast<double>(cnt[i]) : 1.0, x.row(nb[i]), out);
    }
  }
  return y;
}

RowMat orthonormalize(const RowMat& y) {
  Eigen::HouseholderQR<RowMat> qr(y);
  return qr.householderQ() * RowMat::Identity(y.rows(), y.cols());
}

}  // namespace

LinearOperator adjacency_operator(const Snapshot& s, bool weighted) {
  LinearOperator op;
  op.rows = op.cols = s.vertex_count();
  op.apply = [&s, weighted](const Matrix& x) { return sparse_product(s, weighted, x); };
  op.apply_transpose = op.apply;
  return op;
}

LinearOperator centered_adjacency_operator(const Snapshot& s, bool weighted) {
  const std::size_t n = s.vertex_count();
  std::vector<double> mean(n, 0.0);
  for (const Edge& e : s.edges()) {
    const double w = weighted ? static_cast<double>(e.count) : 1.0;
    mean[e.u] += w;
    mean[e.v] += w;
  }
  for (double& m : mean) m /= static_cast<double>(n);

  LinearOperator op;
  op.rows = op.cols = n;
  // (A - 1 mu^T) X = A X - 1 (mu^T X)
  op.apply = [&s, weighted, mean](const Matrix& x) {
    Matrix y = sparse_product(s, weighted, x);
    std::vector<double> mx(x.cols(), 0.0);
    for (std::size_t r = 0; r < x.rows(); ++r) simd::axpy(mean[r], x.row(r), mx);
    for (std::size_t r = 0; r < y.rows(); ++r) simd::axpy(-1.0, mx, y.row(r));
    return y;
  };
  // (A - 1 mu^T)^T X = A X - mu (1^T X)
  op.apply_transpose = [&s, weighted, mean](const Matrix& x) {
    Matrix y = sparse_product(s, weighted, x);
    std::vector<double> colsum(x.cols(), 0.0);
    for (std::size_t r = 0; r < x.rows(); ++r) simd::axpy(1.0, x.row(r), colsum);
    for (std::size_t r = 0; r < y.rows(); ++r) simd::axpy(-mean[r], colsum, y.row(r));
    return y;
  };
  return op;
}

SvdResult randomized_svd(const LinearOperator& a, std::size_t rank, std::uint64_t seed,
                         const RandomizedSvdOptions& opts) {
  const std::size_t n_min = std::min(a.rows, a.cols);
  if (rank < 1 || rank > n_min) {
    throw ConfigError("svd: rank " + std::to_string(rank) + " outside [1, " +
                      std::to_string(n_min) + "]");
  }
  const std::size_t k = std::min(rank + opts.oversample, n_min);

  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix omega(a.cols, k);
  for (double& v : omega.values()) v = normal(rng);

  RowMat q = orthonormalize(to_eigen(a.apply(omega)));
  for (std::size_t it = 0; it < opts.power_iterations; ++it) {
    const RowMat z = orthonormalize(to_eigen(a.apply_transpose(to_matrix(q))));
    q = orthonormalize(to_eigen(a.apply(to_matrix(z))));
  }

  // B^T = A^T Q  (cols x k); SVD of B^T = V S Ub^T.
  const RowMat bt = to_eigen(a.apply_transpose(to_matrix(q)));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(bt, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::MatrixXd v_small = svd.matrixU();   // cols x k
  const Eigen::MatrixXd ub = svd.matrixV();        // k x k
  const Eigen::VectorXd sv = svd.singularValues();

  RowMat u = q * ub.leftCols(rank);
  RowMat v = v_small.leftCols(rank);
  for (std::size_t j = 0; j < rank; ++j) {
    Eigen::Index imax = 0;
    u.col(j).cwiseAbs().maxCoeff(&imax);
    if (u(imax, j) < 0) {
      u.col(j) *= -1.0;
      v.col(j) *= -1.0;
    }
  }

  SvdResult out;
  out.u = to_matrix(u);
  out.v = to_matrix(v);
  out.s.assign(sv.data(), sv.data() + rank);
  return out;
}

Matrix embed_tsvd(const Snapshot& s, std::size_t d, std::uint64_t seed, bool weighted) {
  const std::size_t n = s.vertex_count();
  if (d < 1 || d > n) {
    throw ConfigError("tsvd: dim " + std::to_string(d) + " must lie in [1, |V|=" +
                      std::to_string(n) + "]");
  }
  if (s.empty()) return Matrix(n, d);
  const auto svd = randomized_svd(adjacency_operator(s, weighted), d, seed);
  Matrix emb = svd.u;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < d; ++j) emb(r, j) *= std::sqrt(svd.s[j]);
  return emb;
}

PcaResult pca(const Snapshot& s, std::size_t d, std::uint64_t seed, bool weighted) {
  const std::size_t n = s.vertex_count();
  if (d < 1 || d > n) {
    throw ConfigError("pca: dim " + std::to_string(d) + " must lie in [1, |V|=" +
                      std::to_string(n) + "]");
  }
  PcaResult out;
  if (s.empty()) {
    out.scores = Matrix(n, d);
    out.explained_variance.assign(d, 0.0);
    return out;
  }
  const auto svd = randomized_svd(centered_adjacency_operator(s, weighted), d, seed);
  out.scores = svd.u;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < d; ++j) out.scores(r, j) *= svd.s[j];
  const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
  for (double sv : svd.s) out.explained_variance.push_back(sv * sv / denom);
  return out;
}

Matrix embed_pca(const Snapshot& s, std::size_t d, std::uint64_t seed, bool weighted) {
  return pca(s, d, seed, weighted).scores;
}

}  // namespace dynemb
