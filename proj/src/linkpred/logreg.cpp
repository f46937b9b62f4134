#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "dynemb/errors.hpp"
#include "dynemb/linkpred.hpp"
#include "dynemb/simd/kernels.hpp"

namespace dynemb {
namespace {

void check(const Matrix& x, std::span<const int> y) {
  if (x.rows() != y.size()) throw ShapeError("logreg: feature rows and labels differ in length");
}

// log(1 + e^z) without overflow.
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

std::vector<double> margins(const Matrix& x, const LogRegModel& m) {
  if (x.cols() != m.weights.size()) throw ShapeError("logreg: feature dim mismatch");
  std::vector<double> z(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) z[i] = simd::dot(x.row(i), m.weights) + m.bias;
  return z;
}

// Largest eigenvalue of [X 1]^T [X 1] / n.
double feature_curvature(const Matrix& x) {
  const auto n = static_cast<Eigen::Index>(x.rows());
  const auto d = static_cast<Eigen::Index>(x.cols());
  Eigen::MatrixXd aug(n, d + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) aug(i, j) = x(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    aug(i, d) = 1.0;
  }
  const Eigen::MatrixXd gram = aug.transpose() * aug / static_cast<double>(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

}  // namespace

double logreg_loss(const Matrix& x, std::span<const int> y, const LogRegModel& m) {
  check(x, y);
  const auto z = margins(x, m);
  double loss = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) loss += softplus(z[i]) - (y[i] == 1 ? z[i] : 0.0);
  loss /= static_cast<double>(z.size());
  return loss + 0.5 * m.l2 * simd::dot(m.weights, m.weights);
}

std::vector<double> logreg_gradient(const Matrix& x, std::span<const int> y,
                                    const LogRegModel& m) {
  check(x, y);
  const auto z = margins(x, m);
  const std::size_t d = x.cols();
  std::vector<double> g(d + 1, 0.0);
  std::span<double> gw(g.data(), d);
  const double inv_n = 1.0 / static_cast<double>(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const double r = (sigmoid(z[i]) - (y[i] == 1 ? 1.0 : 0.0)) * inv_n;
    simd::axpy(r, x.row(i), gw);
    g[d] += r;
  }
  simd::axpy(m.l2, m.weights, gw);
  return g;
}

LogRegModel logreg_fit(const Matrix& x, std::span<const int> y, const LogRegConfig& cfg,
                       std::vector<double>* loss_history) {
  check(x, y);
  if (!(cfg.l2 >= 0)) throw ConfigError("l2 must be >= 0");
  const bool has_pos = std::find(y.begin(), y.end(), 1) != y.end();
  const bool has_neg = std::find(y.begin(), y.end(), 0) != y.end();
  if (!has_pos || !has_neg) throw std::invalid_argument("logreg: both classes are required");

  LogRegModel m;
  m.weights.assign(x.cols(), 0.0);
  m.l2 = cfg.l2;

  double step = cfg.learning_rate;
  if (step <= 0) step = 1.0 / (0.25 * feature_curvature(x) + cfg.l2);

  const std::size_t d = x.cols();
  for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
    if (loss_history) loss_history->push_back(logreg_loss(x, y, m));
    const auto g = logreg_gradient(x, y, m);
    double gmax = 0.0;
    for (double v : g) gmax = std::max(gmax, std::abs(v));
    if (gmax < cfg.tolerance) break;
    simd::axpy(-step, std::span<const double>(g.data(), d), m.weights);
    m.bias -= step * g[d];
  }
  return m;
}

std::vector<double> logreg_score(const LogRegModel& m, const Matrix& x) {
  auto z = margins(x, m);
  for (double& v : z) v = sigmoid(v);
  return z;
}

}  // namespace dynemb
