#include "dynemb/transform.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "dynemb/errors.hpp"
#include "dynemb/simd/kernels.hpp"

namespace dynemb {

void GdConfig::validate() const {
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  if (!(learning_rate > 0)) throw ConfigError("learning_rate must be > 0");
  if (!(clip_ratio > 0)) throw ConfigError("clip_ratio must be > 0");
}

void SmoothingSpec::validate() const {
  if (!(theta >= 0.0 && theta < 1.0)) throw ConfigError("theta must lie in [0,1)");
}

std::string_view smoothing_name(SmoothingSpec::Kind k) {
  switch (k) {
    case SmoothingSpec::Kind::Avg: return "avg";
    case SmoothingSpec::Kind::Linear: return "linear";
    case SmoothingSpec::Kind::Exp: return "exp";
    case SmoothingSpec::Kind::Wct: return "wct";
  }
  return "unknown";
}

SmoothingSpec::Kind parse_smoothing(std::string_view name) {
  if (name == "avg") return SmoothingSpec::Kind::Avg;
  if (name == "linear") return SmoothingSpec::Kind::Linear;
  if (name == "exp") return SmoothingSpec::Kind::Exp;
  if (name == "wct") return SmoothingSpec::Kind::Wct;
  throw ConfigError("smoothing: unknown kind '" + std::string(name) + "'");
}

std::pair<Matrix, Matrix> stack_pairs(std::span<const Matrix> phis) {
  if (phis.size() < 2) throw ShapeError("stack_pairs: need at least 2 embeddings");
  for (const auto& p : phis)
    if (!p.same_shape(phis.front())) throw ShapeError("stack_pairs: embedding shapes differ");
  return {vstack(phis.first(phis.size() - 1)), vstack(phis.subspan(1))};
}

namespace {

void check_fit_shapes(const Matrix& x, const Matrix& z) {
  if (!x.same_shape(z)) throw ShapeError("transform: source and target shapes differ");
  if (x.cols() < 1) throw ShapeError("transform: embeddings need at least one column");
}

}  // namespace

double transform_objective(const Matrix& x, const Matrix& z, const Matrix& w) {
  check_fit_shapes(x, z);
  Matrix r = matmul(x, w);
  r -= z;
  return squared_frobenius(r);
}

Matrix transform_gradient(const Matrix& x, const Matrix& z, const Matrix& w) {
  check_fit_shapes(x, z);
  Matrix r = matmul(x, w);
  r -= z;
  Matrix g = transpose_matmul(x, r);
  g *= 2.0;
  return g;
}

double clip_by_global_norm(Matrix& g, double clip_ratio) {
  const double norm = frobenius_norm(g);
  if (norm > clip_ratio) g *= clip_ratio / norm;
  return norm;
}

FitResult fit_least_squares(const Matrix& x, const Matrix& z, const GdConfig& cfg) {
  cfg.validate();
  check_fit_shapes(x, z);
  const std::size_t d = x.cols();

  // Gradient 2 X^T (X W - Z) = 2 (G W - C) with G = X^T X, C = X^T Z, so each
  // iteration costs O(d^3) regardless of the row count.
  const Matrix gram = transpose_matmul(x, x);
  const Matrix cross = transpose_matmul(x, z);

  FitResult res;
  res.step = cfg.learning_rate;
  if (cfg.cap_step) {
    const double lipschitz = 2.0 * max_eigenvalue(gram);
    if (lipschitz > 0 && res.step > 1.0 / lipschitz) res.step = 1.0 / lipschitz;
  }
  res.w = Matrix::identity(d);

  Matrix grad(d, d);
  for (std::size_t it = 0; it < cfg.iterations; ++it) {
    Matrix gw = matmul(gram, res.w);
    // The trace form cancels badly near the optimum, so history uses the residual.
    if (cfg.record_history) res.objective.push_back(transform_objective(x, z, res.w));
    grad = std::move(gw);
    grad -= cross;
    grad *= 2.0;
    const double norm = clip_by_global_norm(grad, cfg.clip_ratio);
    res.iterations = it + 1;
    if (norm <= cfg.tolerance) break;
    simd::axpy(-res.step, grad.values(), res.w.values());
  }
  return res;
}

Matrix fit_homogeneous(std::span<const Matrix> phis, const GdConfig& cfg) {
  const auto [x, z] = stack_pairs(phis);
  return fit_least_squares(x, z, cfg).w;
}

Matrix fit_pairwise(const Matrix& phi_t, const Matrix& phi_next, const GdConfig& cfg) {
  return fit_least_squares(phi_t, phi_next, cfg).w;
}

std::vector<Matrix> fit_pairwise_all(std::span<const Matrix> phis, const GdConfig& cfg) {
  if (phis.size() < 2) throw ShapeError("fit_pairwise_all: need at least 2 embeddings");
  std::vector<Matrix> ws;
  ws.reserve(phis.size() - 1);
  for (std::size_t t = 0; t + 1 < phis.size(); ++t) {
    ws.push_back(fit_pairwise(phis[t], phis[t + 1], cfg));
  }
  return ws;
}

Matrix fit_heterogeneous(std::span<const Matrix> phis, const GdConfig& cfg,
                         const SmoothingSpec& smoothing) {
  const auto ws = fit_pairwise_all(phis, cfg);
  return combine(ws, smoothing);
}

std::vector<double> smoothing_weights(const SmoothingSpec& smoothing, std::size_t count) {
  smoothing.validate();
  if (count == 0) throw ShapeError("smoothing: no matrices to combine");
  std::vector<double> w(count);
  const double m = static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i + 1);
    switch (smoothing.kind) {
      case SmoothingSpec::Kind::Avg: w[i] = 1.0 / m; break;
      case SmoothingSpec::Kind::Linear: w[i] = t / m; break;
      case SmoothingSpec::Kind::Exp: w[i] = std::exp(t / m); break;
      case SmoothingSpec::Kind::Wct:
        w[i] = std::pow(1.0 - smoothing.theta, static_cast<double>(count - i - 1));
        break;
    }
  }
  if (smoothing.renormalize) {
    double total = 0.0;
    for (double v : w) total += v;
    for (double& v : w) v /= total;
  }
  return w;
}

Matrix combine(std::span<const Matrix> ws, const SmoothingSpec& smoothing) {
  if (ws.empty()) throw ShapeError("combine: empty list of transforms");
  const std::size_t d = ws.front().rows();
  for (const auto& w : ws) {
    if (w.rows() != d || w.cols() != d) throw ShapeError("combine: transform dims differ");
  }
  const auto weights = smoothing_weights(smoothing, ws.size());
  Matrix out(d, d);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    simd::axpy(weights[i], ws[i].values(), out.values());
  }
  return out;
}

Matrix project(const Matrix& phi, const Matrix& w) {
  if (phi.cols() != w.rows() || w.rows() != w.cols()) {
    throw ShapeError("project: embedding dim " + std::to_string(phi.cols()) +
                     " does not match transform dim " + std::to_string(w.rows()));
  }
  return matmul(phi, w);
}

}  // namespace dynemb
