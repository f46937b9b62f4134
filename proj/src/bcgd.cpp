#include "dynemb/bcgd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dynemb/errors.hpp"
#include "dynemb/rng.hpp"
#include "dynemb/simd/kernels.hpp"

namespace dynemb {

void BcgdConfig::validate() const {
  if (!(lambda >= 0) || !std::isfinite(lambda)) throw ConfigError("lambda must be >= 0");
  if (d < 1) throw ConfigError("bcgd: d must be >= 1");
  if (iterations < 1) throw ConfigError("bcgd: iterations must be >= 1");
  if (!(learning_rate > 0)) throw ConfigError("bcgd: learning_rate must be > 0");
}

namespace {

double edge_weight(const Edge& e, bool weighted) {
  return weighted ? static_cast<double>(e.count) : 1.0;
}

// ||A - P P^T||_F^2 = ||A||^2 - 2 tr(P^T A P) + ||P^T P||^2, without forming
// the dense n x n product.
double proximity_term(const Snapshot& s, const Matrix& phi, bool weighted) {
  double a_sq = 0.0;
  double cross = 0.0;
  for (const Edge& e : s.edges()) {
    const double w = edge_weight(e, weighted);
    a_sq += 2.0 * w * w;
    cross += 2.0 * w * simd::dot(phi.row(e.u), phi.row(e.v));
  }
  const Matrix gram = transpose_matmul(phi, phi);
  return a_sq - 2.0 * cross + squared_frobenius(gram);
}

// Max weighted degree bounds the spectral norm of the adjacency matrix.
double adjacency_norm_bound(const Snapshot& s, bool weighted) {
  std::vector<double> row(s.vertex_count(), 0.0);
  for (const Edge& e : s.edges()) {
    const double w = edge_weight(e, weighted);
    row[e.u] += w;
    row[e.v] += w;
  }
  return row.empty() ? 0.0 : *std::max_element(row.begin(), row.end());
}

double row_dot_sum(const Matrix& a, const Matrix& b) { return simd::dot(a.values(), b.values()); }

void check_inputs(std::span<const Snapshot> snapshots, std::span<const Matrix> phis) {
  if (snapshots.empty()) throw ShapeError("bcgd: no snapshots");
  if (phis.size() != snapshots.size()) {
    throw ShapeError("bcgd: expected " + std::to_string(snapshots.size()) +
                     " factor matrices, got " + std::to_string(phis.size()));
  }
  for (std::size_t t = 0; t < phis.size(); ++t) {
    if (phis[t].rows() != snapshots[t].vertex_count() || !phis[t].same_shape(phis.front())) {
      throw ShapeError("bcgd: factor matrix shape mismatch at snapshot " + std::to_string(t));
    }
  }
}

// Objective terms that depend on block t, up to constants.
double block_objective(std::span<const Snapshot> snapshots, std::span<const Matrix> phis,
                       std::size_t t, const Matrix& phi_t, double lambda, bool weighted) {
  double f = proximity_term(snapshots[t], phi_t, weighted);
  if (t > 0) f -= lambda * row_dot_sum(phi_t, phis[t - 1]);
  if (t + 1 < phis.size()) f -= lambda * row_dot_sum(phi_t, phis[t + 1]);
  return f;
}

}  // namespace

double bcgd_objective(std::span<const Snapshot> snapshots, std::span<const Matrix> phis,
                      double lambda, bool weighted) {
  check_inputs(snapshots, phis);
  for (const auto& p : phis) {
    for (double v : p.values()) {
      if (v < 0) throw std::domain_error("bcgd: factor matrices must be non-negative");
    }
  }
  double total = 0.0;
  for (std::size_t t = 0; t < phis.size(); ++t) {
    total += proximity_term(snapshots[t], phis[t], weighted);
    if (t > 0) {
      total += lambda * (static_cast<double>(phis[t].rows()) - row_dot_sum(phis[t], phis[t - 1]));
    }
  }
  return total;
}

Matrix bcgd_block_gradient(std::span<const Snapshot> snapshots, std::span<const Matrix> phis,
                           std::size_t t, double lambda, bool weighted) {
  check_inputs(snapshots, phis);
  const Matrix& phi = phis[t];
  // -4 A phi + 4 phi (phi^T phi)
  Matrix grad = matmul(phi, transpose_matmul(phi, phi));
  grad *= 4.0;
  for (const Edge& e : snapshots[t].edges()) {
    const double w = -4.0 * edge_weight(e, weighted);
    simd::axpy(w, phi.row(e.v), grad.row(e.u));
    simd::axpy(w, phi.row(e.u), grad.row(e.v));
  }
  if (t > 0) simd::axpy(-lambda, phis[t - 1].values(), grad.values());
  if (t + 1 < phis.size()) simd::axpy(-lambda, phis[t + 1].values(), grad.values());
  return grad;
}

std::vector<Matrix> bcgd_initialize(std::size_t vertices, std::size_t snapshots,
                                    const BcgdConfig& cfg) {
  Rng rng(cfg.seed);
  std::uniform_real_distribution<double> init(0.0, 1.0 / std::sqrt(static_cast<double>(cfg.d)));
  std::vector<Matrix> phis;
  for (std::size_t t = 0; t < snapshots; ++t) {
    Matrix p(vertices, cfg.d);
    for (double& v : p.values()) v = init(rng);
    phis.push_back(std::move(p));
  }
  return phis;
}

std::vector<Matrix> fit_bcgd(std::span<const Snapshot> snapshots, const BcgdConfig& cfg,
                             const BcgdObserver& observer) {
  cfg.validate();
  if (snapshots.empty()) throw ShapeError("bcgd: no snapshots");
  const std::size_t n = snapshots.front().vertex_count();
  if (n > cfg.dense_guard) {
    throw StructuralError("bcgd: " + std::to_string(n) + " vertices exceed the dense guard of " +
                          std::to_string(cfg.dense_guard));
  }

  std::vector<Matrix> phis = bcgd_initialize(n, snapshots.size(), cfg);
  std::vector<double> adjacency_norms;
  for (const auto& s : snapshots) adjacency_norms.push_back(adjacency_norm_bound(s, cfg.weighted));

  for (std::size_t pass = 0; pass < cfg.iterations; ++pass) {
    for (std::size_t t = 0; t < phis.size(); ++t) {
      const Matrix grad = bcgd_block_gradient(snapshots, phis, t, cfg.lambda, cfg.weighted);
      const double f0 =
          block_objective(snapshots, phis, t, phis[t], cfg.lambda, cfg.weighted);
      double step = cfg.learning_rate;
      if (cfg.cap_step) {
        const double curvature = 4.0 * adjacency_norms[t] +
                                 12.0 * max_eigenvalue(transpose_matmul(phis[t], phis[t]));
        if (curvature > 0) step = std::min(step, 1.0 / curvature);
      }
      for (std::size_t attempt = 0; attempt <= cfg.max_backtracks; ++attempt) {
        Matrix cand = phis[t];
        simd::axpy(-step, grad.values(), cand.values());
        for (double& v : cand.values()) v = std::max(0.0, v);
        if (cfg.max_backtracks == 0 ||
            block_objective(snapshots, phis, t, cand, cfg.lambda, cfg.weighted) <= f0) {
          phis[t] = std::move(cand);
          break;
        }
        step *= 0.5;
      }
    }
    if (observer) observer(pass, phis);
  }
  return phis;
}

std::vector<Matrix> fit_bcgd(const TemporalGraph& g, const BcgdConfig& cfg,
                             const BcgdObserver& observer) {
  return fit_bcgd(g.snapshots(), cfg, observer);
}

}  // namespace dynemb
