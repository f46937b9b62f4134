#include "dynemb/retrofit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dynemb/errors.hpp"
#include "dynemb/simd/kernels.hpp"

namespace dynemb {

void RetrofitConfig::validate() const {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw ConfigError("alpha must be > 0");
  if (max_sweeps < 1) throw ConfigError("max_sweeps must be >= 1");
  if (!(tolerance >= 0)) throw ConfigError("tolerance must be >= 0");
}

namespace {

void check_shapes(const Matrix& phi, const Matrix& prior, const Snapshot& s) {
  if (!phi.same_shape(prior) || phi.rows() != s.vertex_count()) {
    throw ShapeError("retrofit: embeddings must both be |V| x d with |V|=" +
                     std::to_string(s.vertex_count()));
  }
}

// Sum of counts over v's neighbors, or the plain degree when unweighted.
double beta_denominator(const Snapshot& s, Vertex v, bool weighted) {
  if (!weighted) return static_cast<double>(s.degree(v));
  double total = 0.0;
  for (auto c : s.neighbor_counts(v)) total += c;
  return total;
}

}  // namespace

double retrofit_objective(const Matrix& phi, const Matrix& prior, const Snapshot& s,
                          const RetrofitConfig& cfg) {
  cfg.validate();
  check_shapes(phi, prior, s);
  double smooth = 0.0;
  double proximity = 0.0;
  for (Vertex v = 0; v < s.vertex_count(); ++v) {
    smooth += simd::squared_distance(phi.row(v), prior.row(v));
    const auto nb = s.neighbors(v);
    if (nb.empty()) continue;
    const auto cnt = s.neighbor_counts(v);
    const double denom = beta_denominator(s, v, cfg.weighted);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const double beta = (cfg.weighted ? cnt[i] : 1.0) / denom;
      proximity += beta * simd::squared_distance(phi.row(nb[i]), phi.row(v));
    }
  }
  return cfg.alpha * smooth + proximity;
}

Matrix retrofit_sweep(const Matrix& phi, const Matrix& prior, const Snapshot& s,
                      const RetrofitConfig& cfg) {
  cfg.validate();
  check_shapes(phi, prior, s);
  Matrix next(phi.rows(), phi.cols());
  for (Vertex v = 0; v < s.vertex_count(); ++v) {
    auto out = next.row(v);
    const auto nb = s.neighbors(v);
    std::copy(prior.row(v).begin(), prior.row(v).end(), out.begin());
    if (nb.empty()) continue;
    const auto cnt = s.neighbor_counts(v);
    const double denom = beta_denominator(s, v, cfg.weighted);
    // beta sums to one over the neighbors.
    simd::scale(cfg.alpha, out);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      simd::axpy((cfg.weighted ? cnt[i] : 1.0) / denom, phi.row(nb[i]), out);
    }
    simd::scale(1.0 / (cfg.alpha + 1.0), out);
  }
  return next;
}

RetrofitResult retrofit_detailed(const Matrix& prior, const Snapshot& s,
                                 const RetrofitConfig& cfg) {
  cfg.validate();
  check_shapes(prior, prior, s);
  RetrofitResult res{prior, 0, 0.0};
  for (std::size_t k = 0; k < cfg.max_sweeps; ++k) {
    Matrix next = retrofit_sweep(res.phi, prior, s, cfg);
    res.last_change = max_abs_diff(next, res.phi);
    res.phi = std::move(next);
    res.sweeps = k + 1;
    if (res.last_change < cfg.tolerance) break;
  }
  return res;
}

Matrix retrofit(const Matrix& prior, const Snapshot& s, const RetrofitConfig& cfg) {
  return retrofit_detailed(prior, s, cfg).phi;
}

std::vector<Matrix> retrofit_sequence(const Matrix& phi_first,
                                      std::span<const Snapshot> snapshots,
                                      const RetrofitConfig& cfg) {
  std::vector<Matrix> out;
  out.reserve(snapshots.size());
  const Matrix* prev = &phi_first;
  for (const auto& s : snapshots) {
    out.push_back(retrofit(*prev, s, cfg));
    prev = &out.back();
  }
  return out;
}

}  // namespace dynemb
