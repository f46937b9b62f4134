#pragma once
// Shared fixtures and brute-force reference computations for the test suites.
// Everything here is deliberately naive and built on Eigen or plain loops,
// never on the library routine it checks.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "dynemb/matrix.hpp"
#include "dynemb/rng.hpp"
#include "dynemb/tempograph.hpp"
#include "dynemb/transform.hpp"

namespace testing {

using Dense = Eigen::MatrixXd;

inline Dense to_dense(const dynemb::Matrix& m) {
  Dense d(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d(r, c) = m(r, c);
  return d;
}

inline dynemb::Matrix from_dense(const Dense& d) {
  dynemb::Matrix m(d.rows(), d.cols());
  for (Eigen::Index r = 0; r < d.rows(); ++r)
    for (Eigen::Index c = 0; c < d.cols(); ++c) m(r, c) = d(r, c);
  return m;
}

inline dynemb::Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                    double sd = 1.0) {
  std::normal_distribution<double> n(0.0, sd);
  dynemb::Matrix m(rows, cols);
  for (double& v : m.values()) v = n(rng);
  return m;
}

// Erdos-Renyi snapshot; no self-loops.
inline dynemb::Snapshot random_snapshot(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<dynemb::Edge> e;
  for (dynemb::Vertex u = 0; u < n; ++u)
    for (dynemb::Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v, 1});
  return dynemb::Snapshot(n, e);
}

inline dynemb::Snapshot from_pairs(std::size_t n,
                                   std::initializer_list<std::pair<dynemb::Vertex, dynemb::Vertex>> p) {
  std::vector<dynemb::Edge> e;
  for (auto [u, v] : p) e.push_back({u, v, 1});
  return dynemb::Snapshot(n, e);
}

inline dynemb::TemporalGraph graph_of(std::vector<dynemb::Snapshot> snaps) {
  const std::size_t n = snaps.front().vertex_count();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return dynemb::TemporalGraph(std::move(labels), std::move(snaps));
}

// Dense 0/1 adjacency rebuilt from the edge list.
inline Dense adjacency(const dynemb::Snapshot& s) {
  Dense a = Dense::Zero(s.vertex_count(), s.vertex_count());
  for (const auto& e : s.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
  return a;
}

// Fixed point of the neighbor-averaging update, solved directly:
//   (alpha + 1) phi(v) - mean_{u ~ v} phi(u) = alpha prior(v)   for deg(v) > 0
//   phi(v) = prior(v)                                            otherwise
inline Dense retrofit_solution(const dynemb::Matrix& prior, const dynemb::Snapshot& s,
                               double alpha) {
  const Dense a = adjacency(s);
  const Eigen::Index n = a.rows();
  Dense m = Dense::Zero(n, n);
  Dense rhs = to_dense(prior);
  for (Eigen::Index v = 0; v < n; ++v) {
    const double deg = a.row(v).sum();
    if (deg == 0.0) {
      m(v, v) = 1.0;
      continue;
    }
    m.row(v) = -a.row(v) / deg;
    m(v, v) = alpha + 1.0;
    rhs.row(v) *= alpha;
  }
  return m.fullPivLu().solve(rhs);
}

// argmin_W ||X W - Z||_F via the normal equations.
inline Dense least_squares(const dynemb::Matrix& x, const dynemb::Matrix& z) {
  const Dense xd = to_dense(x), zd = to_dense(z);
  return (xd.transpose() * xd).ldlt().solve(xd.transpose() * zd);
}

// Smoothing weights written out term by term for t = 1..m (m = T - 1).
inline std::vector<double> smoothing_weights_direct(dynemb::SmoothingSpec::Kind kind,
                                                    std::size_t m, double theta) {
  std::vector<double> w;
  for (std::size_t t = 1; t <= m; ++t) {
    const double td = static_cast<double>(t), md = static_cast<double>(m);
    switch (kind) {
      case dynemb::SmoothingSpec::Kind::Avg: w.push_back(1.0 / md); break;
      case dynemb::SmoothingSpec::Kind::Linear: w.push_back(td / md); break;
      case dynemb::SmoothingSpec::Kind::Exp: w.push_back(std::exp(td / md)); break;
      case dynemb::SmoothingSpec::Kind::Wct: {
        double p = 1.0;
        for (std::size_t k = t; k < m; ++k) p *= 1.0 - theta;
        w.push_back(p);
        break;
      }
    }
  }
  return w;
}

// Fraction of positive-negative pairs ordered correctly, ties worth one half.
inline double auc_pairs(const std::vector<double>& s, const std::vector<int>& y) {
  double good = 0.0, total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (y[i] != 1) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (y[j] != 0) continue;
      total += 1.0;
      if (s[i] > s[j]) good += 1.0;
      else if (s[i] == s[j]) good += 0.5;
    }
  }
  return good / total;
}

// Walks the precision-recall curve one distinct threshold at a time and sums
// precision times the recall increment.
inline double ap_curve(const std::vector<double>& s, const std::vector<int>& y) {
  std::set<double, std::greater<>> thresholds(s.begin(), s.end());
  const double npos = static_cast<double>(std::count(y.begin(), y.end(), 1));
  double prev_recall = 0.0, area = 0.0;
  for (double th : thresholds) {
    double tp = 0.0, fp = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= th) (y[i] == 1 ? tp : fp) += 1.0;
    }
    const double recall = tp / npos;
    area += (recall - prev_recall) * (tp / (tp + fp));
    prev_recall = recall;
  }
  return area;
}

inline double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace testing
