#include <algorithm>
#include <cmath>

#include "dynemb/embed_static.hpp"
#include "dynemb/errors.hpp"

namespace dynemb {

void LineConfig::validate() const {
  if (negative_samples < 1) throw ConfigError("negative_samples must be >= 1");
  if (!(learning_rate > 0)) throw ConfigError("learning_rate must be > 0");
}

Matrix embed_line(const Snapshot& s, std::size_t d, const LineConfig& cfg) {
  cfg.validate();
  if (d < 1) throw ConfigError("dim must be >= 1");
  if (s.empty()) throw StructuralError("LINE embedding needs at least one edge");
  const std::size_t n = s.vertex_count();
  const auto edges = s.edges();

  Rng rng(cfg.seed);
  Matrix vertex(n, d);
  std::uniform_real_distribution<double> init(-0.5 / static_cast<double>(d),
                                              0.5 / static_cast<double>(d));
  for (double& v : vertex.values()) v = init(rng);

  const bool second = cfg.order == LineConfig::Order::Second;
  Matrix context(second ? n : 0, d);
  Matrix& target = second ? context : vertex;

  std::discrete_distribution<std::size_t> weighted_edge;
  if (cfg.weighted) {
    std::vector<double> w;
    w.reserve(edges.size());
    for (const Edge& e : edges) w.push_back(static_cast<double>(e.count));
    weighted_edge = std::discrete_distribution<std::size_t>(w.begin(), w.end());
  }
  std::uniform_int_distribution<std::size_t> uniform_edge(0, edges.size() - 1);
  std::bernoulli_distribution flip(0.5);
  NoiseSampler noise(s);

  const std::uint64_t total =
      cfg.samples ? cfg.samples
                  : std::max<std::uint64_t>(200000, 400 * static_cast<std::uint64_t>(edges.size()));
  std::vector<double> scratch(d);
  std::vector<double*> negs;
  negs.reserve(cfg.negative_samples);

  for (std::uint64_t it = 0; it < total; ++it) {
    const double lr = cfg.learning_rate *
                      std::max(1e-4, 1.0 - static_cast<double>(it) / static_cast<double>(total));
    const Edge& e = edges[cfg.weighted ? weighted_edge(rng) : uniform_edge(rng)];
    Vertex u = e.u, v = e.v;
    if (flip(rng)) std::swap(u, v);
    negs.clear();
    for (std::size_t k = 0; k < cfg.negative_samples; ++k) {
      const Vertex neg = noise(rng);
      if (neg == v || neg == u) continue;
      negs.push_back(target.row(neg).data());
    }
    sgns_step(vertex.row(u), target.row(v), negs, lr, scratch);
  }

  for (Vertex x = 0; x < n; ++x) {
    if (s.degree(x) == 0) std::fill(vertex.row(x).begin(), vertex.row(x).end(), 0.0);
  }
  return vertex;
}

Matrix embed_random(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(n, d);
  for (double& v : m.values()) v = normal(rng);
  return m;
}

}  // namespace dynemb
