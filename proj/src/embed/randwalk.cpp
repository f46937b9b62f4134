#include <algorithm>
#include <cmath>
#include <numeric>

#include "dynemb/embed_static.hpp"
#include "dynemb/errors.hpp"

namespace dynemb {

void SkipgramConfig::validate() const {
  if (negative_samples < 1) throw ConfigError("negative_samples must be >= 1");
  if (window < 1) throw ConfigError("window must be >= 1");
  if (!(p > 0)) throw ConfigError("p must be > 0");
  if (!(q > 0)) throw ConfigError("q must be > 0");
  if (walks_per_node < 1) throw ConfigError("walks_per_node must be >= 1");
  if (walk_length < 2) throw ConfigError("walk_length must be >= 2");
  if (epochs < 1) throw ConfigError("epochs must be >= 1");
  if (!(learning_rate > 0)) throw ConfigError("learning_rate must be > 0");
}

BiasedWalker::BiasedWalker(const Snapshot& s, double p, double q, bool weighted)
    : snap_(&s), inv_p_(1.0 / p), inv_q_(1.0 / q), weighted_(weighted) {}

Vertex BiasedWalker::step(Vertex prev, Vertex cur, Rng& rng) const {
  const auto nb = snap_->neighbors(cur);
  const auto cnt = snap_->neighbor_counts(cur);
  if (nb.empty()) return cur;

  const bool first = prev == cur;
  if (first && !weighted_) {
    std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
    return nb[pick(rng)];
  }
  double total = 0.0;
  thread_local std::vector<double> cum;
  cum.resize(nb.size());
  for (std::size_t i = 0; i < nb.size(); ++i) {
    double w = weighted_ ? static_cast<double>(cnt[i]) : 1.0;
    if (!first) {
      if (nb[i] == prev) {
        w *= inv_p_;
      } else if (!snap_->has_edge(prev, nb[i])) {
        w *= inv_q_;
      }
    }
    total += w;
    cum[i] = total;
  }
  const double r = uniform01(rng) * total;
  const auto it = std::upper_bound(cum.begin(), cum.end(), r);
  return nb[std::min<std::size_t>(static_cast<std::size_t>(it - cum.begin()), nb.size() - 1)];
}

std::vector<Vertex> BiasedWalker::walk(Vertex start, std::size_t length, Rng& rng) const {
  std::vector<Vertex> w;
  w.reserve(length);
  w.push_back(start);
  if (snap_->degree(start) == 0) return w;
  Vertex prev = start;
  Vertex cur = start;
  while (w.size() < length) {
    const Vertex next = step(prev, cur, rng);
    prev = cur;
    cur = next;
    w.push_back(cur);
  }
  return w;
}

Matrix embed_randwalk(const Snapshot& s, std::size_t d, const SkipgramConfig& cfg) {
  cfg.validate();
  if (d < 1) throw ConfigError("dim must be >= 1");
  if (s.empty()) throw StructuralError("random-walk embedding needs at least one edge");
  const std::size_t n = s.vertex_count();

  Rng rng(cfg.seed);
  const BiasedWalker walker(s, cfg.p, cfg.q, cfg.weighted);

  std::vector<Vertex> starts;
  for (Vertex v = 0; v < n; ++v)
    if (s.degree(v) > 0) starts.push_back(v);

  std::vector<std::vector<Vertex>> walks;
  walks.reserve(starts.size() * cfg.walks_per_node);
  for (std::size_t r = 0; r < cfg.walks_per_node; ++r) {
    std::shuffle(starts.begin(), starts.end(), rng);
    for (Vertex v : starts) walks.push_back(walker.walk(v, cfg.walk_length, rng));
  }

  Matrix in(n, d), out(n, d);
  std::uniform_real_distribution<double> init(-0.5 / static_cast<double>(d),
                                              0.5 / static_cast<double>(d));
  for (double& v : in.values()) v = init(rng);

  NoiseSampler noise(s);
  std::vector<double> scratch(d);
  std::vector<double*> negs;
  negs.reserve(cfg.negative_samples);

  std::uint64_t total_tokens = 0;
  for (const auto& w : walks) total_tokens += w.size();
  total_tokens *= cfg.epochs;
  std::uint64_t seen = 0;
  const auto window = static_cast<std::ptrdiff_t>(cfg.window);

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (const auto& w : walks) {
      const auto len = static_cast<std::ptrdiff_t>(w.size());
      for (std::ptrdiff_t i = 0; i < len; ++i, ++seen) {
        const double lr = cfg.learning_rate *
                          std::max(1e-4, 1.0 - static_cast<double>(seen) /
                                                   static_cast<double>(total_tokens));
        const Vertex center = w[static_cast<std::size_t>(i)];
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - window);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(len - 1, i + window);
        for (std::ptrdiff_t j = lo; j <= hi; ++j) {
          if (j == i) continue;
          const Vertex ctx = w[static_cast<std::size_t>(j)];
          negs.clear();
          for (std::size_t k = 0; k < cfg.negative_samples; ++k) {
            const Vertex neg = noise(rng);
            if (neg == ctx) continue;
            negs.push_back(out.row(neg).data());
          }
          sgns_step(in.row(center), out.row(ctx), negs, lr, scratch);
        }
      }
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (s.degree(v) == 0) std::fill(in.row(v).begin(), in.row(v).end(), 0.0);
  }
  return in;
}

}  // namespace dynemb
