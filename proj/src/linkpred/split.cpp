#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "dynemb/errors.hpp"
#include "dynemb/linkpred.hpp"
#include "dynemb/rng.hpp"
#include "dynemb/simd/kernels.hpp"

namespace dynemb {

void EvalConfig::validate() const {
  for (double f : {train_frac, test_frac, validation_frac}) {
    if (!(f >= 0.0 && f <= 1.0)) throw ConfigError("split fractions must lie in [0,1]");
  }
  if (std::abs(train_frac + test_frac + validation_frac - 1.0) > 1e-9) {
    throw ConfigError("split fractions must sum to 1");
  }
  if (repeats < 1) throw ConfigError("repeats must be >= 1");
  if (ndcg_p < 1) throw ConfigError("ndcg_p must be >= 1");
  if (!(l2 >= 0)) throw ConfigError("l2 must be >= 0");
}

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

EvalSplit make_split(const TemporalGraph& g, std::size_t target, const EvalConfig& cfg,
                     std::uint64_t repeat_seed) {
  cfg.validate();
  if (target >= g.snapshot_count()) throw std::out_of_range("make_split: target snapshot index");
  const Snapshot& snap = g.snapshot(target);
  if (snap.empty()) throw StructuralError("make_split: target snapshot has no edges");

  Rng rng(repeat_seed);
  std::vector<Edge> pos(snap.edges().begin(), snap.edges().end());
  std::shuffle(pos.begin(), pos.end(), rng);
  const std::size_t n = pos.size();
  const auto n_train = static_cast<std::size_t>(std::floor(cfg.train_frac * static_cast<double>(n)));
  const auto n_test = static_cast<std::size_t>(std::floor(cfg.test_frac * static_cast<double>(n)));

  std::unordered_set<std::uint64_t> forbidden;
  forbidden.reserve(n * 2);
  for (const Edge& e : snap.edges()) forbidden.insert(pair_key(e.u, e.v));
  if (cfg.exclude_historical_negatives) {
    for (std::size_t t = 0; t < target; ++t)
      for (const Edge& e : g.snapshot(t).edges()) forbidden.insert(pair_key(e.u, e.v));
  }

  const std::uint64_t nv = g.vertex_count();
  const std::uint64_t all_pairs = nv * (nv - 1) / 2;
  const std::uint64_t available = all_pairs - forbidden.size();
  if (available < n) {
    throw StructuralError("make_split: need " + std::to_string(n) + " negative pairs but only " +
                          std::to_string(available) + " non-edges exist");
  }

  std::vector<std::pair<Vertex, Vertex>> neg;
  neg.reserve(n);
  if (available >= 2 * n) {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(n * 2);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(nv - 1));
    while (neg.size() < n) {
      const Vertex a = pick(rng);
      const Vertex b = pick(rng);
      if (a == b) continue;
      const auto key = pair_key(a, b);
      if (forbidden.count(key) || !chosen.insert(key).second) continue;
      neg.emplace_back(std::min(a, b), std::max(a, b));
    }
  } else {
    // Dense target: enumerate the pool and take a uniform prefix.
    std::vector<std::pair<Vertex, Vertex>> pool;
    pool.reserve(available);
    for (Vertex u = 0; u < nv; ++u)
      for (Vertex v = u + 1; v < nv; ++v)
        if (!forbidden.count(pair_key(u, v))) pool.emplace_back(u, v);
    for (std::size_t i = 0; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> j(i, pool.size() - 1);
      std::swap(pool[i], pool[j(rng)]);
      neg.push_back(pool[i]);
    }
  }

  EvalSplit split;
  auto fill = [&](std::vector<LabeledPair>& out, std::size_t begin, std::size_t end) {
    out.reserve(2 * (end - begin));
    for (std::size_t i = begin; i < end; ++i) out.push_back({pos[i].u, pos[i].v, 1});
    for (std::size_t i = begin; i < end; ++i) out.push_back({neg[i].first, neg[i].second, 0});
  };
  fill(split.train, 0, n_train);
  fill(split.test, n_train, n_train + n_test);
  fill(split.validation, n_train + n_test, n);
  return split;
}

Matrix hadamard_features(const Matrix& phi, std::span<const LabeledPair> pairs) {
  Matrix f(pairs.size(), phi.cols());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].u >= phi.rows() || pairs[i].v >= phi.rows()) {
      throw std::out_of_range("hadamard_features: vertex index out of range");
    }
    simd::hadamard(phi.row(pairs[i].u), phi.row(pairs[i].v), f.row(i));
  }
  return f;
}

std::vector<int> labels_of(std::span<const LabeledPair> pairs) {
  std::vector<int> y;
  y.reserve(pairs.size());
  for (const auto& p : pairs) y.push_back(p.label);
  return y;
}

}  // namespace dynemb
