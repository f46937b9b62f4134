#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dynemb/errors.hpp"
#include "dynemb/rng.hpp"
#include "dynemb/tempograph.hpp"

namespace dynemb {

SbmGraph synth_dynamic_sbm(const SbmParams& p) {
  if (!(p.p_out >= 0.0 && p.p_out < p.p_in && p.p_in <= 1.0)) {
    throw ConfigError("sbm: probabilities must satisfy 0 <= p_out < p_in <= 1");
  }
  if (!(p.churn >= 0.0 && p.churn <= 1.0)) throw ConfigError("sbm: churn must lie in [0,1]");
  if (p.nodes < 2) throw ConfigError("sbm: need at least 2 nodes");
  if (p.communities < 1 || p.communities > p.nodes) {
    throw ConfigError("sbm: communities must lie in [1, nodes]");
  }
  if (p.snapshots < 2) throw ConfigError("sbm: need at least 2 snapshots");

  Rng rng(p.seed);
  const std::size_t n = p.nodes;
  std::vector<std::uint32_t> member(n);
  for (std::size_t v = 0; v < n; ++v) member[v] = static_cast<std::uint32_t>(v % p.communities);
  std::shuffle(member.begin(), member.end(), rng);

  std::uniform_int_distribution<std::uint32_t> pick_comm(
      0, static_cast<std::uint32_t>(p.communities - 1));
  const auto movers = static_cast<std::size_t>(std::llround(p.churn * static_cast<double>(n)));

  std::vector<std::vector<std::uint32_t>> memberships;
  std::vector<Snapshot> snaps;
  std::vector<std::size_t> order(n);
  for (std::size_t t = 0; t < p.snapshots; ++t) {
    if (t > 0 && movers > 0) {
      std::iota(order.begin(), order.end(), 0);
      // Partial Fisher-Yates: the first `movers` slots are a uniform sample.
      for (std::size_t i = 0; i < movers; ++i) {
        std::uniform_int_distribution<std::size_t> j(i, n - 1);
        std::swap(order[i], order[j(rng)]);
        member[order[i]] = pick_comm(rng);
      }
    }
    memberships.push_back(member);

    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const double prob = member[u] == member[v] ? p.p_in : p.p_out;
        if (uniform01(rng) < prob) edges.push_back({u, v, 1});
      }
    }
    snaps.emplace_back(n, edges);
  }

  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = std::to_string(v);
  return {TemporalGraph(std::move(labels), std::move(snaps)), std::move(memberships)};
}

}  // namespace dynemb
