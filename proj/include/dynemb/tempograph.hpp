#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dynemb/matrix.hpp"

namespace dynemb {

using Vertex = std::uint32_t;

// Canonical undirected edge, u < v. count is the number of interactions
// that collapsed onto this pair within one snapshot.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t count = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// One network state G_t over the shared vertex universe. Immutable; keeps a
// CSR adjacency with sorted neighbor lists.
class Snapshot {
 public:
  Snapshot() = default;
  // Self-loops are dropped, (u,v)/(v,u) merge, duplicates add multiplicity.
  Snapshot(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::uint64_t interaction_count() const noexcept;
  bool empty() const noexcept { return edges_.empty(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  // Multiplicities aligned with neighbors(v).
  std::span<const std::uint32_t> neighbor_counts(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Snapshot& a, const Snapshot& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
  std::vector<std::uint32_t> adj_count_;
};

// Snapshot sequence over a common vertex set, with the mapping between
// external node identifiers and dense indices (first-appearance order).
class TemporalGraph {
 public:
  TemporalGraph(std::vector<std::string> labels, std::vector<Snapshot> snapshots);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t snapshot_count() const noexcept { return snapshots_.size(); }
  const Snapshot& snapshot(std::size_t t) const { return snapshots_.at(t); }
  std::span<const Snapshot> snapshots() const noexcept { return snapshots_; }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<Vertex> index_of(const std::string& label) const;

  std::vector<std::size_t> empty_snapshots() const;
  std::size_t distinct_edge_count() const;  // across all snapshots
  std::uint64_t interaction_count() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Snapshot> snapshots_;
};

struct SnapshotSpec {
  enum class Mode { EqualWidth, ExplicitBoundaries, PreBinned };
  Mode mode = Mode::EqualWidth;
  std::size_t bin_count = 0;       // EqualWidth
  std::vector<double> boundaries;  // ExplicitBoundaries, strictly increasing

  static SnapshotSpec equal_width(std::size_t k) { return {Mode::EqualWidth, k, {}}; }
  static SnapshotSpec explicit_boundaries(std::vector<double> b) {
    return {Mode::ExplicitBoundaries, 0, std::move(b)};
  }
  static SnapshotSpec pre_binned() { return {Mode::PreBinned, 0, {}}; }
};

// Reads "u v timestamp" lines ('#' comments and blank lines skipped).
// Equal-width bins span [min_ts, max_ts] with the last bin closed; explicit
// boundaries b_1 < ... < b_{K-1} put t into bin #{b_i <= t}; pre-binned reads
// the third column as a 0-based snapshot index.
TemporalGraph parse_edge_list(std::istream& in, const SnapshotSpec& spec);
TemporalGraph load_edge_list(const std::string& path, const SnapshotSpec& spec);

// Emits "u v t" lines with t the snapshot index, one line per interaction.
// Vertices with no edge anywhere are emitted as a self-loop "v v 0", which
// the parser drops while still registering the vertex.
void dump_edge_list(std::ostream& out, const TemporalGraph& g);

std::size_t degree(const Snapshot& s, Vertex v);

inline constexpr std::size_t kDefaultDenseGuard = 50000;

Matrix adjacency_dense(const Snapshot& s, bool weighted,
                       std::size_t guard = kDefaultDenseGuard);

struct SbmParams {
  std::size_t nodes = 200;
  std::size_t communities = 4;
  std::size_t snapshots = 8;
  double p_in = 0.2;
  double p_out = 0.01;
  double churn = 0.05;
  std::uint64_t seed = 1;
};

struct SbmGraph {
  TemporalGraph graph;
  // memberships[t][v] = community of v at snapshot t
  std::vector<std::vector<std::uint32_t>> memberships;
};

// Drifting stochastic block model. Snapshot 0 assigns balanced communities
// in random order; each later snapshot moves round(churn * nodes) uniformly
// chosen vertices to uniformly random communities and redraws every edge.
SbmGraph synth_dynamic_sbm(const SbmParams& p);

}  // namespace dynemb
