#include "dynemb/tempograph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string_view>

#include "dynemb/errors.hpp"

namespace dynemb {

Snapshot::Snapshot(std::size_t vertex_count, std::span<const Edge> edges)
    : vertex_count_(vertex_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw std::out_of_range("edge endpoint outside the vertex universe");
    }
    if (e.u == e.v) continue;
    edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.count});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  std::size_t w = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (w > 0 && edges_[w - 1].u == edges_[i].u && edges_[w - 1].v == edges_[i].v) {
      edges_[w - 1].count += edges_[i].count;
    } else {
      edges_[w++] = edges_[i];
    }
  }
  edges_.resize(w);

  offsets_.assign(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < vertex_count_; ++i) offsets_[i + 1] += offsets_[i];
  adj_.resize(offsets_.back());
  adj_count_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adj_[fill[e.u]] = e.v;
    adj_count_[fill[e.u]++] = e.count;
    adj_[fill[e.v]] = e.u;
    adj_count_[fill[e.v]++] = e.count;
  }
  // Filling in (u,v) order leaves every neighbor list ascending.
}

std::uint64_t Snapshot::interaction_count() const noexcept {
  std::uint64_t n = 0;
  for (const Edge& e : edges_) n += e.count;
  return n;
}

std::span<const Vertex> Snapshot::neighbors(Vertex v) const {
  if (v >= vertex_count_) throw std::out_of_range("vertex index out of range");
  return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const std::uint32_t> Snapshot::neighbor_counts(Vertex v) const {
  if (v >= vertex_count_) throw std::out_of_range("vertex index out of range");
  return {adj_count_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Snapshot::degree(Vertex v) const { return neighbors(v).size(); }

bool Snapshot::has_edge(Vertex u, Vertex v) const {
  if (u == v) return false;
  const auto n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

std::size_t degree(const Snapshot& s, Vertex v) { return s.degree(v); }

TemporalGraph::TemporalGraph(std::vector<std::string> labels,
                             std::vector<Snapshot> snapshots)
    : labels_(std::move(labels)), snapshots_(std::move(snapshots)) {
  if (snapshots_.size() < 2) throw StructuralError("a temporal graph needs at least 2 snapshots");
  for (const auto& s : snapshots_) {
    if (s.vertex_count() != labels_.size()) {
      throw StructuralError("snapshot vertex universe differs from the graph's");
    }
  }
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<Vertex>(i)).second) {
      throw StructuralError("duplicate vertex label '" + labels_[i] + "'");
    }
  }
}

std::optional<Vertex> TemporalGraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> TemporalGraph::empty_snapshots() const {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < snapshots_.size(); ++t)
    if (snapshots_[t].empty()) out.push_back(t);
  return out;
}

std::size_t TemporalGraph::distinct_edge_count() const {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& s : snapshots_)
    for (const Edge& e : s.edges()) seen.emplace(e.u, e.v);
  return seen.size();
}

std::uint64_t TemporalGraph::interaction_count() const {
  std::uint64_t n = 0;
  for (const auto& s : snapshots_) n += s.interaction_count();
  return n;
}

namespace {

struct RawEvent {
  Vertex u, v;
  double ts;
};

double parse_timestamp(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = first + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ParseError(line, "bad timestamp '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t b = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

}  // namespace

TemporalGraph parse_edge_list(std::istream& in, const SnapshotSpec& spec) {
  if (spec.mode == SnapshotSpec::Mode::EqualWidth && spec.bin_count < 2) {
    throw ConfigError("snapshots: equal-width binning needs at least 2 bins");
  }
  if (spec.mode == SnapshotSpec::Mode::ExplicitBoundaries) {
    if (spec.boundaries.empty()) throw ConfigError("boundaries: list is empty");
    for (std::size_t i = 1; i < spec.boundaries.size(); ++i)
      if (!(spec.boundaries[i - 1] < spec.boundaries[i]))
        throw ConfigError("boundaries: must be strictly increasing");
  }

  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  auto intern = [&](std::string_view tok) {
    auto [it, inserted] = index.try_emplace(std::string(tok), static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(tok);
    return it->second;
  };

  std::vector<RawEvent> events;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 3) {
      throw ParseError(lineno, "expected 'u v timestamp', got " + std::to_string(toks.size()) +
                                   " fields");
    }
    const double ts = parse_timestamp(toks[2], lineno);
    if (spec.mode == SnapshotSpec::Mode::PreBinned && (ts < 0 || ts != std::floor(ts))) {
      throw ParseError(lineno, "pre-binned snapshot index must be a non-negative integer");
    }
    const Vertex u = intern(toks[0]);
    const Vertex v = intern(toks[1]);
    events.push_back({u, v, ts});
  }
  if (events.empty()) throw ParseError(0, "edge list is empty");

  std::size_t k = 0;
  std::vector<std::size_t> bin(events.size());
  switch (spec.mode) {
    case SnapshotSpec::Mode::EqualWidth: {
      k = spec.bin_count;
      double lo = events.front().ts, hi = lo;
      for (const auto& e : events) {
        lo = std::min(lo, e.ts);
        hi = std::max(hi, e.ts);
      }
      const double width = hi - lo;
      for (std::size_t i = 0; i < events.size(); ++i) {
        std::size_t b = 0;
        if (width > 0) {
          const double pos = (events[i].ts - lo) / width * static_cast<double>(k);
          b = std::min(k - 1, static_cast<std::size_t>(pos));
        }
        bin[i] = b;
      }
      break;
    }
    case SnapshotSpec::Mode::ExplicitBoundaries: {
      k = spec.boundaries.size() + 1;
      for (std::size_t i = 0; i < events.size(); ++i) {
        bin[i] = static_cast<std::size_t>(
            std::upper_bound(spec.boundaries.begin(), spec.boundaries.end(), events[i].ts) -
            spec.boundaries.begin());
      }
      break;
    }
    case SnapshotSpec::Mode::PreBinned: {
      for (std::size_t i = 0; i < events.size(); ++i) {
        bin[i] = static_cast<std::size_t>(events[i].ts);
        k = std::max(k, bin[i] + 1);
      }
      break;
    }
  }

  std::vector<std::vector<Edge>> per_bin(k);
  for (std::size_t i = 0; i < events.size(); ++i) {
    per_bin[bin[i]].push_back({events[i].u, events[i].v, 1});
  }
  std::vector<Snapshot> snaps;
  snaps.reserve(k);
  std::size_t non_empty = 0;
  for (auto& edges : per_bin) {
    snaps.emplace_back(labels.size(), edges);
    if (!snaps.back().empty()) ++non_empty;
  }
  if (non_empty < 2) {
    throw StructuralError("edge list yields " + std::to_string(non_empty) +
                          " non-empty snapshot(s); at least 2 are required");
  }
  return TemporalGraph(std::move(labels), std::move(snaps));
}

TemporalGraph load_edge_list(const std::string& path, const SnapshotSpec& spec) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return parse_edge_list(in, spec);
}

void dump_edge_list(std::ostream& out, const TemporalGraph& g) {
  std::vector<char> touched(g.vertex_count(), 0);
  for (const auto& s : g.snapshots())
    for (const Edge& e : s.edges()) touched[e.u] = touched[e.v] = 1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!touched[v]) out << g.label(v) << ' ' << g.label(v) << " 0\n";
  }
  for (std::size_t t = 0; t < g.snapshot_count(); ++t) {
    for (const Edge& e : g.snapshot(t).edges()) {
      for (std::uint32_t c = 0; c < e.count; ++c) {
        out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << t << '\n';
      }
    }
  }
}

Matrix adjacency_dense(const Snapshot& s, bool weighted, std::size_t guard) {
  const std::size_t n = s.vertex_count();
  if (n > guard) {
    throw StructuralError("dense adjacency for " + std::to_string(n) +
                          " vertices exceeds the guard of " + std::to_string(guard));
  }
  Matrix a(n, n);
  for (const Edge& e : s.edges()) {
    const double w = weighted ? static_cast<double>(e.count) : 1.0;
    a(e.u, e.v) = w;
    a(e.v, e.u) = w;
  }
  return a;
}

}  // namespace dynemb
