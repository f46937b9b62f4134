#include "dynemb/embed_static.hpp"
#include "dynemb/errors.hpp"

namespace dynemb {

std::string_view embedder_name(EmbedderKind k) {
  switch (k) {
    case EmbedderKind::Tsvd: return "tsvd";
    case EmbedderKind::Pca: return "pca";
    case EmbedderKind::Line: return "line";
    case EmbedderKind::RandWalk: return "randwalk";
    case EmbedderKind::Random: return "random";
  }
  return "unknown";
}

EmbedderKind parse_embedder(std::string_view name) {
  if (name == "tsvd") return EmbedderKind::Tsvd;
  if (name == "pca") return EmbedderKind::Pca;
  if (name == "line") return EmbedderKind::Line;
  if (name == "randwalk" || name == "node2vec" || name == "deepwalk") return EmbedderKind::RandWalk;
  if (name == "random") return EmbedderKind::Random;
  throw ConfigError("embedder: unknown method '" + std::string(name) + "'");
}

Matrix embed_snapshot(const Snapshot& s, const EmbedderSpec& spec, std::size_t d,
                      std::uint64_t seed) {
  switch (spec.kind) {
    case EmbedderKind::Tsvd: return embed_tsvd(s, d, seed, spec.weighted);
    case EmbedderKind::Pca: return embed_pca(s, d, seed, spec.weighted);
    case EmbedderKind::Line: {
      LineConfig cfg = spec.line;
      cfg.seed = seed;
      cfg.weighted = spec.weighted;
      return embed_line(s, d, cfg);
    }
    case EmbedderKind::RandWalk: {
      SkipgramConfig cfg = spec.skipgram;
      cfg.seed = seed;
      cfg.weighted = spec.weighted;
      return embed_randwalk(s, d, cfg);
    }
    case EmbedderKind::Random: return embed_random(s.vertex_count(), d, seed);
  }
  throw ConfigError("embedder: unhandled kind");
}

std::vector<Matrix> embed_sequence(std::span<const Snapshot> snapshots,
                                   const EmbedderSpec& spec, std::size_t d,
                                   std::uint64_t seed) {
  std::vector<Matrix> out;
  out.reserve(snapshots.size());
  for (std::size_t t = 0; t < snapshots.size(); ++t) {
    out.push_back(embed_snapshot(snapshots[t], spec, d, seed + t));
  }
  return out;
}

std::vector<Matrix> embed_sequence(const TemporalGraph& g, const EmbedderSpec& spec,
                                   std::size_t d, std::uint64_t seed) {
  return embed_sequence(g.snapshots(), spec, d, seed);
}

}  // namespace dynemb
