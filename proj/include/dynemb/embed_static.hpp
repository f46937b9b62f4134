#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynemb/matrix.hpp"
#include "dynemb/rng.hpp"
#include "dynemb/tempograph.hpp"

namespace dynemb {

// ---------------------------------------------------------------------------
// Matrix factorization embedders
// ---------------------------------------------------------------------------

// Implicit n x n operator; only products with tall thin blocks are needed.
struct LinearOperator {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::function<Matrix(const Matrix&)> apply;            // A * X
  std::function<Matrix(const Matrix&)> apply_transpose;  // A^T * X
};

LinearOperator adjacency_operator(const Snapshot& s, bool weighted = false);
// A - 1 mu^T where mu holds the column means of the adjacency matrix.
LinearOperator centered_adjacency_operator(const Snapshot& s, bool weighted = false);

struct SvdResult {
  Matrix u;                // rows x rank
  std::vector<double> s;   // non-increasing, >= 0
  Matrix v;                // cols x rank
};

struct RandomizedSvdOptions {
  std::size_t oversample = 10;
  std::size_t power_iterations = 7;
};

// Rank-`rank` truncated SVD by randomized subspace iteration. Columns are
// sign-normalized so the largest-magnitude entry of each left vector is
// positive.
SvdResult randomized_svd(const LinearOperator& a, std::size_t rank, std::uint64_t seed,
                         const RandomizedSvdOptions& opts = {});

// U * Sigma^{1/2} of the adjacency's rank-d truncated SVD.
Matrix embed_tsvd(const Snapshot& s, std::size_t d, std::uint64_t seed, bool weighted = false);

struct PcaResult {
  Matrix scores;                            // n x d projections of centered rows
  std::vector<double> explained_variance;   // sigma_i^2 / (n - 1)
};

PcaResult pca(const Snapshot& s, std::size_t d, std::uint64_t seed, bool weighted = false);
Matrix embed_pca(const Snapshot& s, std::size_t d, std::uint64_t seed, bool weighted = false);

// ---------------------------------------------------------------------------
// Skip-gram with negative sampling (shared by random-walk and LINE models)
// ---------------------------------------------------------------------------

double sigmoid(double x);

// Per-sample loss  -log s(x.c) - sum_k log s(-x.n_k).
double sgns_loss(std::span<const double> x, std::span<const double> context,
                 std::span<const std::span<const double>> negatives);

struct SgnsGradient {
  std::vector<double> x;
  std::vector<double> context;
  std::vector<std::vector<double>> negatives;
};
SgnsGradient sgns_gradient(std::span<const double> x, std::span<const double> context,
                           std::span<const std::span<const double>> negatives);

// One SGD step on the per-sample loss. Output vectors (context and
// negatives) are updated in place as they are visited; the input vector x
// receives the accumulated step at the end. `scratch` must have x.size().
void sgns_step(std::span<double> x, std::span<double> context,
               std::span<double* const> negatives, double learning_rate,
               std::span<double> scratch);

// Noise distribution proportional to degree^{3/4} (isolated vertices never
// drawn).
class NoiseSampler {
 public:
  explicit NoiseSampler(const Snapshot& s, double power = 0.75);
  Vertex operator()(Rng& rng) { return static_cast<Vertex>(dist_(rng)); }

 private:
  std::discrete_distribution<std::uint32_t> dist_;
};

// ---------------------------------------------------------------------------
// Random-walk (DeepWalk / Node2Vec) embedder
// ---------------------------------------------------------------------------

struct SkipgramConfig {
  std::size_t negative_samples = 5;
  std::size_t walks_per_node = 10;
  std::size_t walk_length = 40;
  std::size_t window = 8;
  double p = 1.0;  // return parameter
  double q = 1.0;  // in-out parameter
  std::size_t epochs = 1;
  double learning_rate = 0.025;
  bool weighted = false;
  std::uint64_t seed = 1;

  void validate() const;
};

// Second-order biased walk. From (prev, cur) the next vertex x is chosen with
// weight w(cur,x)/p if x == prev, w(cur,x) if x is adjacent to prev, and
// w(cur,x)/q otherwise. p = q = 1 gives the uniform walk.
class BiasedWalker {
 public:
  BiasedWalker(const Snapshot& s, double p, double q, bool weighted = false);

  // prev == cur means "no previous vertex" (first step of a walk).
  Vertex step(Vertex prev, Vertex cur, Rng& rng) const;
  std::vector<Vertex> walk(Vertex start, std::size_t length, Rng& rng) const;

 private:
  const Snapshot* snap_;
  double inv_p_, inv_q_;
  bool weighted_;
};

Matrix embed_randwalk(const Snapshot& s, std::size_t d, const SkipgramConfig& cfg);

// ---------------------------------------------------------------------------
// LINE-style edge-sampling embedder
// ---------------------------------------------------------------------------

struct LineConfig {
  enum class Order { First, Second };
  Order order = Order::First;
  // Total edge samples; 0 picks max(200000, 400 * |E|).
  std::uint64_t samples = 0;
  std::size_t negative_samples = 5;
  double learning_rate = 0.025;
  bool weighted = false;
  std::uint64_t seed = 1;

  void validate() const;
};

Matrix embed_line(const Snapshot& s, std::size_t d, const LineConfig& cfg);

// Structure-free control embedding: i.i.d. N(0, 1) entries.
Matrix embed_random(std::size_t n, std::size_t d, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Per-snapshot sequences
// ---------------------------------------------------------------------------

enum class EmbedderKind { Tsvd, Pca, Line, RandWalk, Random };

std::string_view embedder_name(EmbedderKind k);
EmbedderKind parse_embedder(std::string_view name);

struct EmbedderSpec {
  EmbedderKind kind = EmbedderKind::Tsvd;
  SkipgramConfig skipgram{};
  LineConfig line{};
  bool weighted = false;
};

// Applies the embedder to one snapshot; `seed` overrides the config seeds.
Matrix embed_snapshot(const Snapshot& s, const EmbedderSpec& spec, std::size_t d,
                      std::uint64_t seed);

// Snapshot t (0-based) is embedded with seed + t.
std::vector<Matrix> embed_sequence(std::span<const Snapshot> snapshots,
                                   const EmbedderSpec& spec, std::size_t d,
                                   std::uint64_t seed);
std::vector<Matrix> embed_sequence(const TemporalGraph& g, const EmbedderSpec& spec,
                                   std::size_t d, std::uint64_t seed);

}  // namespace dynemb
