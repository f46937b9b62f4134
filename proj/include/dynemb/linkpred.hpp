#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynemb/bcgd.hpp"
#include "dynemb/embed_static.hpp"
#include "dynemb/matrix.hpp"
#include "dynemb/retrofit.hpp"
#include "dynemb/tempograph.hpp"
#include "dynemb/transform.hpp"

namespace dynemb {

// ---------------------------------------------------------------------------
// Splits and features
// ---------------------------------------------------------------------------

struct EvalConfig {
  double train_frac = 0.5;
  double test_frac = 0.3;
  double validation_frac = 0.2;
  std::size_t repeats = 10;
  std::size_t ndcg_p = 50;
  std::uint64_t seed = 1;
  double l2 = 1.0;                          // logistic-regression penalty
  bool exclude_historical_negatives = false;

  void validate() const;
};

struct LabeledPair {
  Vertex u = 0;
  Vertex v = 0;
  int label = 0;
  friend bool operator==(const LabeledPair&, const LabeledPair&) = default;
};

struct EvalSplit {
  std::vector<LabeledPair> train;
  std::vector<LabeledPair> test;
  std::vector<LabeledPair> validation;
};

// Positives of the target snapshot are shuffled and cut into floor(0.5 n)
// train, floor(0.3 n) test and the remainder validation; each partition gets
// the same number of negatives drawn without replacement from the target's
// non-edges (no self-pairs). Historical edges are excluded from the negative
// pool only when cfg.exclude_historical_negatives is set.
EvalSplit make_split(const TemporalGraph& g, std::size_t target, const EvalConfig& cfg,
                     std::uint64_t repeat_seed);

// Row i = phi(u_i) .* phi(v_i)
Matrix hadamard_features(const Matrix& phi, std::span<const LabeledPair> pairs);
std::vector<int> labels_of(std::span<const LabeledPair> pairs);

// ---------------------------------------------------------------------------
// Logistic regression
// ---------------------------------------------------------------------------

struct LogRegModel {
  std::vector<double> weights;
  double bias = 0.0;
  double l2 = 0.0;
};

struct LogRegConfig {
  double l2 = 1.0;
  std::size_t max_iterations = 20000;
  double tolerance = 1e-6;      // gradient max-norm
  double learning_rate = 0.0;   // 0 = 1/L from a bound on the loss curvature
};

// mean cross-entropy + (l2/2) ||weights||^2 (bias unpenalized)
double logreg_loss(const Matrix& x, std::span<const int> y, const LogRegModel& m);
// Gradient laid out as [d/dweights..., d/dbias].
std::vector<double> logreg_gradient(const Matrix& x, std::span<const int> y,
                                    const LogRegModel& m);
LogRegModel logreg_fit(const Matrix& x, std::span<const int> y, const LogRegConfig& cfg,
                       std::vector<double>* loss_history = nullptr);
std::vector<double> logreg_score(const LogRegModel& m, const Matrix& x);

// ---------------------------------------------------------------------------
// Ranking metrics
// ---------------------------------------------------------------------------

// P(random positive outscores random negative), ties count one half.
double auc(std::span<const double> scores, std::span<const int> labels);
// Step-wise average precision over distinct score thresholds.
double auprc(std::span<const double> scores, std::span<const int> labels);
// Binary-relevance NDCG over the top p; equal scores keep input order.
double ndcg_at_p(std::span<const double> scores, std::span<const int> labels, std::size_t p);

// Two-sided Welch t-test p-value; 1.0 when undefined (n < 2 or zero variance).
double welch_t_test(std::span<const double> a, std::span<const double> b);

// ---------------------------------------------------------------------------
// Protocol
// ---------------------------------------------------------------------------

enum class ModelKind { Ret, HomoLT, HeterLT, Bcgd, StaticBaseline };

std::string_view model_name(ModelKind k);
ModelKind parse_model(std::string_view name);

// Model hyperparameters; grids are searched by validation AUC per repeat.
struct HyperParams {
  RetrofitConfig retrofit{};
  std::vector<double> alpha_grid{0.1, 1.0, 10.0};
  GdConfig gd{};
  SmoothingSpec smoothing{};
  std::vector<double> theta_grid{0.1, 0.3, 0.5, 0.7, 0.9};  // wct only
  BcgdConfig bcgd{};
  std::vector<double> lambda_grid{0.01, 0.1, 1.0};
};

struct RepeatMetrics {
  double auc = 0.0;
  double auprc = 0.0;
  double ndcg = 0.0;
  std::string selected;   // chosen hyperparameter setting
};

struct MetricStats {
  double mean = 0.0;
  double sd = 0.0;
};

struct MetricsReport {
  std::string dataset;
  std::string model;
  std::string embedder;
  std::size_t dim = 0;
  std::vector<RepeatMetrics> repeats;

  MetricStats auc() const;
  MetricStats auprc() const;
  MetricStats ndcg() const;
  std::vector<double> auc_values() const;
};

// A candidate feature embedding (one hyperparameter setting of a model).
struct Candidate {
  std::string label;
  Matrix embedding;
};

// Embedding(s) a model produces for the target snapshot from the training
// snapshots (all but the last).
std::vector<Candidate> model_candidates(const TemporalGraph& g, ModelKind model,
                                        const EmbedderSpec& embedder, std::size_t d,
                                        const EvalConfig& cfg, const HyperParams& hyper);

// Fits logistic regression on split.train for each candidate, keeps the one
// with the best validation AUC and scores split.test with it.
RepeatMetrics evaluate_split(std::span<const Candidate> candidates, const EvalSplit& split,
                             const EvalConfig& cfg);

// Full protocol: target = last snapshot, embeddings from the earlier ones,
// cfg.repeats fresh splits, metrics on the test partition.
MetricsReport evaluate(const TemporalGraph& g, ModelKind model, const EmbedderSpec& embedder,
                       std::size_t d, const EvalConfig& cfg, const HyperParams& hyper);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline constexpr std::string_view kMetricsCsvHeader =
    "dataset,model,embedder,dim,repeat,auc,auprc,ndcg_at_p,selected";

// One row per repeat followed by "mean" and "sd" rows.
void write_metrics_csv(std::ostream& os, std::span<const MetricsReport> reports,
                       bool header = true);
void write_summary_table(std::ostream& os, std::span<const MetricsReport> reports);

}  // namespace dynemb
