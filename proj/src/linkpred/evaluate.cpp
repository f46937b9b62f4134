#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <string>

#include "dynemb/errors.hpp"
#include "dynemb/linkpred.hpp"
#include "dynemb/rng.hpp"

namespace dynemb {

std::string_view model_name(ModelKind k) {
  switch (k) {
    case ModelKind::Ret: return "RET";
    case ModelKind::HomoLT: return "HomoLT";
    case ModelKind::HeterLT: return "HeterLT";
    case ModelKind::Bcgd: return "BCGD";
    case ModelKind::StaticBaseline: return "Static";
  }
  return "unknown";
}

ModelKind parse_model(std::string_view name) {
  std::string s(name);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "ret" || s == "retrofit") return ModelKind::Ret;
  if (s == "homolt" || s == "homogeneous") return ModelKind::HomoLT;
  if (s == "heterlt" || s == "heterogeneous") return ModelKind::HeterLT;
  if (s == "bcgd") return ModelKind::Bcgd;
  if (s == "static" || s == "staticbaseline") return ModelKind::StaticBaseline;
  throw ConfigError("model: unknown kind '" + std::string(name) + "'");
}

namespace {

MetricStats stats_of(const std::vector<RepeatMetrics>& r, double RepeatMetrics::*field) {
  MetricStats s;
  if (r.empty()) return s;
  for (const auto& m : r) s.mean += m.*field;
  s.mean /= static_cast<double>(r.size());
  if (r.size() > 1) {
    double ss = 0.0;
    for (const auto& m : r) ss += (m.*field - s.mean) * (m.*field - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(r.size() - 1));
  }
  return s;
}

std::string fmt_param(std::string_view name, double v) {
  return std::string(name) + "=" + format_real(v);
}

}  // namespace

MetricStats MetricsReport::auc() const { return stats_of(repeats, &RepeatMetrics::auc); }
MetricStats MetricsReport::auprc() const { return stats_of(repeats, &RepeatMetrics::auprc); }
MetricStats MetricsReport::ndcg() const { return stats_of(repeats, &RepeatMetrics::ndcg); }

std::vector<double> MetricsReport::auc_values() const {
  std::vector<double> v;
  for (const auto& r : repeats) v.push_back(r.auc);
  return v;
}

std::vector<Candidate> model_candidates(const TemporalGraph& g, ModelKind model,
                                        const EmbedderSpec& embedder, std::size_t d,
                                        const EvalConfig& cfg, const HyperParams& hyper) {
  const std::size_t T = g.snapshot_count();
  if (T < 3) throw StructuralError("evaluate: need at least 3 snapshots (2 for training + target)");
  const auto train = g.snapshots().first(T - 1);
  const std::uint64_t seed = cfg.seed;

  std::vector<Candidate> out;
  switch (model) {
    case ModelKind::StaticBaseline: {
      out.push_back({"-", embed_snapshot(train.back(), embedder, d, seed + (T - 2))});
      break;
    }
    case ModelKind::Ret: {
      const Matrix phi1 = embed_snapshot(train.front(), embedder, d, seed);
      for (double alpha : hyper.alpha_grid) {
        RetrofitConfig rc = hyper.retrofit;
        rc.alpha = alpha;
        auto seq = retrofit_sequence(phi1, train.subspan(1), rc);
        out.push_back({fmt_param("alpha", alpha), std::move(seq.back())});
      }
      break;
    }
    case ModelKind::HomoLT: {
      const auto phis = embed_sequence(train, embedder, d, seed);
      const Matrix w = fit_homogeneous(phis, hyper.gd);
      out.push_back({"-", project(phis.back(), w)});
      break;
    }
    case ModelKind::HeterLT: {
      const auto phis = embed_sequence(train, embedder, d, seed);
      const auto ws = fit_pairwise_all(phis, hyper.gd);
      SmoothingSpec sm = hyper.smoothing;
      const std::string kind(smoothing_name(sm.kind));
      if (sm.kind == SmoothingSpec::Kind::Wct && !hyper.theta_grid.empty()) {
        for (double theta : hyper.theta_grid) {
          sm.theta = theta;
          out.push_back({kind + ";" + fmt_param("theta", theta), project(phis.back(), combine(ws, sm))});
        }
      } else {
        std::string label = kind;
        if (sm.kind == SmoothingSpec::Kind::Wct) label += ";" + fmt_param("theta", sm.theta);
        out.push_back({label, project(phis.back(), combine(ws, sm))});
      }
      break;
    }
    case ModelKind::Bcgd: {
      BcgdConfig bc = hyper.bcgd;
      bc.d = d;
      bc.seed = derive_seed(seed, seed_stream::kBcgd, 0);
      const std::vector<double> grid =
          hyper.lambda_grid.empty() ? std::vector<double>{bc.lambda} : hyper.lambda_grid;
      for (double lambda : grid) {
        bc.lambda = lambda;
        auto phis = fit_bcgd(train, bc);
        out.push_back({fmt_param("lambda", lambda), std::move(phis.back())});
      }
      break;
    }
  }
  return out;
}

RepeatMetrics evaluate_split(std::span<const Candidate> candidates, const EvalSplit& split,
                             const EvalConfig& cfg) {
  if (candidates.empty()) throw ConfigError("evaluate: no candidate embeddings");
  LogRegConfig lc;
  lc.l2 = cfg.l2;
  const auto y_train = labels_of(split.train);
  const auto y_val = labels_of(split.validation);
  const auto y_test = labels_of(split.test);
  const bool can_validate = std::find(y_val.begin(), y_val.end(), 1) != y_val.end() &&
                            std::find(y_val.begin(), y_val.end(), 0) != y_val.end();

  std::size_t best = 0;
  LogRegModel best_model;
  double best_auc = -1.0;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const Matrix& phi = candidates[c].embedding;
    LogRegModel m = logreg_fit(hadamard_features(phi, split.train), y_train, lc);
    double val = 0.0;
    if (can_validate) val = auc(logreg_score(m, hadamard_features(phi, split.validation)), y_val);
    if (c == 0 || val > best_auc) {
      best = c;
      best_auc = val;
      best_model = std::move(m);
    }
    if (!can_validate) break;
  }

  const auto scores = logreg_score(best_model, hadamard_features(candidates[best].embedding, split.test));
  RepeatMetrics r;
  r.auc = auc(scores, y_test);
  r.auprc = auprc(scores, y_test);
  r.ndcg = ndcg_at_p(scores, y_test, cfg.ndcg_p);
  r.selected = candidates[best].label;
  return r;
}

MetricsReport evaluate(const TemporalGraph& g, ModelKind model, const EmbedderSpec& embedder,
                       std::size_t d, const EvalConfig& cfg, const HyperParams& hyper) {
  cfg.validate();
  const auto candidates = model_candidates(g, model, embedder, d, cfg, hyper);
  MetricsReport report;
  report.model = std::string(model_name(model));
  report.embedder = std::string(embedder_name(embedder.kind));
  report.dim = d;
  const std::size_t target = g.snapshot_count() - 1;
  for (std::size_t r = 0; r < cfg.repeats; ++r) {
    const auto split = make_split(g, target, cfg, derive_seed(cfg.seed, seed_stream::kSplit, r));
    report.repeats.push_back(evaluate_split(candidates, split, cfg));
  }
  return report;
}

}  // namespace dynemb
