#include "dynemb/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "dynemb/bcgd.hpp"
#include "dynemb/embed_static.hpp"
#include "dynemb/errors.hpp"
#include "dynemb/linkpred.hpp"
#include "dynemb/retrofit.hpp"
#include "dynemb/rng.hpp"
#include "dynemb/simd/kernels.hpp"
#include "dynemb/tempograph.hpp"
#include "dynemb/transform.hpp"

namespace dynemb::cli {
namespace {

namespace fs = std::filesystem;

struct GraphOptions {
  std::string input;
  std::size_t snapshots = 0;
  std::vector<double> boundaries;
  bool prebinned = false;
  bool weighted = false;
};

struct ModelOptions {
  std::vector<std::string> models{"static", "ret", "homolt", "heterlt"};
  std::vector<std::string> embedders{"tsvd"};
  std::size_t dim = 64;
  std::vector<std::size_t> dims{32, 64, 128};
  std::string smoothing = "wct";
  std::vector<double> alpha{0.1, 1.0, 10.0};
  std::vector<double> theta{0.1, 0.3, 0.5, 0.7, 0.9};
  std::vector<double> lambda{0.01, 0.1, 1.0};
  std::size_t repeats = 10;
  std::size_t ndcg_p = 50;
  double l2 = 1.0;
  bool exclude_historical = false;
  std::uint64_t seed = 1;
  std::string dataset;
  std::string out;

  std::size_t retrofit_sweeps = 20;
  double retrofit_tolerance = 1e-6;
  std::size_t gd_iterations = 10000;
  double gd_lr = 1e-3;
  double clip = 5.0;
  std::size_t bcgd_iterations = 500;
  double bcgd_lr = 1e-2;

  std::uint64_t line_samples = 0;
  std::string line_order = "first";
  std::size_t walks = 10;
  std::size_t walk_length = 40;
  std::size_t window = 8;
  double p = 1.0;
  double q = 1.0;
  std::size_t negatives = 5;
  std::size_t epochs = 1;
};

void add_graph_options(CLI::App* cmd, GraphOptions& g) {
  cmd->add_option("--input", g.input, "Edge-list file ('u v t' per line)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--snapshots", g.snapshots, "Equal-width time bins over [min_ts, max_ts]");
  cmd->add_option("--boundaries", g.boundaries, "Explicit bin boundaries (comma separated)")
      ->delimiter(',');
  cmd->add_flag("--prebinned", g.prebinned, "Third column is the 0-based snapshot index");
  cmd->add_flag("--weighted", g.weighted, "Use interaction counts as edge weights");
}

SnapshotSpec resolve_spec(const GraphOptions& g) {
  const int given = int(g.prebinned) + int(!g.boundaries.empty()) + int(g.snapshots > 0);
  if (given > 1) throw ConfigError("snapshots: --snapshots, --boundaries and --prebinned are exclusive");
  if (g.prebinned) return SnapshotSpec::pre_binned();
  if (!g.boundaries.empty()) return SnapshotSpec::explicit_boundaries(g.boundaries);
  if (g.snapshots > 0) return SnapshotSpec::equal_width(g.snapshots);
  throw ConfigError("snapshots: give one of --snapshots K, --boundaries or --prebinned");
}

TemporalGraph load_graph(const GraphOptions& g, std::ostream& err) {
  TemporalGraph graph = load_edge_list(g.input, resolve_spec(g));
  for (std::size_t t : graph.empty_snapshots()) {
    err << "warning: snapshot " << t << " has no edges\n";
  }
  return graph;
}

void add_model_options(CLI::App* cmd, ModelOptions& m, bool sweep) {
  cmd->add_option("--model", m.models, "Models: static, ret, homolt, heterlt, bcgd")->delimiter(',');
  cmd->add_option("--embedder", m.embedders, "Base embedders: tsvd, pca, line, randwalk, random")
      ->delimiter(',');
  if (sweep) {
    cmd->add_option("--dims", m.dims, "Latent dimensions to sweep")->delimiter(',');
  } else {
    cmd->add_option("--dim", m.dim, "Latent dimension")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--smoothing", m.smoothing, "HeterLT combiner: avg, linear, exp, wct");
  cmd->add_option("--alpha", m.alpha, "Retrofit alpha grid")->delimiter(',');
  cmd->add_option("--theta", m.theta, "wct theta grid")->delimiter(',');
  cmd->add_option("--lambda", m.lambda, "BCGD lambda grid")->delimiter(',');
  cmd->add_option("--repeats", m.repeats, "Evaluation repeats")->check(CLI::PositiveNumber);
  cmd->add_option("--ndcg-p", m.ndcg_p, "NDCG cutoff P")->check(CLI::PositiveNumber);
  cmd->add_option("--l2", m.l2, "Logistic-regression L2 strength");
  cmd->add_flag("--exclude-historical-negatives", m.exclude_historical,
                "Also exclude earlier snapshots' edges from the negative pool");
  cmd->add_option("--seed", m.seed, "Master seed");
  cmd->add_option("--dataset", m.dataset, "Dataset name for reports (default: input file stem)");
  cmd->add_option("--out", m.out, "Output directory")->required();

  cmd->add_option("--retrofit-sweeps", m.retrofit_sweeps, "Max Jacobi sweeps");
  cmd->add_option("--retrofit-tolerance", m.retrofit_tolerance, "Jacobi stopping tolerance");
  cmd->add_option("--gd-iterations", m.gd_iterations, "Transform GD iterations");
  cmd->add_option("--gd-lr", m.gd_lr, "Transform GD learning rate");
  cmd->add_option("--clip", m.clip, "Transform GD global-norm clip ratio");
  cmd->add_option("--bcgd-iterations", m.bcgd_iterations, "BCGD outer passes");
  cmd->add_option("--bcgd-lr", m.bcgd_lr, "BCGD learning rate");
  cmd->add_option("--line-samples", m.line_samples, "LINE edge samples (0 = auto)");
  cmd->add_option("--line-order", m.line_order, "LINE proximity order: first, second");
  cmd->add_option("--walks", m.walks, "Random walks per vertex");
  cmd->add_option("--walk-length", m.walk_length, "Random walk length");
  cmd->add_option("--window", m.window, "Skip-gram window");
  cmd->add_option("--p", m.p, "Node2Vec return parameter");
  cmd->add_option("--q", m.q, "Node2Vec in-out parameter");
  cmd->add_option("--neg", m.negatives, "Negative samples");
  cmd->add_option("--epochs", m.epochs, "Skip-gram epochs");
}

EmbedderSpec embedder_spec(const std::string& name, const ModelOptions& m, bool weighted) {
  EmbedderSpec spec;
  spec.kind = parse_embedder(name);
  spec.weighted = weighted;
  spec.skipgram.walks_per_node = m.walks;
  spec.skipgram.walk_length = m.walk_length;
  spec.skipgram.window = m.window;
  spec.skipgram.p = m.p;
  spec.skipgram.q = m.q;
  spec.skipgram.negative_samples = m.negatives;
  spec.skipgram.epochs = m.epochs;
  spec.skipgram.validate();
  spec.line.samples = m.line_samples;
  spec.line.negative_samples = m.negatives;
  if (m.line_order == "first") {
    spec.line.order = LineConfig::Order::First;
  } else if (m.line_order == "second") {
    spec.line.order = LineConfig::Order::Second;
  } else {
    throw ConfigError("line-order: expected 'first' or 'second', got '" + m.line_order + "'");
  }
  spec.line.validate();
  return spec;
}

HyperParams hyper_params(const ModelOptions& m, bool weighted) {
  HyperParams h;
  if (m.alpha.empty()) throw ConfigError("alpha: grid is empty");
  if (m.lambda.empty()) throw ConfigError("lambda: grid is empty");
  h.alpha_grid = m.alpha;
  h.retrofit.alpha = m.alpha.front();
  h.retrofit.max_sweeps = m.retrofit_sweeps;
  h.retrofit.tolerance = m.retrofit_tolerance;
  h.retrofit.weighted = weighted;
  for (double a : m.alpha) {
    RetrofitConfig rc = h.retrofit;
    rc.alpha = a;
    rc.validate();
  }
  h.gd.iterations = m.gd_iterations;
  h.gd.learning_rate = m.gd_lr;
  h.gd.clip_ratio = m.clip;
  h.gd.validate();
  h.smoothing.kind = parse_smoothing(m.smoothing);
  h.theta_grid = m.theta;
  if (!m.theta.empty()) h.smoothing.theta = m.theta.front();
  for (double t : m.theta) {
    SmoothingSpec s = h.smoothing;
    s.theta = t;
    s.validate();
  }
  h.bcgd.iterations = m.bcgd_iterations;
  h.bcgd.learning_rate = m.bcgd_lr;
  h.bcgd.weighted = weighted;
  h.bcgd.lambda = m.lambda.front();
  h.lambda_grid = m.lambda;
  for (double l : m.lambda) {
    BcgdConfig bc = h.bcgd;
    bc.lambda = l;
    bc.validate();
  }
  return h;
}

EvalConfig eval_config(const ModelOptions& m) {
  EvalConfig c;
  c.repeats = m.repeats;
  c.ndcg_p = m.ndcg_p;
  c.seed = m.seed;
  c.l2 = m.l2;
  c.exclude_historical_negatives = m.exclude_historical;
  c.validate();
  return c;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f << content;
    if (!f) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
}

std::string manifest_text(const std::string& command, const CLI::App* cmd,
                          const ModelOptions* m) {
  std::ostringstream os;
  // Comment lines carry derived values; the rest replays via --config.
  os << "# dynemb run manifest\n";
  os << "# command: " << command << '\n';
  os << "# simd backend: " << simd::backend_name(simd::active_backend()) << '\n';
  if (m) {
    os << "# seed.embedding: " << m->seed << " (snapshot t uses seed + t)\n";
    os << "# seed.bcgd: " << derive_seed(m->seed, seed_stream::kBcgd, 0) << '\n';
    for (std::size_t r = 0; r < m->repeats; ++r) {
      os << "# seed.split." << r << ": " << derive_seed(m->seed, seed_stream::kSplit, r) << '\n';
    }
  }
  os << cmd->config_to_str(true, false);
  return os.str();
}

std::string dataset_name(const ModelOptions& m, const GraphOptions& g) {
  return m.dataset.empty() ? fs::path(g.input).stem().string() : m.dataset;
}

std::vector<MetricsReport> run_matrix(const TemporalGraph& graph, const ModelOptions& m,
                                      const GraphOptions& g, std::size_t dim,
                                      std::ostream& err) {
  const EvalConfig ec = eval_config(m);
  const HyperParams hp = hyper_params(m, g.weighted);
  std::vector<ModelKind> models;
  for (const auto& s : m.models) models.push_back(parse_model(s));
  std::vector<EmbedderSpec> embedders;
  for (const auto& s : m.embedders) embedders.push_back(embedder_spec(s, m, g.weighted));

  std::vector<MetricsReport> reports;
  bool bcgd_done = false;
  for (const auto& emb : embedders) {
    for (ModelKind model : models) {
      if (model == ModelKind::Bcgd) {
        if (bcgd_done) continue;
        bcgd_done = true;
      }
      err << "evaluating " << model_name(model) << " (" << embedder_name(emb.kind)
          << ", d=" << dim << ")\n";
      MetricsReport r = evaluate(graph, model, emb, dim, ec, hp);
      r.dataset = dataset_name(m, g);
      if (model == ModelKind::Bcgd) r.embedder = "none";
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

int cmd_ingest(const GraphOptions& g, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  const TemporalGraph graph = load_graph(g, err);
  std::ostringstream os;
  os << "nodes " << graph.vertex_count() << '\n';
  os << "edges " << graph.distinct_edge_count() << '\n';
  os << "interactions " << graph.interaction_count() << '\n';
  os << "snapshots " << graph.snapshot_count() << '\n';
  os << "empty_snapshots " << graph.empty_snapshots().size() << '\n';
  for (std::size_t t = 0; t < graph.snapshot_count(); ++t) {
    const auto& s = graph.snapshot(t);
    os << "snapshot " << t << " edges " << s.edge_count() << " interactions "
       << s.interaction_count() << '\n';
  }
  out << os.str();
  if (!out_path.empty()) write_file_atomic(out_path, os.str());
  return 0;
}

int cmd_synth(const SbmParams& p, const std::string& out_path, std::ostream& out) {
  const SbmGraph sbm = synth_dynamic_sbm(p);
  std::ostringstream os;
  dump_edge_list(os, sbm.graph);
  write_file_atomic(out_path, os.str());
  out << "wrote " << out_path << ": " << sbm.graph.vertex_count() << " nodes, "
      << sbm.graph.distinct_edge_count() << " edges, " << sbm.graph.snapshot_count()
      << " snapshots\n";
  return 0;
}

std::string embedding_text(const Matrix& m) {
  std::ostringstream os;
  write_embedding(os, m);
  return os.str();
}

std::string transform_text(const Matrix& w) {
  std::ostringstream os;
  write_transform(os, w);
  return os.str();
}

int cmd_embed(const GraphOptions& g, const ModelOptions& m, const std::string& model_name_arg,
              const CLI::App* cmd, std::ostream& out, std::ostream& err) {
  const TemporalGraph graph = load_graph(g, err);
  if (m.embedders.size() != 1) throw ConfigError("embedder: embed takes exactly one embedder");
  const EmbedderSpec spec = embedder_spec(m.embedders.front(), m, g.weighted);
  const HyperParams hp = hyper_params(m, g.weighted);
  const fs::path dir(m.out);
  const ModelKind model = model_name_arg == "static" ? ModelKind::StaticBaseline
                                                     : parse_model(model_name_arg);
  auto phi_path = [&](std::size_t t) { return dir / ("phi_" + std::to_string(t) + ".emb"); };

  std::size_t files = 0;
  switch (model) {
    case ModelKind::StaticBaseline: {
      const auto phis = embed_sequence(graph, spec, m.dim, m.seed);
      for (std::size_t t = 0; t < phis.size(); ++t, ++files)
        write_file_atomic(phi_path(t), embedding_text(phis[t]));
      break;
    }
    case ModelKind::Ret: {
      const Matrix phi0 = embed_snapshot(graph.snapshot(0), spec, m.dim, m.seed);
      write_file_atomic(phi_path(0), embedding_text(phi0));
      ++files;
      const auto seq = retrofit_sequence(phi0, graph.snapshots().subspan(1), hp.retrofit);
      for (std::size_t t = 0; t < seq.size(); ++t, ++files)
        write_file_atomic(phi_path(t + 1), embedding_text(seq[t]));
      break;
    }
    case ModelKind::HomoLT:
    case ModelKind::HeterLT: {
      const auto phis = embed_sequence(graph, spec, m.dim, m.seed);
      for (std::size_t t = 0; t < phis.size(); ++t, ++files)
        write_file_atomic(phi_path(t), embedding_text(phis[t]));
      const Matrix w = model == ModelKind::HomoLT ? fit_homogeneous(phis, hp.gd)
                                                  : fit_heterogeneous(phis, hp.gd, hp.smoothing);
      write_file_atomic(dir / "W.transform", transform_text(w));
      write_file_atomic(dir / "phi_next.emb", embedding_text(project(phis.back(), w)));
      files += 2;
      break;
    }
    case ModelKind::Bcgd: {
      BcgdConfig bc = hp.bcgd;
      bc.d = m.dim;
      bc.seed = derive_seed(m.seed, seed_stream::kBcgd, 0);
      const auto phis = fit_bcgd(graph, bc);
      for (std::size_t t = 0; t < phis.size(); ++t, ++files)
        write_file_atomic(phi_path(t), embedding_text(phis[t]));
      break;
    }
  }
  write_file_atomic(dir / "run-manifest.txt", manifest_text("embed", cmd, nullptr));
  out << "wrote " << files << " file(s) to " << dir.string() << '\n';
  return 0;
}

int cmd_evaluate(const GraphOptions& g, const ModelOptions& m, const CLI::App* cmd,
                 std::ostream& out, std::ostream& err) {
  const TemporalGraph graph = load_graph(g, err);
  const auto reports = run_matrix(graph, m, g, m.dim, err);
  const fs::path dir(m.out);
  std::ostringstream csv, summary;
  write_metrics_csv(csv, reports);
  write_summary_table(summary, reports);
  write_file_atomic(dir / "metrics.csv", csv.str());
  write_file_atomic(dir / "summary.txt", summary.str());
  write_file_atomic(dir / "run-manifest.txt", manifest_text("evaluate", cmd, &m));
  out << summary.str();
  return 0;
}

int cmd_sweep(const GraphOptions& g, const ModelOptions& m, const CLI::App* cmd,
              std::ostream& out, std::ostream& err) {
  if (m.dims.empty()) throw ConfigError("dims: list is empty");
  const TemporalGraph graph = load_graph(g, err);
  std::vector<MetricsReport> all;
  for (std::size_t d : m.dims) {
    if (d < 1) throw ConfigError("dims: every dimension must be >= 1");
    auto reports = run_matrix(graph, m, g, d, err);
    for (auto& r : reports) all.push_back(std::move(r));
  }
  const fs::path dir(m.out);
  std::ostringstream csv, summary;
  write_metrics_csv(csv, all);
  write_summary_table(summary, all);
  write_file_atomic(dir / "sweep.csv", csv.str());
  write_file_atomic(dir / "summary.txt", summary.str());
  write_file_atomic(dir / "run-manifest.txt", manifest_text("sweep-dim", cmd, &m));
  out << summary.str();
  return 0;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Normalizes a config value to command-line form: strips quotes and list
// brackets so that manifests can be replayed as config files.
std::string config_value(std::string v) {
  v = trim(v);
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
  if (v.size() >= 2 && (v.front() == '[' || v.front() == '{') && (v.back() == ']' || v.back() == '}'))
    v = v.substr(1, v.size() - 2);
  std::string out;
  for (char c : v) {
    if (c == '"' || c == '\'') continue;
    if (c == ' ' && !out.empty() && out.back() == ',') continue;
    out += c;
  }
  return out;
}

// Splices `key=value` lines of any --config file into the argument list right
// after the subcommand. Keys also given as flags are dropped so flags win.
std::vector<std::string> expand_config(std::span<const std::string> args) {
  std::vector<std::string> rest;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("config: missing file name");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty() || rest.size() < 2) return rest;

  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::set<std::string> given;
  for (std::size_t i = 2; i < rest.size(); ++i) {
    if (rest[i].rfind("--", 0) == 0) given.insert(rest[i].substr(2, rest[i].find('=') - 2));
  }
  std::vector<std::string> injected;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';' || t[0] == '[') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: line " + std::to_string(lineno) + " is not key=value");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = config_value(t.substr(eq + 1));
    if (given.count(key)) continue;
    // Empty values stand for "no value" in manifests.
    if (value.empty()) continue;
    injected.push_back("--" + key + "=" + value);
  }
  rest.insert(rest.begin() + 2, injected.begin(), injected.end());
  return rest;
}

}  // namespace

int run(std::span<const std::string> args_in, std::ostream& out, std::ostream& err) {
  std::span<const std::string> args = args_in;
  CLI::App app{"Dynamic network embedding toolkit: temporal smoothing models and link prediction"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  GraphOptions graph_opts;
  ModelOptions model_opts;
  std::string ingest_out;
  std::string embed_model = "static";
  SbmParams sbm;
  std::string synth_out;

  auto* ingest = app.add_subcommand("ingest", "Parse an edge list and print snapshot statistics");
  add_graph_options(ingest, graph_opts);
  ingest->add_option("--out", ingest_out, "Also write the statistics to this file");

  auto* synth = app.add_subcommand("synth", "Generate a drifting stochastic-block-model edge list");
  synth->add_option("--nodes", sbm.nodes, "Vertices")->check(CLI::PositiveNumber);
  synth->add_option("--communities", sbm.communities, "Communities")->check(CLI::PositiveNumber);
  synth->add_option("--snapshots", sbm.snapshots, "Snapshots to generate");
  synth->add_option("--p-in", sbm.p_in, "Within-community edge probability");
  synth->add_option("--p-out", sbm.p_out, "Between-community edge probability");
  synth->add_option("--churn", sbm.churn, "Fraction of vertices re-assigned per snapshot");
  synth->add_option("--seed", sbm.seed, "Seed");
  synth->add_option("--out", synth_out, "Output edge-list file")->required();

  auto* embed = app.add_subcommand("embed", "Write per-snapshot embeddings for one model");
  add_graph_options(embed, graph_opts);
  add_model_options(embed, model_opts, false);
  embed->get_option("--model")->description("Model: static, ret, homolt, heterlt, bcgd");

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Run the link-prediction protocol");
  add_graph_options(evaluate_cmd, graph_opts);
  add_model_options(evaluate_cmd, model_opts, false);

  auto* sweep = app.add_subcommand("sweep-dim", "Repeat the evaluation across latent dimensions");
  add_graph_options(sweep, graph_opts);
  add_model_options(sweep, model_opts, true);

  for (auto* cmd : {ingest, synth, embed, evaluate_cmd, sweep}) {
    cmd->add_option("--config", "Key-value config file; command-line flags take precedence");
  }

  std::vector<std::string> expanded;
  try {
    expanded = expand_config(args);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  args = expanded;

  // CLI11 checks required options before leftovers, which would hide a typo
  // behind "--out is required". Report unknown flags first.
  if (args.size() > 1) {
    CLI::App* cmd = nullptr;
    for (auto* c : {ingest, synth, embed, evaluate_cmd, sweep})
      if (c->get_name() == args[1]) cmd = c;
    if (cmd) {
      for (std::size_t i = 2; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) != 0 || a == "--help") continue;
        const std::string name = a.substr(0, a.find('='));
        if (cmd->get_option_no_throw(name) == nullptr) {
          err << "error: unknown option '" << name << "' for '" << cmd->get_name() << "'\n";
          return 2;
        }
      }
    }
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (ingest->parsed()) return cmd_ingest(graph_opts, ingest_out, out, err);
    if (synth->parsed()) return cmd_synth(sbm, synth_out, out);
    if (embed->parsed()) {
      if (model_opts.models.size() != 1) throw ConfigError("model: embed takes exactly one model");
      embed_model = model_opts.models.front();
      return cmd_embed(graph_opts, model_opts, embed_model, embed, out, err);
    }
    if (evaluate_cmd->parsed()) return cmd_evaluate(graph_opts, model_opts, evaluate_cmd, out, err);
    if (sweep->parsed()) return cmd_sweep(graph_opts, model_opts, sweep, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace dynemb::cli
