#include <cstdio>
#include <ostream>
#include <string>

#include "dynemb/linkpred.hpp"

namespace dynemb {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

void write_metrics_csv(std::ostream& os, std::span<const MetricsReport> reports, bool header) {
  if (header) os << kMetricsCsvHeader << '\n';
  for (const auto& r : reports) {
    const std::string prefix = csv_field(r.dataset) + ',' + csv_field(r.model) + ',' +
                               csv_field(r.embedder) + ',' + std::to_string(r.dim) + ',';
    for (std::size_t i = 0; i < r.repeats.size(); ++i) {
      const auto& m = r.repeats[i];
      os << prefix << i << ',' << format_real(m.auc) << ',' << format_real(m.auprc) << ','
         << format_real(m.ndcg) << ',' << csv_field(m.selected) << '\n';
    }
    const auto a = r.auc(), p = r.auprc(), n = r.ndcg();
    os << prefix << "mean," << format_real(a.mean) << ',' << format_real(p.mean) << ','
       << format_real(n.mean) << ",\n";
    os << prefix << "sd," << format_real(a.sd) << ',' << format_real(p.sd) << ','
       << format_real(n.sd) << ",\n";
  }
}

void write_summary_table(std::ostream& os, std::span<const MetricsReport> reports) {
  // Each row is compared against the Static run sharing its embedder and dim.
  auto baseline_for = [&](const MetricsReport& r) -> const MetricsReport* {
    for (const auto& b : reports) {
      if (b.model == model_name(ModelKind::StaticBaseline) && b.dim == r.dim &&
          (b.embedder == r.embedder || r.embedder == "none"))
        return &b;
    }
    return nullptr;
  };
  char line[256];
  std::snprintf(line, sizeof(line), "%-10s %-9s %5s  %-17s %-17s %-17s %s\n", "model", "embedder",
                "dim", "AUC", "AUPRC", "NDCG@P", "p(AUC vs Static)");
  os << line;
  for (const auto& r : reports) {
    const auto a = r.auc(), p = r.auprc(), n = r.ndcg();
    std::string pval = "-";
    const MetricsReport* baseline = baseline_for(r);
    if (baseline && &r != baseline) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3g",
                    welch_t_test(r.auc_values(), baseline->auc_values()));
      pval = buf;
    }
    std::snprintf(line, sizeof(line), "%-10s %-9s %5zu  %-17s %-17s %-17s %s\n", r.model.c_str(),
                  r.embedder.c_str(), r.dim, (fixed4(a.mean) + " +- " + fixed4(a.sd)).c_str(),
                  (fixed4(p.mean) + " +- " + fixed4(p.sd)).c_str(),
                  (fixed4(n.mean) + " +- " + fixed4(n.sd)).c_str(), pval.c_str());
    os << line;
  }
}

}  // namespace dynemb
