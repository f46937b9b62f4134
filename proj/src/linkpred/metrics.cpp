#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <numeric>

#include "dynemb/errors.hpp"
#include "dynemb/linkpred.hpp"

namespace dynemb {
namespace {

struct ClassCounts {
  std::size_t pos = 0;
  std::size_t neg = 0;
};

ClassCounts count_classes(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw ShapeError("metric: scores/labels length mismatch");
  ClassCounts c;
  for (int l : labels) {
    if (l == 1) {
      ++c.pos;
    } else if (l == 0) {
      ++c.neg;
    } else {
      throw std::invalid_argument("metric: labels must be 0 or 1");
    }
  }
  return c;
}

// Indices by descending score; equal scores keep input order.
std::vector<std::size_t> ranking(std::span<const double> scores) {
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return idx;
}

}  // namespace

double auc(std::span<const double> scores, std::span<const int> labels) {
  const auto c = count_classes(scores, labels);
  if (c.pos == 0 || c.neg == 0) throw std::invalid_argument("auc: both classes are required");

  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Mann-Whitney U with tie-averaged ranks, kept in half-units so the sum is
  // exact: 2*rank of a tie group spanning positions [i, j) is i + j + 1.
  double twice_rank_sum = 0.0;
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i + 1;
    while (j < idx.size() && scores[idx[j]] == scores[idx[i]]) ++j;
    std::size_t pos_in_group = 0;
    for (std::size_t k = i; k < j; ++k) pos_in_group += labels[idx[k]] == 1;
    twice_rank_sum += static_cast<double>(pos_in_group) * static_cast<double>(i + j + 1);
    i = j;
  }
  const double p = static_cast<double>(c.pos);
  const double u = (twice_rank_sum - p * (p + 1.0)) / 2.0;
  return u / (p * static_cast<double>(c.neg));
}

double auprc(std::span<const double> scores, std::span<const int> labels) {
  const auto c = count_classes(scores, labels);
  if (c.pos == 0) throw std::invalid_argument("auprc: no positive labels");
  const auto order = ranking(scores);
  // Step-wise sum over distinct thresholds: tied scores enter the ranking
  // together, so the result does not depend on input order.
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    std::size_t group_hits = 0;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) group_hits += labels[order[j++]] == 1;
    hits += group_hits;
    sum += static_cast<double>(group_hits) * static_cast<double>(hits) / static_cast<double>(j);
    i = j;
  }
  return sum / static_cast<double>(c.pos);
}

double ndcg_at_p(std::span<const double> scores, std::span<const int> labels, std::size_t p) {
  const auto c = count_classes(scores, labels);
  if (c.pos == 0) throw std::invalid_argument("ndcg: no positive labels");
  if (p < 1) throw std::invalid_argument("ndcg: p must be >= 1");
  const auto order = ranking(scores);
  double dcg = 0.0;
  for (std::size_t i = 0; i < std::min(p, order.size()); ++i) {
    if (labels[order[i]] == 1) dcg += 1.0 / std::log2(static_cast<double>(i + 2));
  }
  double ideal = 0.0;
  for (std::size_t i = 0; i < std::min(p, c.pos); ++i) {
    ideal += 1.0 / std::log2(static_cast<double>(i + 2));
  }
  return dcg / ideal;
}

double welch_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) return 1.0;
  auto moments = [](std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return std::pair{mean, ss / (n - 1.0)};
  };
  const auto [ma, va] = moments(a);
  const auto [mb, vb] = moments(b);
  const double sa = va / static_cast<double>(a.size());
  const double sb = vb / static_cast<double>(b.size());
  if (sa + sb <= 0.0) return ma == mb ? 1.0 : 0.0;
  const double t = (ma - mb) / std::sqrt(sa + sb);
  const double df = (sa + sb) * (sa + sb) /
                    (sa * sa / static_cast<double>(a.size() - 1) +
                     sb * sb / static_cast<double>(b.size() - 1));
  const boost::math::students_t dist(df);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

}  // namespace dynemb
