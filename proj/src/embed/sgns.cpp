#include <cmath>

#include "dynemb/embed_static.hpp"
#include "dynemb/simd/kernels.hpp"

namespace dynemb {

double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

namespace {
// log(sigmoid(x)) without overflow.
double log_sigmoid(double x) {
  return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
}
}  // namespace

double sgns_loss(std::span<const double> x, std::span<const double> context,
                 std::span<const std::span<const double>> negatives) {
  double loss = -log_sigmoid(simd::dot(x, context));
  for (const auto& n : negatives) loss -= log_sigmoid(-simd::dot(x, n));
  return loss;
}

SgnsGradient sgns_gradient(std::span<const double> x, std::span<const double> context,
                           std::span<const std::span<const double>> negatives) {
  const std::size_t d = x.size();
  SgnsGradient g;
  g.x.assign(d, 0.0);
  g.context.assign(d, 0.0);
  // d/dz [-log s(z)] = s(z) - 1 ; d/dz [-log s(-z)] = s(z)
  const double gc = sigmoid(simd::dot(x, context)) - 1.0;
  simd::axpy(gc, context, g.x);
  simd::axpy(gc, x, g.context);
  for (const auto& n : negatives) {
    const double gn = sigmoid(simd::dot(x, n));
    simd::axpy(gn, n, g.x);
    auto& out = g.negatives.emplace_back(d, 0.0);
    simd::axpy(gn, x, out);
  }
  return g;
}

void sgns_step(std::span<double> x, std::span<double> context,
               std::span<double* const> negatives, double learning_rate,
               std::span<double> scratch) {
  const std::size_t d = x.size();
  std::fill(scratch.begin(), scratch.end(), 0.0);
  auto visit = [&](std::span<double> out, double label) {
    const double g = (label - sigmoid(simd::dot(x, out))) * learning_rate;
    simd::axpy(g, out, scratch);
    simd::axpy(g, x, out);
  };
  visit(context, 1.0);
  for (double* n : negatives) visit({n, d}, 0.0);
  simd::axpy(1.0, scratch, x);
}

NoiseSampler::NoiseSampler(const Snapshot& s, double power) {
  std::vector<double> w(s.vertex_count());
  for (Vertex v = 0; v < s.vertex_count(); ++v) {
    w[v] = std::pow(static_cast<double>(s.degree(v)), power);
  }
  dist_ = std::discrete_distribution<std::uint32_t>(w.begin(), w.end());
}

}  // namespace dynemb
