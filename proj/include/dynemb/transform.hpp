#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dynemb/matrix.hpp"

namespace dynemb {

// Global temporal smoothness: a d x d map W with phi_t W ~ phi_{t+1}
// (row-vector convention, one row per vertex).

struct GdConfig {
  std::size_t iterations = 10000;
  double learning_rate = 1e-3;
  double clip_ratio = 5.0;        // global-norm gradient clipping
  double tolerance = 1e-9;        // early exit once ||grad||_F falls below
  // Cap the step at 1/L, L = 2 lambda_max(X^T X), so the iteration stays
  // convergent on large-scale inputs. Inactive when learning_rate <= 1/L.
  bool cap_step = true;
  bool record_history = false;
  std::uint64_t seed = 0;         // unused by the deterministic solver

  void validate() const;
};

struct SmoothingSpec {
  enum class Kind { Avg, Linear, Exp, Wct };
  Kind kind = Kind::Wct;
  double theta = 0.3;             // wct decay, in [0,1)
  bool renormalize = false;       // divide weights by their sum

  void validate() const;
};

std::string_view smoothing_name(SmoothingSpec::Kind k);
SmoothingSpec::Kind parse_smoothing(std::string_view name);

// X = [phi_1; ...; phi_{T-1}], Z = [phi_2; ...; phi_T].
std::pair<Matrix, Matrix> stack_pairs(std::span<const Matrix> phis);

// ||X W - Z||_F^2 and its gradient 2 X^T (X W - Z).
double transform_objective(const Matrix& x, const Matrix& z, const Matrix& w);
Matrix transform_gradient(const Matrix& x, const Matrix& z, const Matrix& w);

// Scales g in place so that ||g||_F <= clip_ratio; returns the pre-clip norm.
double clip_by_global_norm(Matrix& g, double clip_ratio);

struct FitResult {
  Matrix w;
  std::size_t iterations = 0;
  double step = 0.0;                   // learning rate actually used
  std::vector<double> objective;       // per iteration, when recorded
};

// Full-batch gradient descent from W = I on ||X W - Z||_F^2.
FitResult fit_least_squares(const Matrix& x, const Matrix& z, const GdConfig& cfg);

Matrix fit_homogeneous(std::span<const Matrix> phis, const GdConfig& cfg);
Matrix fit_pairwise(const Matrix& phi_t, const Matrix& phi_next, const GdConfig& cfg);
// W_t for every consecutive pair, t = 1..T-1.
std::vector<Matrix> fit_pairwise_all(std::span<const Matrix> phis, const GdConfig& cfg);
Matrix fit_heterogeneous(std::span<const Matrix> phis, const GdConfig& cfg,
                         const SmoothingSpec& smoothing);

// Weight of W_t for t = 1..count (count = T-1):
//   avg 1/count, linear t/count, exp e^{t/count}, wct (1-theta)^{count-t}
std::vector<double> smoothing_weights(const SmoothingSpec& smoothing, std::size_t count);
Matrix combine(std::span<const Matrix> ws, const SmoothingSpec& smoothing);

// phi W
Matrix project(const Matrix& phi, const Matrix& w);

}  // namespace dynemb
