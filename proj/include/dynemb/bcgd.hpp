#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dynemb/matrix.hpp"
#include "dynemb/tempograph.hpp"

namespace dynemb {

// Non-negative temporal matrix factorization baseline:
//   sum_{t=1..T} ||A_t - phi_t phi_t^T||_F^2
//     + lambda sum_{t=2..T} sum_u (1 - phi_t(u) . phi_{t-1}(u)),   phi_t >= 0
// optimized block by block (t = 1..T) with projected gradient steps.
struct BcgdConfig {
  double lambda = 0.1;
  std::size_t iterations = 500;     // outer passes over all blocks
  double learning_rate = 1e-2;
  std::size_t d = 64;
  std::uint64_t seed = 1;
  bool weighted = false;
  std::size_t dense_guard = kDefaultDenseGuard;
  // Halve the step (up to this many times) when a block step would increase
  // the objective; 0 disables the safeguard.
  std::size_t max_backtracks = 30;
  // Cap each block step at 1/L with L = 4 ||A_t||_2 + 12 ||phi_t||_2^2, a
  // curvature bound of the proximity term. Without it a fixed rate can zero
  // every factor of a large graph in one projected step.
  bool cap_step = true;

  void validate() const;
};

double bcgd_objective(std::span<const Snapshot> snapshots, std::span<const Matrix> phis,
                      double lambda, bool weighted = false);

// Gradient of the full objective with respect to block t.
Matrix bcgd_block_gradient(std::span<const Snapshot> snapshots, std::span<const Matrix> phis,
                           std::size_t t, double lambda, bool weighted = false);

// Starting factors: i.i.d. uniform on [0, 1/sqrt(d)] drawn from cfg.seed.
std::vector<Matrix> bcgd_initialize(std::size_t vertices, std::size_t snapshots,
                                    const BcgdConfig& cfg);

// Called after every outer pass with (pass index, current factors).
using BcgdObserver = std::function<void(std::size_t, std::span<const Matrix>)>;

std::vector<Matrix> fit_bcgd(std::span<const Snapshot> snapshots, const BcgdConfig& cfg,
                             const BcgdObserver& observer = {});
std::vector<Matrix> fit_bcgd(const TemporalGraph& g, const BcgdConfig& cfg,
                             const BcgdObserver& observer = {});

}  // namespace dynemb
