#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dynemb/matrix.hpp"
#include "dynemb/tempograph.hpp"

namespace dynemb {

// Local temporal smoothness by retrofitting. Vertex v's proximity weights are
// beta_{v,u} = 1/degree(v) over its neighbors in the current snapshot (or
// count/sum-of-counts when weighted), so they sum to one and every update is a
// convex combination of the prior vector and the neighbor centroid.
struct RetrofitConfig {
  double alpha = 1.0;          // prior-matching strength, shared by all vertices
  std::size_t max_sweeps = 20;
  double tolerance = 1e-6;     // stop once the max-norm change of a sweep drops below
  bool weighted = false;

  void validate() const;
};

// sum_v alpha ||phi(v) - prior(v)||^2
//   + sum_v sum_{u in N(v)} beta_{v,u} ||phi(u) - phi(v)||^2
// Each undirected edge contributes one term per endpoint.
double retrofit_objective(const Matrix& phi, const Matrix& prior, const Snapshot& s,
                          const RetrofitConfig& cfg);

// One Jacobi sweep: every vertex is updated from the pre-sweep phi.
//   phi'(v) = (alpha prior(v) + sum_u beta_{v,u} phi(u)) / (alpha + sum_u beta_{v,u})
// Degree-0 vertices take their prior.
Matrix retrofit_sweep(const Matrix& phi, const Matrix& prior, const Snapshot& s,
                      const RetrofitConfig& cfg);

struct RetrofitResult {
  Matrix phi;
  std::size_t sweeps = 0;
  double last_change = 0.0;
};

// Starts from phi := prior and sweeps until the change is below tolerance or
// max_sweeps is reached.
RetrofitResult retrofit_detailed(const Matrix& prior, const Snapshot& s,
                                 const RetrofitConfig& cfg);
Matrix retrofit(const Matrix& prior, const Snapshot& s, const RetrofitConfig& cfg);

// Chains retrofit over the given snapshots: phi_{k+1} = retrofit(phi_k, G_{k+1}).
// Returns one matrix per snapshot.
std::vector<Matrix> retrofit_sequence(const Matrix& phi_first,
                                      std::span<const Snapshot> snapshots,
                                      const RetrofitConfig& cfg);

}  // namespace dynemb
