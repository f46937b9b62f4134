#include <doctest.h>

#include "dynemb/transform.hpp"
#include "support.hpp"

using namespace dynemb;

namespace {

using Kind = SmoothingSpec::Kind;
constexpr Kind kKinds[] = {Kind::Avg, Kind::Linear, Kind::Exp, Kind::Wct};

double rel_fro(const testing::Dense& a, const testing::Dense& b) { return (a - b).norm() / b.norm(); }

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("stacking pairs consecutive snapshots row by row") {
  std::mt19937_64 rng(1);
  std::vector<Matrix> phis;
  for (int t = 0; t < 3; ++t) phis.push_back(testing::random_matrix(4, 2, rng));
  const auto [x, z] = stack_pairs(phis);
  REQUIRE(x.rows() == 8);
  REQUIRE(z.rows() == 8);
  for (std::size_t k = 0; k < 8; ++k) {
    const std::size_t t = k / 4, v = k % 4;
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(x(k, c) == phis[t](v, c));
      CHECK(z(k, c) == phis[t + 1](v, c));
    }
  }
  const auto [x2, z2] = stack_pairs(std::span(phis).first(2));
  CHECK(x2 == phis[0]);
  CHECK(z2 == phis[1]);
  CHECK_THROWS(stack_pairs(std::span(phis).first(1)));
  phis.push_back(Matrix(4, 3));
  CHECK_THROWS(stack_pairs(phis));
}

TEST_CASE("identical snapshots give the identity map") {
  std::mt19937_64 rng(2);
  const Matrix x = testing::random_matrix(50, 6, rng);
  const auto r = fit_least_squares(x, x, GdConfig{});
  CHECK(max_abs_diff(r.w, Matrix::identity(6)) < 1e-9);
  CHECK(transform_objective(x, x, r.w) < 1e-8);
  CHECK(max_abs_diff(fit_pairwise(x, x, GdConfig{}), Matrix::identity(6)) < 1e-9);
}

TEST_CASE("a doubled snapshot gives twice the identity") {
  std::mt19937_64 rng(3);
  const Matrix x = testing::random_matrix(60, 5, rng);
  const Matrix w = fit_pairwise(x, 2.0 * x, GdConfig{});
  CHECK(max_abs_diff(w, 2.0 * Matrix::identity(5)) < 1e-3);
}

TEST_CASE("pairwise fit is the homogeneous fit on two snapshots") {
  std::mt19937_64 rng(4);
  const Matrix a = testing::random_matrix(40, 4, rng), b = testing::random_matrix(40, 4, rng);
  const std::vector<Matrix> two{a, b};
  CHECK(fit_pairwise(a, b, GdConfig{}) == fit_homogeneous(two, GdConfig{}));
}

TEST_CASE("planted map is recovered") {
  std::mt19937_64 rng(5);
  const Matrix phi1 = testing::random_matrix(100, 8, rng);
  const Matrix a = testing::random_matrix(8, 8, rng);
  const std::vector<Matrix> clean{phi1, matmul(phi1, a)};
  const Matrix w = fit_homogeneous(clean, GdConfig{});
  CHECK(rel_fro(testing::to_dense(w), testing::to_dense(a)) < 1e-3);
  CHECK(rel_fro(testing::to_dense(w), testing::least_squares(clean[0], clean[1])) < 1e-3);

  Matrix noisy = matmul(phi1, a);
  noisy += testing::random_matrix(100, 8, rng, 1e-3);
  const std::vector<Matrix> pair{phi1, noisy};
  CHECK(rel_fro(testing::to_dense(fit_homogeneous(pair, GdConfig{})), testing::to_dense(a)) < 0.05);
}

TEST_CASE("objective never increases along the default descent") {
  std::mt19937_64 rng(6);
  const Matrix phi1 = testing::random_matrix(100, 8, rng);
  const Matrix z = matmul(phi1, testing::random_matrix(8, 8, rng));
  GdConfig cfg;
  cfg.record_history = true;
  const auto r = fit_least_squares(phi1, z, cfg);
  REQUIRE(r.objective.size() > 10);
  for (std::size_t i = 1; i < r.objective.size(); ++i) CHECK(r.objective[i] <= r.objective[i - 1]);
  CHECK(r.objective.front() == doctest::Approx(transform_objective(phi1, z, Matrix::identity(8))));
}

TEST_CASE("pairwise residual reaches the least-squares optimum up to d = 32") {
  std::mt19937_64 rng(7);
  for (std::size_t d : {4, 16, 32}) {
    const Matrix x = testing::random_matrix(100, d, rng), z = testing::random_matrix(100, d, rng);
    const Matrix w = fit_pairwise(x, z, GdConfig{});
    const double best = (testing::to_dense(x) * testing::least_squares(x, z) - testing::to_dense(z)).norm();
    const double got = std::sqrt(transform_objective(x, z, w));
    CAPTURE(d);
    CHECK((got - best) / best < 1e-3);
  }
}

TEST_CASE("gradient matches central differences") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix x = testing::random_matrix(12, 4, rng), z = testing::random_matrix(12, 4, rng);
    Matrix w = testing::random_matrix(4, 4, rng);
    const Matrix g = transform_gradient(x, z, w);
    double diff = 0, norm = 0;
    for (std::size_t i = 0; i < 16; ++i) {
      const double keep = w.values()[i], h = 1e-5;
      w.values()[i] = keep + h;
      const double up = transform_objective(x, z, w);
      w.values()[i] = keep - h;
      const double down = transform_objective(x, z, w);
      w.values()[i] = keep;
      const double fd = (up - down) / (2 * h);
      diff += (fd - g.values()[i]) * (fd - g.values()[i]);
      norm += g.values()[i] * g.values()[i];
    }
    CHECK(std::sqrt(diff / norm) < 1e-5);
  }
}

TEST_CASE("global-norm clipping") {
  Matrix g(2, 2);
  g(0, 0) = 3;
  g(1, 1) = 4;
  Matrix big = g;
  CHECK(clip_by_global_norm(big, 2.5) == 5.0);
  CHECK(frobenius_norm(big) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(big(0, 0) / big(1, 1) == doctest::Approx(0.75));
  Matrix small = g;
  clip_by_global_norm(small, 10.0);
  CHECK(small == g);
}

TEST_CASE("smoothing weights match the closed forms") {
  for (Kind kind : kKinds) {
    for (std::size_t T = 2; T <= 10; ++T) {
      for (double theta : {0.0, 0.3, 0.5, 0.9}) {
        SmoothingSpec s{kind, theta, false};
        const auto got = smoothing_weights(s, T - 1);
        const auto want = testing::smoothing_weights_direct(kind, T - 1, theta);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("combine hand cases") {
  std::mt19937_64 rng(9);
  const Matrix w1 = testing::random_matrix(3, 3, rng), w2 = testing::random_matrix(3, 3, rng);
  const std::vector<Matrix> ws{w1, w2};
  CHECK(max_abs_diff(combine(ws, {Kind::Wct, 0.0, false}), w1 + w2) < 1e-15);
  CHECK(max_abs_diff(combine(ws, {Kind::Linear, 0.3, false}), 0.5 * w1 + w2) < 1e-15);
  CHECK(max_abs_diff(combine(ws, {Kind::Wct, 0.5, false}), 0.5 * w1 + w2) < 1e-15);
  const std::vector<Matrix> same(4, w1);
  CHECK(max_abs_diff(combine(same, {Kind::Avg, 0.3, false}), w1) < 1e-15);
  const auto norm = smoothing_weights({Kind::Exp, 0.3, true}, 5);
  double total = 0;
  for (double v : norm) total += v;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("combine is linear in the transforms") {
  std::mt19937_64 rng(10);
  std::vector<Matrix> ws, scaled;
  for (int t = 0; t < 5; ++t) {
    ws.push_back(testing::random_matrix(4, 4, rng));
    scaled.push_back(-1.75 * ws.back());
  }
  for (Kind kind : kKinds) {
    const SmoothingSpec s{kind, 0.3, false};
    CHECK(max_abs_diff(combine(scaled, s), -1.75 * combine(ws, s)) < 1e-12);
  }
}

TEST_CASE("projection") {
  std::mt19937_64 rng(11);
  const Matrix phi = testing::random_matrix(10, 4, rng);
  CHECK(project(phi, Matrix::identity(4)) == phi);
  CHECK(project(phi, 2.0 * Matrix::identity(4)) == 2.0 * phi);
  const Matrix a = testing::random_matrix(4, 4, rng), b = testing::random_matrix(4, 4, rng);
  CHECK(max_abs_diff(project(project(phi, a), b), project(phi, matmul(a, b))) < 1e-10);
  CHECK_THROWS(project(phi, Matrix::identity(3)));
}

TEST_CASE("fits are bit-identical across runs") {
  std::mt19937_64 rng(12);
  std::vector<Matrix> phis;
  for (int t = 0; t < 4; ++t) phis.push_back(testing::random_matrix(30, 5, rng));
  CHECK(fit_homogeneous(phis, GdConfig{}) == fit_homogeneous(phis, GdConfig{}));
  const SmoothingSpec s{Kind::Wct, 0.3, false};
  CHECK(fit_heterogeneous(phis, GdConfig{}, s) == fit_heterogeneous(phis, GdConfig{}, s));
}

TEST_CASE("configuration checks") {
  CHECK_THROWS(SmoothingSpec{Kind::Wct, 1.0, false}.validate());
  CHECK_THROWS(SmoothingSpec{Kind::Wct, -0.1, false}.validate());
  GdConfig g;
  g.iterations = 0;
  CHECK_THROWS(g.validate());
  CHECK(parse_smoothing("wct") == Kind::Wct);
  CHECK_THROWS(parse_smoothing("median"));
}

}
