#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stickknot/montecarlo.hpp"
#include "stickknot/rational.hpp"

using namespace stickknot;

TEST_CASE("cube sampling is deterministic and uniform-ish") {
  SplitMix64 a(42), b(42);
  const auto p1 = sample_cube_points(a, 3);
  const auto p2 = sample_cube_points(b, 3);
  REQUIRE(p1.size() == 3);
  CHECK(p1[0] == p2[0]);
  CHECK(p1[2] == p2[2]);
  CHECK(sample_cube_points(a, 0).empty());

  SplitMix64 rng(7);
  double sx = 0, sy = 0, sz = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const Vec3d p = rng.next_cube_point();
    CHECK(p.x >= 0.0);
    CHECK(p.x < 1.0);
    sx += p.x;
    sy += p.y;
    sz += p.z;
  }
  CHECK(std::abs(sx / n - 0.5) < 0.01);
  CHECK(std::abs(sy / n - 0.5) < 0.01);
  CHECK(std::abs(sz / n - 0.5) < 0.01);
}

TEST_CASE("wilson interval") {
  const auto [lo0, hi0] = wilson_interval(0, 10, 1.96);
  CHECK(lo0 == 0.0);
  CHECK(hi0 > 0.0);

  const auto [lon, hin] = wilson_interval(10, 10, 1.96);
  CHECK(hin <= 1.0);
  CHECK(lon < 1.0);

  // closed-form evaluation for k=5, n=10, z=1.96
  const auto [lo, hi] = wilson_interval(5, 10, 1.96);
  CHECK(lo == doctest::Approx(0.236589).epsilon(1e-4));
  CHECK(hi == doctest::Approx(0.763411).epsilon(1e-4));

  CHECK_THROWS_AS(wilson_interval(5, 0, 1.96), std::invalid_argument);
  CHECK_THROWS_AS(wilson_interval(11, 10, 1.96), std::invalid_argument);
}

TEST_CASE("merge is a commutative monoid action on counters") {
  EstimatorState a;
  a.pipeline = StatePipeline::K6Census;
  a.n_accepted = 10;
  a.hopf1 = 7;
  a.hopf3 = 3;
  EstimatorState zero;
  zero.pipeline = StatePipeline::K6Census;
  CHECK(merge(a, zero) == a);
  EstimatorState b = a;
  b.n_accepted = 5;
  b.hopf1 = 4;
  b.hopf3 = 1;
  CHECK(merge(a, b) == merge(b, a));

  EstimatorState other;
  other.pipeline = StatePipeline::K33Direct;
  CHECK_THROWS_AS(merge(a, other), std::invalid_argument);
}

TEST_CASE("tallies are invariant under worker count") {
  RunConfig cfg;
  cfg.seed = 1;
  cfg.samples = 20000;
  cfg.pipeline = Pipeline::Both;
  cfg.cross_check_every = 500;

  cfg.workers = 1;
  const EstimatorReport r1 = run_estimation(cfg);
  cfg.workers = 2;
  const EstimatorReport r2 = run_estimation(cfg);
  cfg.workers = 8;
  const EstimatorReport r8 = run_estimation(cfg);

  CHECK(*r1.k6 == *r2.k6);
  CHECK(*r1.k6 == *r8.k6);
  CHECK(*r1.k33 == *r2.k33);
  CHECK(*r1.k33 == *r8.k33);
  CHECK(r1.k6->cross_checks_run > 0);
  CHECK(r1.k6->cross_check_failures == 0);
}

TEST_CASE("per-sample invariants and rough magnitudes") {
  RunConfig cfg;
  cfg.seed = 3;
  cfg.samples = 60000;
  cfg.workers = 2;
  cfg.pipeline = Pipeline::Both;
  const EstimatorReport rep = run_estimation(cfg);

  // every accepted census sample is a 1 or a 3
  CHECK(rep.k6->hopf1 + rep.k6->hopf3 == rep.k6->n_accepted);
  CHECK(rep.k6->n_accepted + rep.k6->n_discarded_degenerate == cfg.samples);

  // p3 is near 0.262, the direct knotting rate near 0.0262 (10 sigma bands)
  CHECK(rep.p3().value == doctest::Approx(0.262).epsilon(0.08));
  CHECK(rep.p_k33_knot_direct().value == doctest::Approx(0.0262).epsilon(0.45));
  CHECK(rep.consistency_sigmas() < 5.0);

  // intervals contain their point estimates
  for (const Estimate& e : {rep.p3(), rep.q_hat(), rep.p_mobius_census(),
                            rep.p_k33_knot_direct(), rep.pair_link_rate()}) {
    CHECK(e.lo <= e.value);
    CHECK(e.value <= e.hi);
    CHECK(e.lo >= 0.0);
    CHECK(e.hi <= 1.0);
  }
}

TEST_CASE("paper-formula consistency is an exact identity on the counters") {
  RunConfig cfg;
  cfg.seed = 5;
  cfg.samples = 5000;
  cfg.workers = 1;
  cfg.pipeline = Pipeline::K6Census;
  const EstimatorReport rep = run_estimation(cfg);
  const Rational k(static_cast<long long>(rep.k6->hopf3));
  const Rational n(static_cast<long long>(rep.k6->n_accepted));
  const Rational p3 = k / n;
  const Rational q = (2 * p3 + 1) / 45;
  const Rational p_k33 = p3 / 10;
  CHECK((45 * q - 1) / 20 == p_k33);  // (45q-1)/20 = p3/10 identically
}

TEST_CASE("identical invocations give byte-identical reports") {
  RunConfig cfg;
  cfg.seed = 9;
  cfg.samples = 4000;
  cfg.workers = 2;
  cfg.pipeline = Pipeline::Both;
  EstimatorReport a = run_estimation(cfg);
  EstimatorReport b = run_estimation(cfg);
  a.wall_time_seconds = 0.0;
  b.wall_time_seconds = 0.0;
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_csv_row() == b.to_csv_row());
}

TEST_CASE("run_estimation validates its config") {
  RunConfig cfg;
  cfg.seed = 1;
  cfg.samples = 0;
  CHECK_THROWS_AS(run_estimation(cfg), std::invalid_argument);
  cfg.samples = 10;
  cfg.workers = 0;
  CHECK_THROWS_AS(run_estimation(cfg), std::invalid_argument);
}
