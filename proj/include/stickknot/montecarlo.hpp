#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stickknot/rng.hpp"
#include "stickknot/vec3.hpp"

// Seeded, worker-parallel Monte Carlo estimation of the K6/K3,3 knotting
// probabilities through two independent pipelines.
//
// Reproducibility contract: sample i draws from a generator derived purely
// from (seed, pipeline, i), so tallies are identical for any worker count and
// any scheduling. All confidence intervals are Wilson score intervals at 95%
// (z = 1.96).

namespace stickknot {

enum class Pipeline { K6Census, K33Direct, Both };

std::string pipeline_name(Pipeline p);
std::optional<Pipeline> pipeline_from_name(const std::string& s);

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  int workers = 1;
  Pipeline pipeline = Pipeline::K6Census;
  std::uint64_t cross_check_every = 0;  // 0 = off; else every m-th sample index
};

enum class StatePipeline { K6Census, K33Direct };

struct EstimatorState {
  StatePipeline pipeline = StatePipeline::K6Census;
  std::uint64_t n_accepted = 0;
  std::uint64_t n_discarded_degenerate = 0;
  std::uint64_t hopf1 = 0;  // k6 pipeline: exactly one Hopf link
  std::uint64_t hopf3 = 0;  // k6 pipeline: exactly three Hopf links
  std::uint64_t k33_knotted = 0;  // direct pipeline
  std::uint64_t cross_checks_run = 0;
  std::uint64_t cross_check_failures = 0;

  friend bool operator==(const EstimatorState&, const EstimatorState&) = default;
};

// componentwise sum; throws on pipeline mismatch
EstimatorState merge(const EstimatorState& a, const EstimatorState& b);

// Wilson score interval for k successes in n trials
std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n, double z);

inline constexpr double kWilsonZ = 1.96;  // 95%

struct Estimate {
  double value = 0, lo = 0, hi = 0;
};

struct EstimatorReport {
  RunConfig config;
  std::optional<EstimatorState> k6;
  std::optional<EstimatorState> k33;
  double wall_time_seconds = 0;

  // derived k6-census quantities (valid when k6 has accepted samples)
  Estimate p3() const;        // probability of exactly three Hopf links
  Estimate q_hat() const;     // (2 p3 + 1) / 45
  Estimate p_k6_knot() const; // = p3
  Estimate p_k33_knot_census() const;  // p3 / 10
  Estimate p_mobius_census() const;    // 1 - p3 / 10
  Estimate pair_link_rate() const;     // (1 + 2 p3) / 10
  double k6_discard_rate() const;

  // direct pipeline
  Estimate p_k33_knot_direct() const;
  Estimate p_mobius_direct() const;
  double k33_discard_rate() const;

  // |direct - census/10| in combined standard errors (requires both)
  double consistency_sigmas() const;

  std::string to_json(int indent = 2) const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

std::vector<Vec3d> sample_cube_points(SplitMix64& rng, std::size_t k);

EstimatorReport run_estimation(const RunConfig& cfg);

}  // namespace stickknot
