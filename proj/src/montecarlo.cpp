#include "stickknot/montecarlo.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "stickknot/knots.hpp"

namespace stickknot {

namespace {

constexpr std::uint64_t kTagK6 = 0x6b36636e73757301ull;
constexpr std::uint64_t kTagK33 = 0x6b3333646972ec02ull;
constexpr std::uint64_t kBlock = 4096;

using json = nlohmann::ordered_json;

}  // namespace

std::string pipeline_name(Pipeline p) {
  switch (p) {
    case Pipeline::K6Census: return "k6";
    case Pipeline::K33Direct: return "k33";
    default: return "both";
  }
}

std::optional<Pipeline> pipeline_from_name(const std::string& s) {
  if (s == "k6") return Pipeline::K6Census;
  if (s == "k33") return Pipeline::K33Direct;
  if (s == "both") return Pipeline::Both;
  return std::nullopt;
}

EstimatorState merge(const EstimatorState& a, const EstimatorState& b) {
  if (a.pipeline != b.pipeline)
    throw std::invalid_argument("merge: estimator states from different pipelines");
  EstimatorState out = a;
  out.n_accepted += b.n_accepted;
  out.n_discarded_degenerate += b.n_discarded_degenerate;
  out.hopf1 += b.hopf1;
  out.hopf3 += b.hopf3;
  out.k33_knotted += b.k33_knotted;
  out.cross_checks_run += b.cross_checks_run;
  out.cross_check_failures += b.cross_check_failures;
  return out;
}

std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n, double z) {
  if (n == 0 || k > n) throw std::invalid_argument("wilson_interval: need 0 <= k <= n, n >= 1");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = p + z2 / (2.0 * nn);
  const double spread = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  // the exact interval lies in [0,1]; clamp away roundoff drift at the ends
  return {std::max(0.0, (center - spread) / denom), std::min(1.0, (center + spread) / denom)};
}

std::vector<Vec3d> sample_cube_points(SplitMix64& rng, std::size_t k) {
  std::vector<Vec3d> pts;
  pts.reserve(k);
  for (std::size_t i = 0; i < k; ++i) pts.push_back(rng.next_cube_point());
  return pts;
}

namespace {

Estimate wilson_estimate(std::uint64_t k, std::uint64_t n) {
  const auto [lo, hi] = wilson_interval(k, n, kWilsonZ);
  return {static_cast<double>(k) / static_cast<double>(n), lo, hi};
}

Estimate affine(const Estimate& e, double scale, double offset) {
  // monotone map x -> offset + scale*x; a negative scale flips the interval
  Estimate out{offset + scale * e.value, offset + scale * e.lo, offset + scale * e.hi};
  if (scale < 0) std::swap(out.lo, out.hi);
  return out;
}

std::array<Vec3d, 6> draw_six(SplitMix64& g) {
  std::array<Vec3d, 6> pts;
  for (auto& p : pts) p = g.next_cube_point();
  return pts;
}

// exact-arithmetic fallback when the double-precision hexagon oracle cannot
// resolve a cross-check sample
HexagonCensus exact_hexagon_census(const std::array<Vec3d, 6>& pts, SplitMix64& rng) {
  std::array<Vec3q, 6> qpts;
  for (int i = 0; i < 6; ++i) qpts[i] = to_rational(pts[i]);
  return k6_hexagon_census(qpts, rng);
}

void process_k6_sample(std::uint64_t seed, std::uint64_t i, std::uint64_t cross_every,
                       EstimatorState& st) {
  SplitMix64 g(substream_seed(seed, kTagK6, i));
  const std::array<Vec3d, 6> pts = draw_six(g);
  const HopfCensus census = hopf_census_k6(pts);
  if (census.degenerate) {
    ++st.n_discarded_degenerate;
    return;
  }
  ++st.n_accepted;
  if (census.linked_count == 3) ++st.hopf3;
  else ++st.hopf1;

  if (cross_every > 0 && i % cross_every == 0) {
    ++st.cross_checks_run;
    HexagonCensus hex = k6_hexagon_census(pts, g);
    if (hex.degenerate) hex = exact_hexagon_census(pts, g);
    if (hex.degenerate) {
      ++st.cross_check_failures;  // could not resolve even exactly
      return;
    }
    const std::size_t expected = census.linked_count == 3 ? 1 : 0;
    if (hex.knotted.size() != expected) ++st.cross_check_failures;
  }
}

void process_k33_sample(std::uint64_t seed, std::uint64_t i, EstimatorState& st) {
  SplitMix64 g(substream_seed(seed, kTagK33, i));
  const std::array<Vec3d, 6> pts = draw_six(g);
  const K33Result r = classify_linear_k33(pts, g);
  if (r.kind == K33Class::Degenerate) {
    ++st.n_discarded_degenerate;
    return;
  }
  ++st.n_accepted;
  if (r.kind == K33Class::Knotted) ++st.k33_knotted;
}

EstimatorState run_pipeline(const RunConfig& cfg, StatePipeline which) {
  EstimatorState total;
  total.pipeline = which;
  const int workers = std::max(1, cfg.workers);
  std::atomic<std::uint64_t> next_block{0};
  std::mutex merge_mutex;
  const std::uint64_t blocks = (cfg.samples + kBlock - 1) / kBlock;

  auto work = [&] {
    EstimatorState local;
    local.pipeline = which;
    for (;;) {
      const std::uint64_t b = next_block.fetch_add(1);
      if (b >= blocks) break;
      const std::uint64_t lo = b * kBlock;
      const std::uint64_t hi = std::min(cfg.samples, lo + kBlock);
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (which == StatePipeline::K6Census)
          process_k6_sample(cfg.seed, i, cfg.cross_check_every, local);
        else
          process_k33_sample(cfg.seed, i, local);
      }
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    total = merge(total, local);
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }
  return total;
}

}  // namespace

EstimatorReport run_estimation(const RunConfig& cfg) {
  if (cfg.samples == 0) throw std::invalid_argument("run_estimation: samples must be >= 1");
  if (cfg.workers < 1) throw std::invalid_argument("run_estimation: workers must be >= 1");
  EstimatorReport rep;
  rep.config = cfg;
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.pipeline == Pipeline::K6Census || cfg.pipeline == Pipeline::Both)
    rep.k6 = run_pipeline(cfg, StatePipeline::K6Census);
  if (cfg.pipeline == Pipeline::K33Direct || cfg.pipeline == Pipeline::Both)
    rep.k33 = run_pipeline(cfg, StatePipeline::K33Direct);
  const auto t1 = std::chrono::steady_clock::now();
  rep.wall_time_seconds = std::chrono::duration<double>(t1 - t0).count();
  return rep;
}

Estimate EstimatorReport::p3() const {
  return wilson_estimate(k6->hopf3, k6->n_accepted);
}
Estimate EstimatorReport::q_hat() const { return affine(p3(), 2.0 / 45.0, 1.0 / 45.0); }
Estimate EstimatorReport::p_k6_knot() const { return p3(); }
Estimate EstimatorReport::p_k33_knot_census() const { return affine(p3(), 0.1, 0.0); }
Estimate EstimatorReport::p_mobius_census() const { return affine(p3(), -0.1, 1.0); }
Estimate EstimatorReport::pair_link_rate() const { return affine(p3(), 0.2, 0.1); }
double EstimatorReport::k6_discard_rate() const {
  const double total =
      static_cast<double>(k6->n_accepted) + static_cast<double>(k6->n_discarded_degenerate);
  return total == 0 ? 0.0 : static_cast<double>(k6->n_discarded_degenerate) / total;
}

Estimate EstimatorReport::p_k33_knot_direct() const {
  return wilson_estimate(k33->k33_knotted, k33->n_accepted);
}
Estimate EstimatorReport::p_mobius_direct() const {
  return affine(p_k33_knot_direct(), -1.0, 1.0);
}
double EstimatorReport::k33_discard_rate() const {
  const double total =
      static_cast<double>(k33->n_accepted) + static_cast<double>(k33->n_discarded_degenerate);
  return total == 0 ? 0.0 : static_cast<double>(k33->n_discarded_degenerate) / total;
}

double EstimatorReport::consistency_sigmas() const {
  const double p_census = p_k33_knot_census().value;
  const double p_direct = p_k33_knot_direct().value;
  const double n6 = static_cast<double>(k6->n_accepted);
  const double n33 = static_cast<double>(k33->n_accepted);
  const double p3v = p3().value;
  const double se_census = std::sqrt(p3v * (1.0 - p3v) / n6) / 10.0;
  const double se_direct = std::sqrt(p_direct * (1.0 - p_direct) / n33);
  const double se = std::sqrt(se_census * se_census + se_direct * se_direct);
  return se == 0 ? 0.0 : std::abs(p_direct - p_census) / se;
}

namespace {

json estimate_json(const Estimate& e) {
  return json{{"value", e.value}, {"lo", e.lo}, {"hi", e.hi}};
}

}  // namespace

std::string EstimatorReport::to_json(int indent) const {
  json j;
  j["config"] = {{"seed", config.seed},
                 {"samples", config.samples},
                 {"workers", config.workers},
                 {"pipeline", pipeline_name(config.pipeline)},
                 {"cross_check_every", config.cross_check_every},
                 {"ci_level", "wilson-95"}};
  if (k6) {
    json c = {{"accepted", k6->n_accepted},
              {"discarded_degenerate", k6->n_discarded_degenerate},
              {"hopf1", k6->hopf1},
              {"hopf3", k6->hopf3},
              {"cross_checks_run", k6->cross_checks_run},
              {"cross_check_failures", k6->cross_check_failures}};
    json e = {{"p3", estimate_json(p3())},
              {"q", estimate_json(q_hat())},
              {"p_k6_knot", estimate_json(p_k6_knot())},
              {"p_k33_knot", estimate_json(p_k33_knot_census())},
              {"p_mobius", estimate_json(p_mobius_census())},
              {"pair_link_rate", estimate_json(pair_link_rate())},
              {"discard_rate", k6_discard_rate()}};
    j["k6_census"] = {{"counters", c}, {"estimates", e}};
  }
  if (k33) {
    json c = {{"accepted", k33->n_accepted},
              {"discarded_degenerate", k33->n_discarded_degenerate},
              {"knotted", k33->k33_knotted}};
    json e = {{"p_k33_knot", estimate_json(p_k33_knot_direct())},
              {"p_mobius", estimate_json(p_mobius_direct())},
              {"discard_rate", k33_discard_rate()}};
    j["k33_direct"] = {{"counters", c}, {"estimates", e}};
  }
  if (k6 && k33 && k6->n_accepted > 0 && k33->n_accepted > 0)
    j["consistency"] = {{"p_k33_census_minus_direct",
                         p_k33_knot_census().value - p_k33_knot_direct().value},
                        {"sigmas", consistency_sigmas()}};
  j["wall_time_seconds"] = wall_time_seconds;
  return j.dump(indent) + "\n";
}

std::string EstimatorReport::csv_header() {
  return "seed,samples,workers,pipeline,p3,q,p_mobius_census,p_k33_direct,"
         "k6_discards,k33_discards,cross_check_failures,wall_time_seconds";
}

std::string EstimatorReport::to_csv_row() const {
  std::ostringstream os;
  os.precision(17);
  os << config.seed << "," << config.samples << "," << config.workers << ","
     << pipeline_name(config.pipeline) << ",";
  if (k6 && k6->n_accepted > 0)
    os << p3().value << "," << q_hat().value << "," << p_mobius_census().value << ",";
  else
    os << ",,,";
  if (k33 && k33->n_accepted > 0) os << p_k33_knot_direct().value << ",";
  else os << ",";
  os << (k6 ? k6->n_discarded_degenerate : 0) << ","
     << (k33 ? k33->n_discarded_degenerate : 0) << ","
     << (k6 ? k6->cross_check_failures : 0) << "," << wall_time_seconds;
  return os.str();
}

}  // namespace stickknot
