#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphscan/detectors.hpp"
#include "graphscan/parallel.hpp"
#include "graphscan/random.hpp"
#include "graphscan/sampling.hpp"
#include "graphscan/scenario.hpp"

namespace graphscan {

/// A fresh detector instance as a step closure: feed snapshots, get the
/// alarm flag back.
using Stepper = std::function<bool(const GraphSnapshot&)>;
using StepperFactory = std::function<Stepper()>;

/// Which detector an experiment runs. The threshold is supplied separately
/// so one spec serves a whole threshold grid or a calibration search.
struct DetectorSpec {
  enum class Kind { kCusum, kGlr };
  Kind kind = Kind::kGlr;
  std::string label;
  GlrWindowConfig window;  // GLR only; window.threshold is ignored here
};

inline StepperFactory make_stepper_factory(const DetectorSpec& spec,
                                           const ChangeScenario& scenario,
                                           double threshold) {
  if (spec.kind == DetectorSpec::Kind::kCusum) {
    const LlrWeights weights = make_weights(scenario.p0, scenario.p1);
    return [scenario, weights, threshold]() -> Stepper {
      auto detector = std::make_shared<CusumDetector>(
          scenario.num_nodes, scenario.planted_subgraph, weights, threshold);
      return [detector](const GraphSnapshot& snapshot) {
        return detector->advance(snapshot);
      };
    };
  }
  GlrWindowConfig config = spec.window;
  config.threshold = threshold;
  return [scenario, config]() -> Stepper {
    auto detector = std::make_shared<GlrDetector>(
        scenario.num_nodes, scenario.community_size, scenario.p0,
        std::optional<ErParams>(scenario.p1), config);
    return [detector](const GraphSnapshot& snapshot) {
      return detector->advance(snapshot);
    };
  };
}

/// Mean stopping time with its standard error. Runs that hit the horizon
/// cap are censored at the cap and still counted, which biases the mean
/// downward: when censored > 0 the estimate is a lower bound.
struct RunLengthEstimate {
  double mean = 0.0;
  double se = 0.0;
  std::uint64_t replications = 0;
  std::uint64_t censored = 0;
  std::uint64_t horizon_cap = 0;

  double censored_frac() const {
    return replications == 0
               ? 0.0
               : static_cast<double>(censored) /
                     static_cast<double>(replications);
  }
  bool is_lower_bound() const { return censored > 0; }
};

namespace detail {

// Alarm flags are bytes, not vector<bool>: workers write disjoint indices
// concurrently and packed bits would race within a shared word.
inline RunLengthEstimate summarize(const std::vector<std::uint64_t>& stops,
                                   const std::vector<std::uint8_t>& alarmed,
                                   std::uint64_t horizon_cap) {
  RunLengthEstimate est;
  est.replications = stops.size();
  est.horizon_cap = horizon_cap;
  double sum = 0.0;
  for (std::size_t r = 0; r < stops.size(); ++r) {
    sum += static_cast<double>(stops[r]);
    if (!alarmed[r]) ++est.censored;
  }
  est.mean = sum / static_cast<double>(stops.size());
  if (stops.size() > 1) {
    double ss = 0.0;
    for (std::uint64_t stop : stops) {
      const double d = static_cast<double>(stop) - est.mean;
      ss += d * d;
    }
    const double var = ss / static_cast<double>(stops.size() - 1);
    est.se = std::sqrt(var / static_cast<double>(stops.size()));
  }
  return est;
}

inline void run_replications(const StepperFactory& factory,
                             const ChangeScenario& scenario,
                             std::uint64_t replications,
                             std::uint64_t horizon_cap, std::uint64_t seed,
                             unsigned workers,
                             std::vector<std::uint64_t>& stops,
                             std::vector<std::uint8_t>& alarmed) {
  stops.assign(replications, 0);
  alarmed.assign(replications, false);
  parallel_for_index(replications, workers, [&](std::uint64_t r) {
    SequenceSampler sampler(scenario, RandomSource::derived(seed, r));
    Stepper stepper = factory();
    for (std::uint64_t t = 1; t <= horizon_cap; ++t) {
      if (stepper(sampler.next())) {
        stops[r] = t;
        alarmed[r] = 1;
        return;
      }
    }
    stops[r] = horizon_cap;
  });
}

}  // namespace detail

/// Average run length: mean stopping time over independent pre-change
/// streams (the change stripped from the scenario).
inline RunLengthEstimate estimate_arl(const StepperFactory& factory,
                                      const ChangeScenario& scenario,
                                      std::uint64_t replications,
                                      std::uint64_t horizon_cap,
                                      std::uint64_t seed,
                                      unsigned workers = 0) {
  if (replications < 1 || horizon_cap < 1) {
    throw std::invalid_argument("replications and horizon must be positive");
  }
  const ChangeScenario null_scenario = scenario.as_null();
  std::vector<std::uint64_t> stops;
  std::vector<std::uint8_t> alarmed;
  detail::run_replications(factory, null_scenario, replications, horizon_cap,
                           seed, workers, stops, alarmed);
  return detail::summarize(stops, alarmed, horizon_cap);
}

/// Detection-delay surrogate: mean stopping time over streams with the
/// change active from the very first sample.
inline RunLengthEstimate estimate_edd(const StepperFactory& factory,
                                      const ChangeScenario& scenario,
                                      std::uint64_t replications,
                                      std::uint64_t seed, unsigned workers = 0,
                                      std::uint64_t horizon_cap = 1000000) {
  if (replications < 1) {
    throw std::invalid_argument("replications must be positive");
  }
  const ChangeScenario changed = scenario.with_immediate_change();
  std::vector<std::uint64_t> stops;
  std::vector<std::uint8_t> alarmed;
  detail::run_replications(factory, changed, replications, horizon_cap, seed,
                           workers, stops, alarmed);
  return detail::summarize(stops, alarmed, horizon_cap);
}

inline double log_binomial(std::uint32_t N, std::uint32_t n) {
  if (n > N) throw std::invalid_argument("n must not exceed N");
  return std::lgamma(static_cast<double>(N) + 1.0) -
         std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(N - n) + 1.0);
}

/// Threshold, per-window false-alarm target and ARL target bundled together.
struct CalibrationResult {
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double b_analytic = std::numeric_limits<double>::quiet_NaN();
  double b_empirical = std::numeric_limits<double>::quiet_NaN();
  double target_arl = std::numeric_limits<double>::quiet_NaN();
  std::optional<RunLengthEstimate> achieved_arl;
  // Bernoulli log-likelihood ratios live on a lattice, so the true ARL is a
  // step function of the threshold and can jump clean across a narrow
  // tolerance band. When that happens the search returns the achievable
  // point closest to the target and clears this flag.
  bool tolerance_met = true;
};

/// b = log(2 * m_alpha * C(N,n) / alpha), evaluated through log-gamma so
/// huge candidate families cannot overflow.
inline CalibrationResult calibrate_analytic(double alpha,
                                            std::uint32_t m_alpha,
                                            std::uint32_t N, std::uint32_t n) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (m_alpha < 1) throw std::invalid_argument("m_alpha must be positive");
  CalibrationResult result;
  result.alpha = alpha;
  result.b_analytic = std::log(2.0 * static_cast<double>(m_alpha)) +
                      log_binomial(N, n) - std::log(alpha);
  return result;
}

/// Window length for experiments targeting ARL gamma: four times the
/// information-rate scale of the analytic threshold at that target, so the
/// window comfortably covers the detection transient while staying fixed
/// throughout a calibration search.
inline std::uint32_t experiment_max_lookback(double gamma, std::uint32_t N,
                                             std::uint32_t n,
                                             double information) {
  if (!(gamma >= 1.0)) throw std::invalid_argument("gamma must be >= 1");
  if (!(information > 0.0)) {
    throw std::invalid_argument("information must be positive");
  }
  const double b = std::log(2.0) + log_binomial(N, n) + std::log(gamma);
  return static_cast<std::uint32_t>(std::ceil(4.0 * b / information));
}

struct CalibrationOptions {
  std::uint64_t replications = 400;
  std::uint64_t horizon_cap = 0;  // 0 = 50 * gamma
  unsigned workers = 0;
  std::uint32_t max_iterations = 60;
  double b_floor = 1e-9;
  double b_ceiling = 500.0;
  double b_resolution = 0.005;  // stop once the bracket is this narrow
};

struct BracketFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bisection on the threshold against a Monte Carlo ARL estimate with
/// common random numbers: every evaluation reuses the same seed, so the
/// estimate is exactly nondecreasing in b and bisection is sound.
inline CalibrationResult calibrate_empirical(
    const std::function<StepperFactory(double)>& family,
    const ChangeScenario& scenario, double gamma, double rel_tol,
    std::uint64_t seed, const CalibrationOptions& options = {}) {
  if (!(gamma >= 1.0)) throw std::invalid_argument("gamma must be >= 1");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  const std::uint64_t cap =
      options.horizon_cap > 0
          ? options.horizon_cap
          : static_cast<std::uint64_t>(std::ceil(50.0 * gamma));

  const auto arl_at = [&](double b) {
    return estimate_arl(family(b), scenario, options.replications, cap, seed,
                        options.workers);
  };
  const auto within = [&](const RunLengthEstimate& est) {
    return std::abs(est.mean - gamma) <= rel_tol * gamma;
  };

  CalibrationResult result;
  result.target_arl = gamma;
  const auto finish = [&](double b, const RunLengthEstimate& est) {
    result.b_empirical = b;
    result.achieved_arl = est;
    result.tolerance_met = within(est);
    return result;
  };

  // Establish a bracket: ARL(lo) < gamma <= ARL(hi).
  RunLengthEstimate lo_est = arl_at(options.b_floor);
  if (lo_est.mean > gamma * (1.0 + rel_tol)) {
    throw BracketFailure(
        "target ARL below the minimum admissible stopping time");
  }
  if (within(lo_est)) return finish(options.b_floor, lo_est);
  double lo = options.b_floor;
  double hi = std::log(std::max(gamma, 2.0));
  RunLengthEstimate hi_est = arl_at(hi);
  while (hi_est.mean < gamma && hi < options.b_ceiling) {
    if (within(hi_est)) return finish(hi, hi_est);
    lo = hi;
    lo_est = hi_est;
    hi += 1.5;
    hi_est = arl_at(hi);
  }
  if (hi_est.mean < gamma * (1.0 - rel_tol)) {
    throw BracketFailure("target ARL unreachable below the horizon cap");
  }
  if (within(hi_est)) return finish(hi, hi_est);

  for (std::uint32_t iter = 0;
       iter < options.max_iterations && hi - lo > options.b_resolution;
       ++iter) {
    const double mid = 0.5 * (lo + hi);
    const RunLengthEstimate mid_est = arl_at(mid);
    if (within(mid_est)) return finish(mid, mid_est);
    if (mid_est.mean < gamma) {
      lo = mid;
      lo_est = mid_est;
    } else {
      hi = mid;
      hi_est = mid_est;
    }
  }
  // The step function jumped across the band: report the nearer stair.
  if (std::abs(lo_est.mean - gamma) <= std::abs(hi_est.mean - gamma)) {
    return finish(lo, lo_est);
  }
  return finish(hi, hi_est);
}

struct FalseAlarmCheck {
  double empirical = 0.0;
  double se = 0.0;
  double bound = 0.0;
  bool pass = false;
  bool vacuous = false;  // bound above 1 holds trivially
  std::uint64_t replications = 0;
};

/// Empirical P(tau <= T < tau + m_alpha) on pre-change streams, against the
/// change-of-measure bound 2 * m_alpha * exp(-b) * C(N,n).
inline FalseAlarmCheck verify_false_alarm_bound(
    const StepperFactory& factory, const ChangeScenario& scenario,
    std::uint64_t tau, std::uint32_t m_alpha, double b,
    std::uint64_t replications, std::uint64_t seed, unsigned workers = 0) {
  if (tau < 1) throw std::invalid_argument("tau is 1-based");
  const ChangeScenario null_scenario = scenario.as_null();
  const std::uint64_t horizon = tau + m_alpha - 1;
  std::vector<std::uint64_t> stops;
  std::vector<std::uint8_t> alarmed;
  detail::run_replications(factory, null_scenario, replications, horizon,
                           seed, workers, stops, alarmed);
  std::uint64_t hits = 0;
  for (std::size_t r = 0; r < stops.size(); ++r) {
    if (alarmed[r] && stops[r] >= tau && stops[r] < tau + m_alpha) ++hits;
  }
  FalseAlarmCheck check;
  check.replications = replications;
  check.empirical =
      static_cast<double>(hits) / static_cast<double>(replications);
  check.se = std::sqrt(check.empirical * (1.0 - check.empirical) /
                       static_cast<double>(replications));
  const double log_bound = std::log(2.0 * static_cast<double>(m_alpha)) - b +
                           log_binomial(scenario.num_nodes,
                                        scenario.community_size);
  check.bound = std::exp(std::min(log_bound, 700.0));
  check.vacuous = check.bound > 1.0;
  check.pass = check.empirical <= check.bound + 3.0 * check.se;
  return check;
}

/// One threshold on one detector: ARL and EDD side by side.
struct TradeoffPoint {
  std::string detector;
  double threshold = 0.0;
  RunLengthEstimate arl;
  RunLengthEstimate edd;
};

inline std::vector<TradeoffPoint> tradeoff_curve(
    const std::vector<DetectorSpec>& specs, const ChangeScenario& scenario,
    const std::vector<double>& thresholds, std::uint64_t arl_replications,
    std::uint64_t edd_replications, std::uint64_t arl_horizon_cap,
    std::uint64_t seed, unsigned workers = 0) {
  if (thresholds.empty()) {
    throw std::invalid_argument("threshold grid must be nonempty");
  }
  std::vector<TradeoffPoint> points;
  for (const DetectorSpec& spec : specs) {
    for (double b : thresholds) {
      const StepperFactory factory =
          make_stepper_factory(spec, scenario, b);
      TradeoffPoint point;
      point.detector = spec.label;
      point.threshold = b;
      // Common random numbers across thresholds: same seed per curve.
      point.arl = estimate_arl(factory, scenario, arl_replications,
                               arl_horizon_cap, seed, workers);
      point.edd = estimate_edd(factory, scenario, edd_replications,
                               seed + 1, workers);
      points.push_back(std::move(point));
    }
  }
  return points;
}

/// Six significant digits, matching the CSV contract.
inline std::string format_g6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return std::string(buf);
}

inline void write_tradeoff_csv(std::ostream& out,
                               const std::vector<TradeoffPoint>& points) {
  out << "detector,b,arl,arl_se,edd,edd_se,reps_arl,reps_edd,censored_frac\n";
  for (const TradeoffPoint& p : points) {
    out << p.detector << ',' << format_g6(p.threshold) << ','
        << format_g6(p.arl.mean) << ',' << format_g6(p.arl.se) << ','
        << format_g6(p.edd.mean) << ',' << format_g6(p.edd.se) << ','
        << p.arl.replications << ',' << p.edd.replications << ','
        << format_g6(p.arl.censored_frac()) << '\n';
  }
}

/// Least-squares slope of y against x.
inline double fitted_slope(const std::vector<double>& x,
                           const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("need at least two points");
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace graphscan
