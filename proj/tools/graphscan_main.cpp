// graphscan: sequential detection of a local distribution change in a stream
// of random graphs. Subcommands cover simulation, streaming detection,
// threshold calibration, ARL/EDD tradeoff evaluation and subgraph
// localization; see --help on each.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphscan/detectors.hpp"
#include "graphscan/edge_counts.hpp"
#include "graphscan/evaluation.hpp"
#include "graphscan/likelihood.hpp"
#include "graphscan/run_config.hpp"
#include "graphscan/sampling.hpp"
#include "graphscan/scenario.hpp"
#include "graphscan/snapshot_io.hpp"
#include "graphscan/subgraph_scan.hpp"

namespace {

using namespace graphscan;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitAlarm = 2;

std::string format_stat(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return std::string(buf);
}

std::string join_indices(const std::vector<std::uint32_t>& indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(indices[i]);
  }
  return out;
}

std::vector<std::uint32_t> parse_index_list(const std::string& raw) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (out.empty()) throw std::invalid_argument("empty index list");
  return out;
}

std::uint64_t parse_tau(const std::string& raw) {
  if (raw == "inf" || raw == "Inf" || raw == "INF") return kTauInfinity;
  return std::stoull(raw);
}

// Options shared by every subcommand: a config file plus flag overrides.
// Flags win over file values.
struct CommonOpts {
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;

  // Scenario.
  std::optional<std::uint32_t> num_nodes;
  std::optional<std::uint32_t> community_size;
  std::optional<std::string> planted;
  std::optional<double> p0;
  std::optional<double> p1;
  std::optional<std::string> tau;

  KeyValueConfig file;

  void load_file() {
    if (!config_path) return;
    std::ifstream in(*config_path);
    if (!in) {
      throw ConfigError("cannot open config file `" + *config_path + "`");
    }
    file = KeyValueConfig::parse(in, *config_path);
  }

  // File keys are consumed even when a flag overrides them, so a config
  // entry never turns into a spurious unknown-key error.
  std::uint64_t resolve_seed() {
    const auto from_file = file.get_u64("seed");
    if (seed) return *seed;
    return from_file.value_or(1);
  }

  std::optional<std::string> resolve_out() {
    auto from_file = file.get_string("out");
    if (out) return out;
    return from_file;
  }

  ChangeScenario resolve_scenario() {
    const auto nodes_file = file.get_u32("num_nodes");
    const std::optional<std::uint32_t> n_nodes =
        num_nodes ? num_nodes : nodes_file;
    if (!n_nodes) throw ConfigError("num_nodes is required");

    auto planted_file = file.get_u32_list("planted_subgraph");
    std::optional<std::vector<std::uint32_t>> planted_list;
    if (planted) {
      planted_list = parse_index_list(*planted);
    } else {
      planted_list = planted_file;
    }
    const auto size_file = file.get_u32("community_size");
    std::optional<std::uint32_t> n =
        community_size ? community_size : size_file;
    if (!planted_list) {
      if (!n) {
        throw ConfigError(
            "community_size or planted_subgraph is required");
      }
      // Default planted set: the n lowest node indices.
      planted_list = std::vector<std::uint32_t>(*n);
      for (std::uint32_t i = 0; i < *n; ++i) (*planted_list)[i] = i;
    }
    if (n && *n != planted_list->size()) {
      throw ConfigError(
          "community_size disagrees with planted_subgraph length");
    }

    const auto p0_file = file.get_double("p0");
    const auto p1_file = file.get_double("p1");
    const std::optional<double> p0v = p0 ? p0 : p0_file;
    const std::optional<double> p1v = p1 ? p1 : p1_file;
    if (!p0v || !p1v) throw ConfigError("p0 and p1 are required");

    const auto tau_file = file.get_change_point("change_point");
    std::uint64_t tau_value = kTauInfinity;
    if (tau) {
      tau_value = parse_tau(*tau);
    } else if (tau_file) {
      tau_value = *tau_file;
    }

    try {
      return ChangeScenario(*n_nodes, std::move(*planted_list),
                            ErParams(*p0v), ErParams(*p1v), tau_value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("invalid scenario: ") + e.what());
    }
  }
};

void add_common_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path,
                  "flat key = value config file; flags override it");
  cmd->add_option("--seed", opts.seed, "master RNG seed (default 1)");
  cmd->add_option("--out", opts.out, "output path (default: stdout)");
  cmd->add_option("--num-nodes", opts.num_nodes, "graph size N");
  cmd->add_option("--community-size", opts.community_size,
                  "changed subgraph size n");
  cmd->add_option("--planted", opts.planted,
                  "comma-separated planted subgraph indices");
  cmd->add_option("--p0", opts.p0, "pre-change edge probability");
  cmd->add_option("--p1", opts.p1, "post-change edge probability");
  cmd->add_option("--tau", opts.tau, "change point (positive integer or inf)");
}

// Detector-facing options for detect/calibrate/evaluate.
struct DetectorOpts {
  std::optional<std::string> detector;
  std::optional<std::uint32_t> min_lookback;
  std::optional<std::uint32_t> max_lookback;
  std::optional<double> threshold;
  std::optional<double> alpha;
  std::optional<double> target_arl;
  std::optional<std::string> scan_mode;
  std::optional<double> mle_clamp;
  std::optional<bool> connected_only;
  std::optional<std::uint64_t> enumeration_cap;
  std::optional<std::uint64_t> arl_replications;
  std::optional<std::uint64_t> edd_replications;
  std::optional<std::uint64_t> cal_replications;
  std::optional<std::uint64_t> horizon_cap;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> workers;

  std::string resolve_detector(KeyValueConfig& file) {
    const auto from_file = file.get_string("detector");
    const std::string name =
        detector ? *detector : from_file.value_or("glr");
    if (name != "cusum" && name != "glr" && name != "glr-mle") {
      throw ConfigError("detector must be cusum, glr or glr-mle, got `" +
                        name + "`");
    }
    return name;
  }

  ScanMode resolve_scan_mode(KeyValueConfig& file) {
    const auto from_file = file.get_string("scan_mode");
    const std::string mode =
        scan_mode ? *scan_mode : from_file.value_or("exhaustive");
    if (mode == "exhaustive") return ScanMode::kExhaustive;
    if (mode == "greedy") return ScanMode::kGreedy;
    throw ConfigError("scan_mode must be exhaustive or greedy, got `" + mode +
                      "`");
  }

  // Exactly one of {threshold, alpha, target_arl}; which ones a command
  // accepts differs, so the caller names the allowed set.
  enum class Goal { kThreshold, kAlpha, kTargetArl };
  Goal resolve_goal(KeyValueConfig& file, bool allow_threshold) {
    const auto b_file = file.get_double("threshold");
    const auto a_file = file.get_double("alpha");
    const auto g_file = file.get_double("target_arl");
    const std::optional<double> b = threshold ? threshold : b_file;
    const std::optional<double> a = alpha ? alpha : a_file;
    const std::optional<double> g = target_arl ? target_arl : g_file;
    threshold = b;
    alpha = a;
    target_arl = g;
    const int supplied =
        (b.has_value() ? 1 : 0) + (a.has_value() ? 1 : 0) +
        (g.has_value() ? 1 : 0);
    if (supplied != 1) {
      throw ConfigError(
          "exactly one of threshold, alpha, target_arl must be supplied");
    }
    if (b.has_value()) {
      if (!allow_threshold) {
        throw ConfigError("this command calibrates; give alpha or target_arl");
      }
      return Goal::kThreshold;
    }
    return a.has_value() ? Goal::kAlpha : Goal::kTargetArl;
  }

  GlrWindowConfig resolve_window(KeyValueConfig& file, double placeholder_b,
                                 const std::string& detector_name,
                                 const ChangeScenario& scenario) {
    GlrWindowConfig window;
    const auto min_file = file.get_u32("min_lookback");
    const auto max_file = file.get_u32("max_lookback");
    window.min_lookback =
        min_lookback ? *min_lookback : min_file.value_or(1);
    std::optional<std::uint32_t> max_lb =
        max_lookback ? max_lookback : max_file;
    if (!max_lb) {
      if (target_arl) {
        const double info = change_information(scenario.community_size,
                                               scenario.p0, scenario.p1);
        max_lb = experiment_max_lookback(*target_arl, scenario.num_nodes,
                                         scenario.community_size, info);
      } else {
        throw ConfigError(
            "max_lookback is required (or derive it via target_arl)");
      }
    }
    window.max_lookback = *max_lb;
    window.threshold = placeholder_b;
    window.scan_mode = resolve_scan_mode(file);
    window.p1_mode =
        detector_name == "glr-mle" ? P1Mode::kMle : P1Mode::kKnown;
    const auto clamp_file = file.get_double("mle_clamp");
    window.mle_clamp = mle_clamp ? *mle_clamp : clamp_file.value_or(0.0);
    const auto connected_file = file.get_u64("connected_only");
    window.connected_candidates_only =
        connected_only ? *connected_only : connected_file.value_or(0) != 0;
    const auto cap_file = file.get_u64("enumeration_cap");
    window.enumeration_cap =
        enumeration_cap ? *enumeration_cap
                        : cap_file.value_or(kDefaultEnumerationCap);
    return window;
  }

  std::uint64_t resolve_u64(KeyValueConfig& file,
                            const std::optional<std::uint64_t>& flag,
                            const char* key, std::uint64_t fallback) {
    const auto from_file = file.get_u64(key);
    if (flag) return *flag;
    return from_file.value_or(fallback);
  }
};

void add_detector_flags(CLI::App* cmd, DetectorOpts& opts) {
  cmd->add_option("--detector", opts.detector, "cusum | glr | glr-mle");
  cmd->add_option("--min-lookback", opts.min_lookback,
                  "shortest admissible window (default 1)");
  cmd->add_option("--max-lookback", opts.max_lookback,
                  "longest admissible window");
  cmd->add_option("--threshold", opts.threshold, "alarm threshold b (nats)");
  cmd->add_option("--alpha", opts.alpha,
                  "per-window false-alarm target (analytic threshold)");
  cmd->add_option("--target-arl", opts.target_arl,
                  "ARL target for empirical calibration");
  cmd->add_option("--scan-mode", opts.scan_mode, "exhaustive | greedy");
  cmd->add_option("--mle-clamp", opts.mle_clamp,
                  "probability clamp for glr-mle (default adaptive)");
  cmd->add_option("--connected-only", opts.connected_only,
                  "restrict candidates to connected induced subgraphs");
  cmd->add_option("--enumeration-cap", opts.enumeration_cap,
                  "max candidate family size for exhaustive scans");
  cmd->add_option("--arl-replications", opts.arl_replications,
                  "replications for ARL estimates (default 400)");
  cmd->add_option("--edd-replications", opts.edd_replications,
                  "replications for EDD estimates (default 2000)");
  cmd->add_option("--cal-replications", opts.cal_replications,
                  "replications per calibration iterate (default 400)");
  cmd->add_option("--horizon-cap", opts.horizon_cap,
                  "ARL run cap (default 50 * target)");
  cmd->add_option("--tolerance", opts.tolerance,
                  "relative calibration tolerance (default 0.05)");
  cmd->add_option("--workers", opts.workers,
                  "worker threads (default: hardware)");
}

// Writes either to a file or stdout.
class OutputSink {
 public:
  explicit OutputSink(const std::optional<std::string>& path) {
    if (path && *path != "-") {
      file_.open(*path, std::ios::binary);
      if (!file_) {
        throw std::runtime_error("cannot open output file `" + *path + "`");
      }
      out_ = &file_;
    } else {
      out_ = &std::cout;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

DetectorSpec make_spec(const std::string& name, const GlrWindowConfig& window) {
  DetectorSpec spec;
  spec.label = name;
  spec.kind = name == "cusum" ? DetectorSpec::Kind::kCusum
                              : DetectorSpec::Kind::kGlr;
  spec.window = window;
  return spec;
}

double resolve_threshold_value(DetectorOpts& det, CommonOpts& common,
                               KeyValueConfig& file,
                               const DetectorOpts::Goal goal,
                               const std::string& detector_name,
                               const ChangeScenario& scenario,
                               const GlrWindowConfig& window,
                               std::uint64_t seed) {
  switch (goal) {
    case DetectorOpts::Goal::kThreshold:
      return *det.threshold;
    case DetectorOpts::Goal::kAlpha:
      return calibrate_analytic(*det.alpha, window.max_lookback,
                                scenario.num_nodes, scenario.community_size)
          .b_analytic;
    case DetectorOpts::Goal::kTargetArl: {
      CalibrationOptions options;
      options.replications =
          det.resolve_u64(file, det.cal_replications, "cal_replications", 400);
      options.horizon_cap =
          det.resolve_u64(file, det.horizon_cap, "horizon_cap", 0);
      options.workers = static_cast<unsigned>(
          det.resolve_u64(file, det.workers, "workers", 0));
      const auto tol_file = file.get_double("tolerance");
      const double tol = det.tolerance ? *det.tolerance
                                       : tol_file.value_or(0.05);
      const DetectorSpec spec = make_spec(detector_name, window);
      const auto family = [&](double b) {
        return make_stepper_factory(spec, scenario, b);
      };
      return calibrate_empirical(family, scenario, *det.target_arl, tol, seed,
                                 options)
          .b_empirical;
    }
  }
  throw std::logic_error("unreachable");
}

int cmd_simulate(CommonOpts& common, std::optional<std::uint64_t> horizon) {
  common.load_file();
  const ChangeScenario scenario = common.resolve_scenario();
  const std::uint64_t seed = common.resolve_seed();
  const auto horizon_file = common.file.get_u64("horizon");
  const std::uint64_t T = horizon ? *horizon : horizon_file.value_or(0);
  if (T < 1) throw ConfigError("horizon must be at least 1");
  const std::optional<std::string> out = common.resolve_out();
  common.file.ensure_all_consumed();

  OutputSink sink(out);
  SequenceSampler sampler(scenario, RandomSource(seed));
  for (std::uint64_t t = 1; t <= T; ++t) {
    write_snapshot(sink.stream(), t, sampler.next());
  }
  return kExitOk;
}

int cmd_detect(CommonOpts& common, DetectorOpts& det,
               std::optional<std::string> in_path) {
  common.load_file();
  KeyValueConfig& file = common.file;
  const ChangeScenario scenario = common.resolve_scenario();
  const std::uint64_t seed = common.resolve_seed();
  const std::string detector_name = det.resolve_detector(file);
  const auto goal = det.resolve_goal(file, /*allow_threshold=*/true);

  std::ifstream in_file;
  std::istream* in = &std::cin;
  const auto in_file_key = file.get_string("in");
  const std::string input = in_path ? *in_path : in_file_key.value_or("-");
  if (input != "-") {
    in_file.open(input);
    if (!in_file) throw ConfigError("cannot open input file `" + input + "`");
    in = &in_file;
  }

  const std::optional<std::string> out = common.resolve_out();

  if (detector_name == "cusum") {
    const double b =
        goal == DetectorOpts::Goal::kThreshold
            ? *det.threshold
            : throw ConfigError("cusum detect requires an explicit threshold");
    file.ensure_all_consumed();
    OutputSink sink(out);
    CusumDetector detector(scenario.num_nodes, scenario.planted_subgraph,
                           make_weights(scenario.p0, scenario.p1), b);
    SnapshotReader reader(*in);
    GraphSnapshot snapshot(scenario.num_nodes);
    const std::string target = join_indices(scenario.planted_subgraph);
    while (reader.next(snapshot)) {
      const CusumStep step = detector.step(snapshot);
      sink.stream() << step.time << ' ' << format_stat(step.statistic) << ' '
                    << (step.alarm ? 1 : 0) << ' ' << step.run_start << ' '
                    << target << '\n';
      if (step.alarm) return kExitAlarm;
    }
    return kExitOk;
  }

  GlrWindowConfig window =
      det.resolve_window(file, 1.0, detector_name, scenario);
  window.threshold = resolve_threshold_value(det, common, file, goal,
                                             detector_name, scenario, window,
                                             seed);
  file.ensure_all_consumed();
  OutputSink sink(out);
  GlrDetector detector(scenario.num_nodes, scenario.community_size,
                       scenario.p0, std::optional<ErParams>(scenario.p1),
                       window);
  SnapshotReader reader(*in);
  GraphSnapshot snapshot(scenario.num_nodes);
  while (reader.next(snapshot)) {
    const GlrStepResult step = detector.step(snapshot);
    if (!step.evaluated) {
      sink.stream() << step.time << '\n';
      continue;
    }
    sink.stream() << step.time << ' ' << format_stat(step.statistic) << ' '
                  << (step.alarm ? 1 : 0) << ' ' << step.change_point_estimate
                  << ' ' << join_indices(step.subgraph_estimate);
    if (window.p1_mode == P1Mode::kMle) {
      sink.stream() << ' ' << format_stat(step.p1_estimate);
    }
    sink.stream() << '\n';
    if (step.alarm) return kExitAlarm;
  }
  return kExitOk;
}

int cmd_calibrate(CommonOpts& common, DetectorOpts& det) {
  common.load_file();
  KeyValueConfig& file = common.file;
  const ChangeScenario scenario = common.resolve_scenario();
  const std::uint64_t seed = common.resolve_seed();
  const std::string detector_name = det.resolve_detector(file);
  const auto goal = det.resolve_goal(file, /*allow_threshold=*/false);
  const std::optional<std::string> out = common.resolve_out();

  GlrWindowConfig window;
  CalibrationResult result;
  std::uint32_t m_alpha = 0;
  if (detector_name == "cusum") {
    // CUSUM has no window; analytic calibration still needs one for eq-style
    // targets, so alpha calibration is GLR-only.
    if (goal == DetectorOpts::Goal::kAlpha) {
      throw ConfigError("alpha calibration applies to the windowed scan");
    }
  }
  if (detector_name != "cusum") {
    window = det.resolve_window(file, 1.0, detector_name, scenario);
    m_alpha = window.max_lookback;
  }

  if (goal == DetectorOpts::Goal::kAlpha) {
    result = calibrate_analytic(*det.alpha, m_alpha, scenario.num_nodes,
                                scenario.community_size);
  } else {
    CalibrationOptions options;
    options.replications =
        det.resolve_u64(file, det.cal_replications, "cal_replications", 400);
    options.horizon_cap =
        det.resolve_u64(file, det.horizon_cap, "horizon_cap", 0);
    options.workers = static_cast<unsigned>(
        det.resolve_u64(file, det.workers, "workers", 0));
    const double tol = det.tolerance
                           ? *det.tolerance
                           : file.get_double("tolerance").value_or(0.05);
    const DetectorSpec spec = make_spec(detector_name, window);
    const auto family = [&](double b) {
      return make_stepper_factory(spec, scenario, b);
    };
    result = calibrate_empirical(family, scenario, *det.target_arl, tol, seed,
                                 options);
  }
  file.ensure_all_consumed();

  OutputSink sink(out);
  sink.stream()
      << "alpha,m_alpha,b_analytic,b_empirical,target_arl,arl_estimate,"
         "arl_se\n";
  const auto field = [](double v) {
    return std::isnan(v) ? std::string() : format_g6(v);
  };
  sink.stream() << field(result.alpha) << ',' << (m_alpha ? std::to_string(m_alpha) : std::string())
                << ',' << field(result.b_analytic) << ','
                << field(result.b_empirical) << ',' << field(result.target_arl)
                << ','
                << (result.achieved_arl ? format_g6(result.achieved_arl->mean)
                                        : std::string())
                << ','
                << (result.achieved_arl ? format_g6(result.achieved_arl->se)
                                        : std::string())
                << '\n';
  return kExitOk;
}

int cmd_evaluate(CommonOpts& common, DetectorOpts& det,
                 std::optional<std::string> thresholds_flag,
                 std::optional<std::string> detectors_flag) {
  common.load_file();
  KeyValueConfig& file = common.file;
  const ChangeScenario scenario = common.resolve_scenario();
  const std::uint64_t seed = common.resolve_seed();

  std::vector<double> thresholds;
  const auto thresholds_file = file.get_double_list("thresholds");
  if (thresholds_flag) {
    std::stringstream ss(*thresholds_flag);
    std::string item;
    while (std::getline(ss, item, ',')) thresholds.push_back(std::stod(item));
  } else if (thresholds_file) {
    thresholds = *thresholds_file;
  }
  if (thresholds.empty()) {
    throw ConfigError("evaluate requires a thresholds grid");
  }

  std::vector<std::string> names;
  {
    const auto detectors_file = file.get_string("detectors");
    const std::string raw = detectors_flag
                                ? *detectors_flag
                                : detectors_file.value_or("cusum,glr");
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) names.push_back(item);
  }

  std::vector<DetectorSpec> specs;
  for (const std::string& name : names) {
    if (name != "cusum" && name != "glr" && name != "glr-mle") {
      throw ConfigError("unknown detector `" + name + "`");
    }
    GlrWindowConfig window;
    if (name != "cusum") {
      window = det.resolve_window(file, 1.0, name, scenario);
    }
    specs.push_back(make_spec(name, window));
  }

  const std::uint64_t arl_reps =
      det.resolve_u64(file, det.arl_replications, "arl_replications", 400);
  const std::uint64_t edd_reps =
      det.resolve_u64(file, det.edd_replications, "edd_replications", 2000);
  const std::uint64_t cap =
      det.resolve_u64(file, det.horizon_cap, "horizon_cap", 100000);
  const unsigned workers = static_cast<unsigned>(
      det.resolve_u64(file, det.workers, "workers", 0));
  const std::optional<std::string> out = common.resolve_out();
  file.ensure_all_consumed();

  const std::vector<TradeoffPoint> points = tradeoff_curve(
      specs, scenario, thresholds, arl_reps, edd_reps, cap, seed, workers);
  OutputSink sink(out);
  write_tradeoff_csv(sink.stream(), points);
  return kExitOk;
}

int cmd_localize(CommonOpts& common, DetectorOpts& det,
                 std::optional<std::string> in_path,
                 std::optional<std::uint64_t> k_flag,
                 std::optional<std::uint64_t> t_flag) {
  common.load_file();
  KeyValueConfig& file = common.file;
  const ChangeScenario scenario = common.resolve_scenario();
  const auto k_file = file.get_u64("k");
  const auto t_file = file.get_u64("t");
  const std::uint64_t k = k_flag ? *k_flag : k_file.value_or(0);
  const std::optional<std::uint64_t> t_opt = t_flag ? t_flag : t_file;
  if (k < 1) throw ConfigError("k (window start) must be at least 1");
  const ScanMode mode = det.resolve_scan_mode(file);
  const auto cap_file = file.get_u64("enumeration_cap");
  const std::uint64_t cap =
      det.enumeration_cap ? *det.enumeration_cap
                          : cap_file.value_or(kDefaultEnumerationCap);

  std::ifstream in_file;
  std::istream* in = &std::cin;
  const auto in_file_key = file.get_string("in");
  const std::string input = in_path ? *in_path : in_file_key.value_or("-");
  if (input != "-") {
    in_file.open(input);
    if (!in_file) throw ConfigError("cannot open input file `" + input + "`");
    in = &in_file;
  }
  const std::optional<std::string> out = common.resolve_out();
  file.ensure_all_consumed();

  EdgeCountMatrix counts(scenario.num_nodes);
  SnapshotReader reader(*in);
  GraphSnapshot snapshot(scenario.num_nodes);
  while (reader.next(snapshot)) counts.append(snapshot);
  const std::uint64_t t = t_opt.value_or(counts.horizon());
  if (counts.horizon() == 0) throw ConfigError("input stream is empty");
  if (t < k || t > counts.horizon()) {
    throw ConfigError("window [k, t] outside the ingested stream");
  }

  const ScanResult result =
      localize(counts, k, t, mode, make_weights(scenario.p0, scenario.p1),
               scenario.community_size, cap);
  OutputSink sink(out);
  sink.stream() << join_indices(result.subgraph) << ' '
                << format_stat(result.statistic) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "graphscan: online detection of an emerging community in a stream of "
      "random graphs"};
  app.require_subcommand(1);

  CommonOpts common;
  DetectorOpts det;
  std::optional<std::uint64_t> horizon;
  std::optional<std::string> in_path;
  std::optional<std::string> thresholds_flag;
  std::optional<std::string> detectors_flag;
  std::optional<std::uint64_t> k_flag;
  std::optional<std::uint64_t> t_flag;

  CLI::App* simulate =
      app.add_subcommand("simulate", "sample a snapshot sequence to a file");
  add_common_flags(simulate, common);
  simulate->add_option("--horizon", horizon, "number of snapshots");

  CLI::App* detect = app.add_subcommand(
      "detect", "stream snapshots through a detector; exit 2 on alarm");
  add_common_flags(detect, common);
  add_detector_flags(detect, det);
  detect->add_option("--in", in_path, "snapshot file (- for stdin)");

  CLI::App* calibrate = app.add_subcommand(
      "calibrate", "analytic (alpha) or empirical (target-arl) threshold");
  add_common_flags(calibrate, common);
  add_detector_flags(calibrate, det);

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "ARL/EDD tradeoff points over a threshold grid, as CSV");
  add_common_flags(evaluate, common);
  add_detector_flags(evaluate, det);
  evaluate->add_option("--thresholds", thresholds_flag,
                       "comma-separated threshold grid");
  evaluate->add_option("--detectors", detectors_flag,
                       "comma-separated detector list (default cusum,glr)");

  CLI::App* localize_cmd = app.add_subcommand(
      "localize", "max-statistic subgraph on a window of an ingested stream");
  add_common_flags(localize_cmd, common);
  add_detector_flags(localize_cmd, det);
  localize_cmd->add_option("--in", in_path, "snapshot file (- for stdin)");
  localize_cmd->add_option("--k", k_flag, "window start time (1-based)");
  localize_cmd->add_option("--t", t_flag,
                           "window end time (default: stream end)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return cmd_simulate(common, horizon);
    if (detect->parsed()) return cmd_detect(common, det, in_path);
    if (calibrate->parsed()) return cmd_calibrate(common, det);
    if (evaluate->parsed()) {
      return cmd_evaluate(common, det, thresholds_flag, detectors_flag);
    }
    if (localize_cmd->parsed()) {
      return cmd_localize(common, det, in_path, k_flag, t_flag);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
