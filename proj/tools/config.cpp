#include "config.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

namespace stapulse::cli {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void fail(const std::string& message) { throw ValidationError(message); }

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      fail("unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

double number_at(const json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) {
    return fallback;
  }
  if (!obj[key].is_number()) {
    fail("field \"" + key + "\" must be a number");
  }
  return obj[key].get<double>();
}

int int_at(const json& obj, const std::string& key, int fallback) {
  if (!obj.contains(key)) {
    return fallback;
  }
  if (!obj[key].is_number_integer()) {
    fail("field \"" + key + "\" must be an integer");
  }
  return obj[key].get<int>();
}

TaskKind parse_task(const std::string& name) {
  if (name == "create-asqs") {
    return TaskKind::CreateAsqs;
  }
  if (name == "two-level-transfer") {
    return TaskKind::TwoLevelTransfer;
  }
  if (name == "return-to-one") {
    return TaskKind::ReturnToOne;
  }
  fail("unknown task \"" + name +
       "\" (expected create-asqs, two-level-transfer, or return-to-one)");
}

void parse_coefficients(const json& obj, RunConfig& config) {
  if (obj.is_string()) {
    if (obj.get<std::string>() != "optimize") {
      fail("\"coefficients\" must be an object or the string \"optimize\"");
    }
    config.optimize_coefficients = true;
    return;
  }
  if (!obj.is_object()) {
    fail("\"coefficients\" must be an object or the string \"optimize\"");
  }
  check_keys(obj, "coefficients", {"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8"});
  config.even.assign(4, std::nullopt);
  config.odd.assign(4, std::nullopt);
  bool any_odd = false;
  for (int m = 1; m <= 4; ++m) {
    const std::string even_key = "a" + std::to_string(2 * m);
    const std::string odd_key = "a" + std::to_string(2 * m - 1);
    if (obj.contains(even_key)) {
      config.even[static_cast<size_t>(m - 1)] = number_at(obj, even_key, 0.0);
    }
    if (obj.contains(odd_key)) {
      config.odd[static_cast<size_t>(m - 1)] = number_at(obj, odd_key, 0.0);
      any_odd = true;
    }
  }
  if (!any_odd) {
    config.odd.clear();  // all-zero odd coefficients
  } else {
    for (auto& slot : config.odd) {
      if (!slot.has_value()) {
        slot = 0.0;
      }
    }
  }
  // Leave exactly one even slot open for the solver; a fully specified set
  // is validated instead. Unmentioned trailing evens default to zero, the
  // a4 slot stays open when absent.
  int open = 0;
  for (const auto& slot : config.even) {
    if (!slot.has_value()) {
      ++open;
    }
  }
  if (open > 1) {
    for (int m = 1; m <= 4; ++m) {
      auto& slot = config.even[static_cast<size_t>(m - 1)];
      if (m != 2 && !slot.has_value()) {
        slot = 0.0;
      }
    }
  }
}

SweepKind parse_sweep_kind(const std::string& name) {
  if (name == "detuning") {
    return SweepKind::Detuning;
  }
  if (name == "eta") {
    return SweepKind::Eta;
  }
  if (name == "offres") {
    return SweepKind::OffResonant;
  }
  if (name == "coefficient") {
    return SweepKind::Coefficient;
  }
  fail("unknown sweep kind \"" + name +
       "\" (expected detuning, eta, offres, or coefficient)");
}

void parse_sweep(const json& obj, SweepSettings& s) {
  check_keys(obj, "sweep",
             {"kind", "range_mhz", "count", "detuning_mhz", "eta_range", "cutoff_mhz",
              "outer_mhz", "count_per_side", "coefficient", "coeff_min", "coeff_max",
              "coeff_count", "map_range_mhz", "map_count", "report_window_mhz"});
  if (obj.contains("kind")) {
    s.kind = parse_sweep_kind(obj["kind"].get<std::string>());
  }
  s.range_mhz = number_at(obj, "range_mhz", s.range_mhz);
  s.count = int_at(obj, "count", s.count);
  s.detuning_mhz = number_at(obj, "detuning_mhz", s.detuning_mhz);
  s.eta_range = number_at(obj, "eta_range", s.eta_range);
  s.cutoff_mhz = number_at(obj, "cutoff_mhz", s.cutoff_mhz);
  s.outer_mhz = number_at(obj, "outer_mhz", s.outer_mhz);
  s.count_per_side = int_at(obj, "count_per_side", s.count_per_side);
  s.subscript = int_at(obj, "coefficient", s.subscript);
  s.coeff_min = number_at(obj, "coeff_min", s.coeff_min);
  s.coeff_max = number_at(obj, "coeff_max", s.coeff_max);
  s.coeff_count = int_at(obj, "coeff_count", s.coeff_count);
  s.map_range_mhz = number_at(obj, "map_range_mhz", s.map_range_mhz);
  s.map_count = int_at(obj, "map_count", s.map_count);
  s.report_window_mhz = number_at(obj, "report_window_mhz", s.report_window_mhz);
}

void parse_objective(const json& obj, Objective& o) {
  check_keys(obj, "objective",
             {"fidelity_window_mhz", "fidelity_step_mhz", "excitation_cutoff_mhz",
              "excitation_outer_mhz", "excitation_step_mhz", "excitation_cap",
              "penalty_weight"});
  o.fidelity_window_mhz = number_at(obj, "fidelity_window_mhz", o.fidelity_window_mhz);
  o.fidelity_step_mhz = number_at(obj, "fidelity_step_mhz", o.fidelity_step_mhz);
  o.excitation_cutoff_mhz = number_at(obj, "excitation_cutoff_mhz", o.excitation_cutoff_mhz);
  o.excitation_outer_mhz = number_at(obj, "excitation_outer_mhz", o.excitation_outer_mhz);
  o.excitation_step_mhz = number_at(obj, "excitation_step_mhz", o.excitation_step_mhz);
  o.excitation_cap = number_at(obj, "excitation_cap", o.excitation_cap);
  o.penalty_weight = number_at(obj, "penalty_weight", o.penalty_weight);
}

ScanPlan parse_plan(const json& obj) {
  check_keys(obj, "scan", {"order", "refine_a6"});
  ScanPlan plan;
  if (!obj.contains("order") || !obj["order"].is_array()) {
    fail("\"scan.order\" must be an array of range objects");
  }
  for (const json& r : obj["order"]) {
    check_keys(r, "scan.order[]", {"coefficient", "min", "max", "step"});
    ScanRange range;
    range.coefficient_subscript = int_at(r, "coefficient", 0);
    range.min = number_at(r, "min", 0.0);
    range.max = number_at(r, "max", 0.0);
    range.step = number_at(r, "step", 0.0);
    plan.order.push_back(range);
  }
  if (obj.contains("refine_a6")) {
    if (!obj["refine_a6"].is_array()) {
      fail("\"scan.refine_a6\" must be an array of numbers");
    }
    for (const json& v : obj["refine_a6"]) {
      plan.refine_a6.push_back(v.get<double>());
    }
  }
  return plan;
}

ChsAssignment parse_assignment(const std::string& name) {
  if (name == "pump") {
    return ChsAssignment::Pump;
  }
  if (name == "stokes") {
    return ChsAssignment::Stokes;
  }
  if (name == "both") {
    return ChsAssignment::Both;
  }
  fail("unknown chs assignment \"" + name + "\" (expected pump, stokes, or both)");
}

ChsParameters parse_chs(const json& obj, double tf_us) {
  check_keys(obj, "chs",
             {"omega_max_mhz", "beta_per_us", "mu", "center_us", "duration_us",
              "assignment", "separation_us", "phase_rad"});
  ChsParameters p;
  p.omega_max = mhz_to_angular(number_at(obj, "omega_max_mhz", 0.0));
  p.beta = number_at(obj, "beta_per_us", 0.0);
  p.mu = number_at(obj, "mu", 0.0);
  p.duration = number_at(obj, "duration_us", tf_us);
  p.center = number_at(obj, "center_us", 0.5 * p.duration);
  if (obj.contains("assignment")) {
    p.assignment = parse_assignment(obj["assignment"].get<std::string>());
  }
  p.separation = number_at(obj, "separation_us", 0.0);
  p.phase = number_at(obj, "phase_rad", 0.0);
  return p;
}

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    fail("cannot open config file " + path.string());
  }
  json root;
  try {
    root = json::parse(in, nullptr, true, true);  // allow comments
  } catch (const json::parse_error& e) {
    fail("config is not valid JSON: " + std::string(e.what()));
  }
  if (!root.is_object()) {
    fail("config root must be a JSON object");
  }
  check_keys(root, "config",
             {"task", "tf_us", "target", "coefficients", "channel", "t2_us",
              "mixed_overlap", "step_ns", "jobs", "out_dir", "plot", "sweep", "objective",
              "scan", "chs"});

  RunConfig config;
  config.target = TargetState(0.25 * kPi, 0.5 * kPi);
  if (root.contains("task")) {
    config.task = parse_task(root["task"].get<std::string>());
  }
  config.tf_us = number_at(root, "tf_us", config.tf_us);
  if (root.contains("target")) {
    const json& t = root["target"];
    check_keys(t, "target", {"theta_rad", "phi_rad"});
    config.target = TargetState(number_at(t, "theta_rad", config.target.theta),
                                number_at(t, "phi_rad", config.target.phi));
  }
  parse_coefficients(root.contains("coefficients") ? root["coefficients"] : json::object(),
                     config);
  if (root.contains("channel")) {
    const json& c = root["channel"];
    check_keys(c, "channel", {"detuning_mhz", "eta"});
    config.channel.detuning_mhz = number_at(c, "detuning_mhz", 0.0);
    config.channel.eta = number_at(c, "eta", 0.0);
  }
  if (root.contains("t2_us")) {
    config.t2_us = number_at(root, "t2_us", 0.0);
  }
  config.mixed_overlap = number_at(root, "mixed_overlap", config.mixed_overlap);
  config.step_us = 1e-3 * number_at(root, "step_ns", 1.0);
  config.jobs = int_at(root, "jobs", config.jobs);
  if (root.contains("out_dir")) {
    config.out_dir = root["out_dir"].get<std::string>();
  }
  if (root.contains("plot")) {
    if (!root["plot"].is_boolean()) {
      fail("field \"plot\" must be a boolean");
    }
    config.plot = root["plot"].get<bool>();
  }
  if (root.contains("sweep")) {
    parse_sweep(root["sweep"], config.sweep);
  }
  if (root.contains("objective")) {
    parse_objective(root["objective"], config.objective);
  }
  if (root.contains("scan")) {
    config.plan = parse_plan(root["scan"]);
  }
  if (root.contains("chs")) {
    config.chs = parse_chs(root["chs"], config.tf_us);
  }
  return config;
}

PulseCoefficients resolve_coefficients(const RunConfig& config) {
  if (config.optimize_coefficients) {
    const ScanPlan plan = config.plan ? *config.plan : ScanPlan::defaults(config.task);
    const ScanResult scan = coordinate_scan(config.task, config.tf_us, config.target, plan,
                                            config.objective,
                                            {config.step_us, config.jobs});
    return scan.best;
  }
  return solve_constraint(config.task, config.tf_us, config.target, config.even, config.odd);
}

std::string coefficients_to_json(const PulseCoefficients& coeffs) {
  json obj;
  obj["task"] = task_name(coeffs.task);
  obj["tf_us"] = coeffs.tf;
  obj["target"] = {{"theta_rad", coeffs.target.theta}, {"phi_rad", coeffs.target.phi}};
  json block = json::object();
  for (int n = 1; n <= 2 * coeffs.order(); ++n) {
    block["a" + std::to_string(n)] = coeffs.value(n);
  }
  obj["coefficients"] = block;
  return obj.dump(2) + "\n";
}

}  // namespace stapulse::cli
