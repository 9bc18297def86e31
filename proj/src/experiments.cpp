// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrf/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qrf/errors.hpp"
#include "qrf/specs.hpp"

namespace qrf {

namespace {

using nlohmann::ordered_json;

const char* kCommands[] = {"verify-bounds", "sweep", "check-props", "twirl-audit"};

bool known_command(const std::string& c) {
  for (const char* k : kCommands)
    if (c == k) return true;
  return false;
}

double json_number(const nlohmann::json& j, const std::string& field) {
  if (!j.is_number()) throw SpecParseError(field, "expected a number");
  return j.get<double>();
}

}  // namespace

std::string csv_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("config", "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecParseError("config", std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw SpecParseError("config", "top level must be an object");

  ExperimentConfig cfg;
  bool seed_seen = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "command") {
      cfg.command = value.is_string() ? value.get<std::string>() : "";
      if (!known_command(cfg.command))
        throw SpecParseError("command", "unknown command '" + cfg.command + "'");
    } else if (key == "group") {
      cfg.group = value.get<std::string>();
      if (cfg.group != "su2" && cfg.group != "u1")
        throw SpecParseError("group", "expected 'su2' or 'u1'");
    } else if (key == "system") {
      cfg.system_rep = value.get<std::string>();
    } else if (key == "reference") {
      cfg.reference_rep = value.get<std::string>();
    } else if (key == "reference_state") {
      cfg.reference_state = value.get<std::string>();
    } else if (key == "target") {
      cfg.target = value.get<std::string>();
    } else if (key == "s_grid" || key == "s0_grid") {
      if (!value.is_array()) throw SpecParseError(key, "expected an array of numbers");
      std::vector<double> grid;
      for (const auto& item : value) grid.push_back(json_number(item, key));
      if (key == "s_grid")
        cfg.s_grid = grid;
      else
        cfg.s0_grid = grid;
    } else if (key == "directions") {
      if (!value.is_array()) throw SpecParseError(key, "expected an array");
      for (const auto& item : value) {
        const std::string axis = item.get<std::string>();
        if (axis != "x" && axis != "y" && axis != "z")
          throw SpecParseError(key, "unknown direction '" + axis + "'");
        cfg.directions.push_back(axis);
      }
    } else if (key == "seed") {
      if (!value.is_number_unsigned() && !value.is_number_integer())
        throw SpecParseError("seed", "expected an unsigned integer");
      cfg.seed = value.get<std::uint64_t>();
      seed_seen = true;
    } else if (key == "slack_tol") {
      cfg.slack_tol = json_number(value, key);
      if (cfg.slack_tol < 0.0) throw SpecParseError(key, "tolerance must be >= 0");
    } else if (key == "configs") {
      cfg.configs = int(json_number(value, key));
      if (cfg.configs < 1) throw SpecParseError(key, "need at least one configuration");
    } else if (key == "d_r_max") {
      cfg.d_r_max = int(json_number(value, key));
      if (cfg.d_r_max < 2 || cfg.d_r_max > 8)
        throw SpecParseError(key, "reference dimension cap must be in [2, 8]");
    } else if (key == "pair_trials") {
      cfg.pair_trials = int(json_number(value, key));
      if (cfg.pair_trials < 1) throw SpecParseError(key, "need at least one trial");
    } else if (key == "mc_samples") {
      cfg.mc_samples = int(json_number(value, key));
      if (cfg.mc_samples < 2) throw SpecParseError(key, "need at least two samples");
    } else if (key == "l_max") {
      cfg.l_max = parse_half_integer(
          value.is_string() ? value.get<std::string>() : csv_double(json_number(value, key)),
          key);
      if (cfg.l_max < 0.5) throw SpecParseError(key, "l_max must be >= 1/2");
    } else if (key == "sweep_s0") {
      cfg.sweep_s0 = json_number(value, key);
    } else if (key == "budget_seconds") {
      cfg.budget_seconds = json_number(value, key);
      if (cfg.budget_seconds < 0.0) throw SpecParseError(key, "budget must be >= 0");
    } else if (key == "jobs") {
      cfg.jobs = int(json_number(value, key));
      if (cfg.jobs < 0) throw SpecParseError(key, "jobs must be >= 0");
    } else if (key == "out_dir") {
      cfg.out_dir = value.get<std::string>();
    } else {
      throw SpecParseError(key, "unknown config field");
    }
  }
  if (cfg.command.empty()) throw SpecParseError("command", "missing");
  if (!seed_seen) throw SpecParseError("seed", "missing (runs never seed from the clock)");
  if (cfg.s_grid.empty()) cfg.s_grid = default_bound_grid();
  if (cfg.s0_grid.empty()) cfg.s0_grid = default_bound_grid();
  if (cfg.directions.empty()) cfg.directions = {"x", "y", "z"};
  return cfg;
}

namespace {

std::vector<std::string> sorted_term_keys(const std::vector<BoundReport>& reports) {
  std::set<std::string> keys;
  for (const auto& r : reports)
    for (const auto& [k, v] : r.terms) keys.insert(k);
  return {keys.begin(), keys.end()};
}

}  // namespace

std::string bound_reports_csv(const std::vector<BoundReport>& reports) {
  const auto keys = sorted_term_keys(reports);
  std::string out = "inequality_id,lhs,rhs,slack";
  for (const auto& k : keys) out += "," + k;
  out += "\n";
  for (const auto& r : reports) {
    out += inequality_name(r.id);
    out += "," + csv_double(r.lhs) + "," + csv_double(r.rhs) + "," + csv_double(r.slack);
    for (const auto& k : keys) {
      out += ",";
      const auto it = r.terms.find(k);
      if (it != r.terms.end()) out += csv_double(it->second);
    }
    out += "\n";
  }
  return out;
}

std::string checks_csv(const std::vector<CheckRow>& rows) {
  std::string out = "audit,check,value,threshold,pass\n";
  for (const auto& r : rows) {
    out += r.audit + "," + r.check + "," + csv_double(r.value) + "," +
           csv_double(r.threshold) + "," + (r.pass ? "true" : "false") + "\n";
  }
  return out;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out =
      "l,n_qubits_equiv,eps_norm,lhs_x,rhs_x,lhs_y,rhs_y,lhs_z,rhs_z,lhs_sum,rhs_sum,"
      "delta_sx,delta_sy,delta_sz,fidelity_halfpi,theta_fit,lambda_x,lambda_y,"
      "lambda_z,fit_residual\n";
  for (const auto& r : result.rows) {
    out += csv_double(r.l) + "," + std::to_string(r.n_qubits_equiv) + "," +
           csv_double(r.eps_norm) + "," + csv_double(r.lhs_x) + "," +
           csv_double(r.rhs_x) + "," + csv_double(r.lhs_y) + "," +
           csv_double(r.rhs_y) + "," + csv_double(r.lhs_z) + "," +
           csv_double(r.rhs_z) + "," + csv_double(r.lhs_sum) + "," +
           csv_double(r.rhs_sum) + "," + csv_double(r.delta_sx) + "," +
           csv_double(r.delta_sy) + "," + csv_double(r.delta_sz) + "," +
           csv_double(r.fidelity_halfpi) + "," + csv_double(r.theta_fit) + "," +
           csv_double(r.lambda_x) + "," + csv_double(r.lambda_y) + "," +
           csv_double(r.lambda_z) + "," + csv_double(r.fit_residual) + "\n";
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NumericalError("cannot write '" + path.string() + "'");
  out << content;
}

ordered_json json_finite(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

ordered_json summary_entry(const AuditSummary& a) {
  ordered_json j;
  j["name"] = a.name;
  j["count"] = a.count;
  j["min_slack"] = json_finite(a.min_slack);
  j["max_violation"] = json_finite(a.max_violation);
  j["violations"] = a.violations;
  j["pass"] = a.pass;
  j["runtime_seconds"] = a.runtime_seconds;
  return j;
}

AuditOptions options_from(const ExperimentConfig& cfg, bool keep_reports) {
  AuditOptions opt;
  opt.seed = cfg.seed;
  opt.configs = cfg.configs;
  opt.d_r_max = cfg.d_r_max;
  opt.pair_trials = cfg.pair_trials;
  opt.mc_samples = cfg.mc_samples;
  opt.l_max = cfg.l_max;
  opt.slack_tol = cfg.slack_tol;
  opt.jobs = cfg.jobs;
  opt.keep_reports = keep_reports;
  return opt;
}

std::vector<LieDirection> configured_directions(const ExperimentConfig& cfg,
                                                Group group) {
  if (group == Group::U1) return {LieDirection::u1()};
  std::vector<LieDirection> dirs;
  for (const auto& axis : cfg.directions)
    dirs.push_back(LieDirection::su2_axis(axis == "x" ? 0 : axis == "y" ? 1 : 2));
  return dirs;
}

// Evaluates the configured single instance, when all four specs are given:
// the target is realized covariantly by twirling its composite extension.
void run_configured_instance(const ExperimentConfig& cfg,
                             std::vector<BoundReport>& reports) {
  if (cfg.system_rep.empty() || cfg.reference_rep.empty() ||
      cfg.reference_state.empty() || cfg.target.empty())
    return;
  const Representation rep_s = parse_representation_spec(cfg.system_rep);
  const Representation rep_r = parse_representation_spec(cfg.reference_rep);
  if (!cfg.group.empty()) {
    const Group expected = cfg.group == "u1" ? Group::U1 : Group::SU2;
    if (rep_s.group() != expected || rep_r.group() != expected)
      throw SpecParseError("group", "representations do not match the declared group");
  }
  const ComplexMatrix rho = parse_reference_spec(cfg.reference_state, rep_r.dim());
  const QuantumChannel lambda = parse_channel_spec(cfg.target);
  if (lambda.dim() != rep_s.dim())
    throw SpecParseError("target", "channel dimension " + std::to_string(lambda.dim()) +
                                       " does not match system dimension " +
                                       std::to_string(rep_s.dim()));
  const CompositeFrame frame = CompositeFrame::make(rep_s, rep_r, rho);
  const QuantumChannel phi =
      twirl(extend_with_identity(lambda, frame.dim_r()), frame.rep_sr());
  const BoundEvaluator ev(phi, frame, lambda);
  const bool unitary = lambda.is_unitary();
  for (const auto& dir : configured_directions(cfg, rep_s.group()))
    for (double s0 : cfg.s0_grid) {
      reports.push_back(ev.generator_bound(dir, s0));
      if (unitary) reports.push_back(ev.generator_bound_unitary(dir, s0));
      for (double s : cfg.s_grid) {
        reports.push_back(ev.commutator_bound(dir, s0, s));
        if (unitary) reports.push_back(ev.commutator_bound_unitary(dir, s0, s));
      }
    }
}

int run_verify_bounds(const ExperimentConfig& cfg, const std::filesystem::path& out_dir,
                      ordered_json& summary) {
  const AuditOptions opt = options_from(cfg, true);
  AuditSummary tradeoff = audit_commutator_tradeoff(opt);
  AuditSummary corollaries = audit_corollaries(opt);

  std::vector<BoundReport> reports = std::move(tradeoff.reports);
  for (auto& r : corollaries.reports) reports.push_back(std::move(r));
  std::vector<BoundReport> configured;
  run_configured_instance(cfg, configured);
  long configured_violations = 0;
  for (const auto& r : configured) {
    if (r.slack < -cfg.slack_tol) ++configured_violations;
    reports.push_back(r);
  }

  write_file(out_dir / "bound_reports.csv", bound_reports_csv(reports));

  std::map<std::string, double> min_slack_by_id;
  for (const auto& r : reports) {
    const std::string name = inequality_name(r.id);
    const auto it = min_slack_by_id.find(name);
    if (it == min_slack_by_id.end())
      min_slack_by_id[name] = r.slack;
    else
      it->second = std::min(it->second, r.slack);
  }
  ordered_json per_id;
  for (const auto& [name, slack] : min_slack_by_id) per_id[name] = json_finite(slack);

  summary["audits"].push_back(summary_entry(tradeoff));
  summary["audits"].push_back(summary_entry(corollaries));
  summary["min_slack_per_inequality"] = per_id;
  summary["configured_reports"] = long(configured.size());

  const long violations =
      tradeoff.violations + corollaries.violations + configured_violations;
  summary["violations"] = violations;
  return violations > 0 ? 1 : 0;
}

int run_check_props(const ExperimentConfig& cfg, const std::filesystem::path& out_dir,
                    ordered_json& summary) {
  const AuditOptions opt = options_from(cfg, false);
  const AuditSummary lhs = audit_covariant_lhs(opt);
  const AuditSummary pairs = audit_commuting_pairs(opt);
  const AuditSummary props = audit_propositions(opt);
  const AuditSummary fid = audit_fidelity(opt);
  const AuditSummary mt = audit_mt(opt);

  std::vector<CheckRow> rows;
  for (const auto* a : {&lhs, &props, &fid, &mt})
    for (const auto& row : a->checks) rows.push_back(row);
  rows.push_back({"commuting_pairs", "min_slack", pairs.min_slack, -cfg.slack_tol,
                  pairs.violations == 0});
  write_file(out_dir / "checks.csv", checks_csv(rows));

  for (const auto* a : {&lhs, &pairs, &props, &fid, &mt})
    summary["audits"].push_back(summary_entry(*a));

  if (pairs.violations > 0) return 1;
  const bool ok = lhs.pass && props.pass && fid.pass && mt.pass;
  return ok ? 0 : 3;
}

int run_twirl_audit(const ExperimentConfig& cfg, const std::filesystem::path& out_dir,
                    ordered_json& summary) {
  const AuditOptions opt = options_from(cfg, false);
  const AuditSummary twirl_summary = audit_twirl(opt);
  write_file(out_dir / "checks.csv", checks_csv(twirl_summary.checks));
  summary["audits"].push_back(summary_entry(twirl_summary));
  return twirl_summary.pass ? 0 : 3;
}

int run_sweep(const ExperimentConfig& cfg, const std::filesystem::path& out_dir,
              ordered_json& summary) {
  QuantumChannel target = cfg.target.empty()
                              ? parse_channel_spec("unitary:rot-z:theta=1.0")
                              : parse_channel_spec(cfg.target);
  if (target.dim() != 2)
    throw SpecParseError("target", "sweep target must act on the qubit system");
  const SweepResult result =
      sweep_reference(target, cfg.l_max, cfg.sweep_s0, cfg.budget_seconds);
  write_file(out_dir / "sweep.csv", sweep_csv(result));
  const SweepTrend trend = evaluate_sweep_trend(result, cfg.slack_tol);
  summary["rows"] = long(result.rows.size());
  summary["partial"] = result.partial;
  summary["eps_first"] = json_finite(trend.eps_first);
  summary["eps_last"] = json_finite(trend.eps_last);
  summary["eps_shrinks"] = trend.shrinks;
  summary["min_product_gap"] = json_finite(trend.min_product_gap);
  summary["min_slack"] = json_finite(trend.min_slack);
  summary["sweep_runtime_seconds"] = result.runtime_seconds;
  return trend.product_ok ? 0 : 1;
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::filesystem::path out_dir(cfg.out_dir);
    std::filesystem::create_directories(out_dir);

    ordered_json summary;
    summary["command"] = cfg.command;
    summary["seed"] = cfg.seed;
    summary["audits"] = ordered_json::array();

    int code = 0;
    if (cfg.command == "verify-bounds")
      code = run_verify_bounds(cfg, out_dir, summary);
    else if (cfg.command == "check-props")
      code = run_check_props(cfg, out_dir, summary);
    else if (cfg.command == "twirl-audit")
      code = run_twirl_audit(cfg, out_dir, summary);
    else if (cfg.command == "sweep")
      code = run_sweep(cfg, out_dir, summary);
    else
      throw SpecParseError("command", "unknown command '" + cfg.command + "'");

    summary["exit_code"] = code;
    summary["runtime_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_file(out_dir / "summary.json", summary.dump(2) + "\n");
    return code;
  } catch (const SpecParseError& e) {
    std::cerr << "config error in field '" << e.field << "': " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

int validate_config_file(const std::string& path, std::ostream& out,
                         std::ostream& diagnostics) {
  ExperimentConfig cfg;
  try {
    cfg = ExperimentConfig::from_json_file(path);
  } catch (const SpecParseError& e) {
    diagnostics << "config error in field '" << e.field << "': " << e.what() << "\n";
    return 2;
  }

  out << "command: " << cfg.command << "\n";
  out << "seed: " << cfg.seed << "\n";
  out << "out_dir: " << cfg.out_dir << "\n";

  int code = 0;
  Eigen::Index system_dim = -1, reference_dim = -1;
  try {
    if (!cfg.system_rep.empty()) {
      const Representation rep = parse_representation_spec(cfg.system_rep);
      system_dim = rep.dim();
      out << "system: " << cfg.system_rep << " -> " << group_name(rep.group())
          << " dim " << rep.dim() << "\n";
    }
    if (!cfg.reference_rep.empty()) {
      const Representation rep = parse_representation_spec(cfg.reference_rep);
      reference_dim = rep.dim();
      out << "reference: " << cfg.reference_rep << " -> " << group_name(rep.group())
          << " dim " << rep.dim() << "\n";
    }
  } catch (const SpecParseError& e) {
    diagnostics << "config error in field '" << e.field << "': " << e.what() << "\n";
    return 2;
  }

  if (!cfg.reference_state.empty()) {
    if (reference_dim < 0) {
      diagnostics << "config error: reference_state '" << cfg.reference_state
                  << "' given without a reference representation\n";
      code = 2;
    } else {
      try {
        parse_reference_spec(cfg.reference_state, reference_dim);
        out << "reference_state: " << cfg.reference_state << " -> dim "
            << reference_dim << "\n";
      } catch (const SpecParseError& e) {
        diagnostics << "config error in field '" << e.field << "': " << e.what()
                    << " (reference_state '" << cfg.reference_state
                    << "' vs reference '" << cfg.reference_rep << "')\n";
        code = 2;
      }
    }
  }
  if (!cfg.target.empty()) {
    try {
      const QuantumChannel target = parse_channel_spec(cfg.target);
      out << "target: " << cfg.target << " -> dim " << target.dim() << "\n";
      if (system_dim >= 0 && target.dim() != system_dim) {
        diagnostics << "config error: target '" << cfg.target << "' dim "
                    << target.dim() << " does not match system '" << cfg.system_rep
                    << "' dim " << system_dim << "\n";
        code = 2;
      }
    } catch (const SpecParseError& e) {
      diagnostics << "config error in field '" << e.field << "': " << e.what() << "\n";
      code = 2;
    }
  }
  return code;
}

}  // namespace qrf
