// Command-line front end: one-shot handover decisions, velocity sweeps,
// rule-base export/validation and link-budget calculations.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hodec/decision.hpp"
#include "hodec/radio.hpp"
#include "hodec/sweep.hpp"

namespace {

using namespace hodec;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path + "'");
  return os.str();
}

std::string fmt4(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string format_rule(const Rule& r) {
  std::string s;
  s += level_name(r.antecedent[0]);
  s += ',';
  s += level_name(r.antecedent[1]);
  s += ',';
  s += level_name(r.antecedent[2]);
  s += ',';
  s += level_name(r.antecedent[3]);
  s += " -> ";
  s += category_name(r.consequent);
  return s;
}

// config file: `gamma = <x>`, `k = <x>`, `step = <x>` lines, `#` comments
struct FileConfig {
  std::optional<double> gamma, k, step;
};

FileConfig parse_config_file(const std::string& text) {
  FileConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string key, eq;
    double value = 0.0;
    if (!(ls >> key >> eq >> value) || eq != "=") {
      throw ParseError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    if (key == "gamma") cfg.gamma = value;
    else if (key == "k") cfg.k = value;
    else if (key == "step") cfg.step = value;
    else throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
  }
  return cfg;
}

// shared flags: threshold/weight/step, rule file, profile overrides
struct CommonOptions {
  std::string config_path;
  std::string rules_path;
  std::string femto_profile_path;
  std::string macro_profile_path;
  double gamma = 0.6;
  double k = 1.0;
  double step = 0.1;
  bool gamma_set = false;
  bool k_set = false;
  bool step_set = false;

  void add_to(CLI::App& app, bool with_step) {
    app.add_option("--config", config_path, "config file with gamma/k/step lines");
    app.add_option("--rules", rules_path, "rule file (default: built-in rule table)");
    app.add_option("--femto-profile", femto_profile_path, "profile file for the femtocell side");
    app.add_option("--macro-profile", macro_profile_path, "profile file for the macrocell side");
    app.add_option("--gamma", gamma, "case-1 handover threshold")
        ->check(CLI::Range(0.0, 1.0))
        ->each([this](const std::string&) { gamma_set = true; });
    app.add_option("--k", k, "case-2 femtocell preference weight")
        ->check(CLI::PositiveNumber)
        ->each([this](const std::string&) { k_set = true; });
    if (with_step) {
      app.add_option("--step", step, "velocity step in km/h")
          ->check(CLI::PositiveNumber)
          ->each([this](const std::string&) { step_set = true; });
    }
  }

  // precedence: flag > config file > built-in default
  void resolve() {
    if (config_path.empty()) return;
    const FileConfig file = parse_config_file(read_file(config_path));
    if (!gamma_set && file.gamma) gamma = *file.gamma;
    if (!k_set && file.k) k = *file.k;
    if (!step_set && file.step) step = *file.step;
    if (gamma < 0.0 || gamma > 1.0) throw InvalidSpec("gamma must be in [0,1]");
    if (!(k > 0.0)) throw InvalidSpec("k must be > 0");
    if (!(step > 0.0)) throw InvalidSpec("step must be > 0");
  }

  DecisionConfig decision_config() const { return DecisionConfig{gamma, k}; }

  RuleBase rulebase() const {
    if (rules_path.empty()) return synthesize_default_rulebase();
    return load_rulebase(read_file(rules_path));
  }

  ProfileTable profiles(ServiceType service) const {
    ProfileTable table = ProfileTable::builtin();
    if (!femto_profile_path.empty()) {
      table.set(service, NetworkKind::Femtocell, load_profile(read_file(femto_profile_path)));
    }
    if (!macro_profile_path.empty()) {
      table.set(service, NetworkKind::Macrocell, load_profile(read_file(macro_profile_path)));
    }
    return table;
  }
};

// primary output goes to stdout unless an --output path was given
void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << payload;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

int run_decide(const std::string& service_token, int which_case, const Measurements& m,
               CommonOptions& opts) {
  opts.resolve();
  const ServiceType service = parse_service(service_token);
  const ProfileTable profiles = opts.profiles(service);
  const RuleBase rb = opts.rulebase();

  const HandoverFactor gf = handover_factor(profiles, service, NetworkKind::Femtocell, m.femto, rb);
  const HandoverFactor gm = handover_factor(profiles, service, NetworkKind::Macrocell, m.macro, rb);
  const DecisionConfig cfg = opts.decision_config();
  const HandoverOutcome outcome =
      which_case == 1 ? decide_case1(gf, gm, cfg) : decide_case2(gf, gm, cfg);

  std::string out;
  out += "verdict: " + std::string(verdict_name(outcome.verdict)) + "\n";
  out += "gamma_f: " + fmt4(outcome.gamma_f) + "\n";
  out += "gamma_m: " + fmt4(outcome.gamma_m) + "\n";
  write_output("", out);
  return 0;
}

int run_sweep_cmd(const std::string& service_token, const std::string& preset_name, double v_min,
                  double v_max, const std::string& output_path, CommonOptions& opts) {
  opts.resolve();
  SweepSpec spec;
  spec.service = parse_service(service_token);
  spec.preset = find_preset(preset_name);
  spec.v_min = v_min;
  spec.v_max = v_max;
  spec.step = opts.step;
  spec.rulebase = opts.rulebase();
  spec.config = opts.decision_config();
  spec.profiles = opts.profiles(spec.service);

  const SweepResult result = run_sweep(spec);

  std::ostringstream csv;
  export_csv(result, csv);
  write_output(output_path, csv.str());

  std::string summary = "intersections:";
  if (result.intersections.empty()) {
    summary += " none";
  } else {
    for (double v : result.intersections) summary += " " + fmt6(v);
  }
  summary += "\nsegments:";
  for (const Segment& s : result.segments) {
    summary += " " + std::string(network_name(s.preferred)) + " [" + fmt6(s.v_lo) + ", " +
               fmt6(s.v_hi) + "]";
  }
  std::cerr << summary << "\n";
  return 0;
}

int run_rules_export(const std::string& output_path) {
  write_output(output_path, serialize_rulebase(synthesize_default_rulebase()));
  return 0;
}

int run_rules_validate(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<std::string> problems;

  // lenient line-by-line pass so every defect gets reported, not just the first
  std::vector<Rule> rules;
  std::array<int, kRuleCount> first_line{};
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    try {
      const Rule rule = parse_rule_line(raw);
      const int idx = antecedent_index(rule.antecedent);
      if (first_line[idx] != 0) {
        problems.push_back("line " + std::to_string(line_no) +
                           ": duplicate antecedent (first on line " +
                           std::to_string(first_line[idx]) + ")");
      } else {
        first_line[idx] = line_no;
        rules.push_back(rule);
      }
    } catch (const ParseError& e) {
      problems.push_back("line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  const bool complete = rules.size() == kRuleCount && problems.empty();
  if (rules.size() != kRuleCount) {
    problems.push_back("incomplete: " + std::to_string(rules.size()) + "/" +
                       std::to_string(kRuleCount) + " rules");
  }

  int anchors_matched = 0;
  if (complete) {
    const RuleBase rb = RuleBase::from_rules(rules);
    for (const auto& pair : monotonicity_violations(rb)) {
      problems.push_back("monotonicity violation: " + format_rule(pair[0]) + " vs raised " +
                         format_rule(pair[1]));
    }
    for (const Rule& anchor : anchor_rules()) {
      const OutputCategory got = rb.consequent(anchor.antecedent);
      if (got == anchor.consequent) {
        ++anchors_matched;
      } else {
        problems.push_back("anchor rule mismatch: expected " + format_rule(anchor) + ", got '" +
                           std::string(category_name(got)) + "'");
      }
    }
  }

  if (problems.empty()) {
    std::cout << kRuleCount << " rules, complete, monotone, matches " << anchors_matched
              << " anchor rules\n";
    return 0;
  }
  for (const std::string& p : problems) std::cout << p << "\n";
  return 1;
}

int run_linkbudget(bool macro, const MacroLink& macro_link, const FemtoLink& femto_link,
                   bool pt_set, const std::vector<double>& femto_interferers,
                   const std::vector<double>& macro_interferers, double noise_mw,
                   double bandwidth_hz) {
  const double loss = macro ? macro_path_loss(macro_link) : femto_path_loss(femto_link);
  std::string out = "path_loss_db: " + fmt4(loss) + "\n";

  bool have_snir = false;
  double snir = 0.0;
  if (pt_set) {
    const double pt_dbm = macro ? macro_link.pt_dbm : femto_link.pt_dbm;
    const double received = received_power_dbm(pt_dbm, loss);
    out += "received_dbm: " + fmt4(received) + "\n";
    if (noise_mw > 0.0 || !femto_interferers.empty() || !macro_interferers.empty()) {
      snir = snir_db(InterferenceField{dbm_to_mw(received), femto_interferers, macro_interferers,
                                       noise_mw});
      out += "snir_db: " + fmt4(snir) + "\n";
      have_snir = true;
    }
  }
  if (bandwidth_hz > 0.0 && have_snir) {
    const double capacity = channel_capacity_bps(ChannelAllocation{bandwidth_hz}, snir);
    out += "capacity_mbps: " + fmt4(capacity / 1e6) + "\n";
  }
  write_output("", out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"service-aware macrocell/femtocell handover decision toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  // decide
  auto* decide = app.add_subcommand("decide", "one-shot handover decision");
  std::string decide_service;
  int decide_case = 1;
  Measurements meas{};
  CommonOptions decide_opts;
  decide->add_option("service", decide_service, "voice|video|data")->required();
  decide->add_option("case", decide_case, "1 = MS in macrocell, 2 = MS in femtocell")
      ->required()
      ->check(CLI::Range(1, 2));
  decide->add_option("--femto-rssi", meas.femto.rssi, "dBm")->required();
  decide->add_option("--femto-rate", meas.femto.rate, "Mbps")->required();
  decide->add_option("--femto-velocity", meas.femto.velocity, "km/h")->required();
  decide->add_option("--femto-snir", meas.femto.snir, "dB")->required();
  decide->add_option("--macro-rssi", meas.macro.rssi, "dBm")->required();
  decide->add_option("--macro-rate", meas.macro.rate, "Mbps")->required();
  decide->add_option("--macro-velocity", meas.macro.velocity, "km/h")->required();
  decide->add_option("--macro-snir", meas.macro.snir, "dB")->required();
  decide_opts.add_to(*decide, false);
  decide->callback([&] { rc = run_decide(decide_service, decide_case, meas, decide_opts); });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "handover factors vs velocity, CSV output");
  std::string sweep_service, sweep_preset, sweep_output;
  double sweep_vmin = 0.0, sweep_vmax = 20.0;
  CommonOptions sweep_opts;
  sweep->add_option("service", sweep_service, "voice|video|data")->required();
  sweep->add_option("preset", sweep_preset, "condition preset, e.g. fig8-high")->required();
  sweep->add_option("--v-min", sweep_vmin, "km/h");
  sweep->add_option("--v-max", sweep_vmax, "km/h");
  sweep->add_option("--output,-o", sweep_output, "write CSV here instead of stdout");
  sweep_opts.add_to(*sweep, true);
  sweep->callback([&] {
    rc = run_sweep_cmd(sweep_service, sweep_preset, sweep_vmin, sweep_vmax, sweep_output,
                       sweep_opts);
  });

  // rules export | validate
  auto* rules = app.add_subcommand("rules", "rule-table export and validation");
  rules->require_subcommand(1);
  auto* rules_export = rules->add_subcommand("export", "write the default 81-rule table");
  std::string rules_output;
  rules_export->add_option("--output,-o", rules_output, "write here instead of stdout");
  rules_export->callback([&] { rc = run_rules_export(rules_output); });
  auto* rules_validate = rules->add_subcommand("validate", "check a rule file");
  std::string rules_path;
  rules_validate->add_option("file", rules_path, "rule file to check")->required();
  rules_validate->callback([&] { rc = run_rules_validate(rules_path); });

  // linkbudget macro | femto
  auto* linkbudget = app.add_subcommand("linkbudget", "path loss, received power, SNIR, capacity");
  linkbudget->require_subcommand(1);
  MacroLink macro_link{};
  FemtoLink femto_link{};
  std::vector<double> lb_femto_interf, lb_macro_interf;
  double lb_noise_mw = 0.0, lb_bandwidth_hz = 0.0;

  auto* lb_macro = linkbudget->add_subcommand("macro", "macrocell link");
  lb_macro->add_option("--fc", macro_link.fc_mhz, "carrier frequency, MHz")->required();
  lb_macro->add_option("--hb", macro_link.hb_m, "base-station height, m")->required();
  lb_macro->add_option("--hm", macro_link.hm_m, "mobile height, m")->required();
  lb_macro->add_option("--d", macro_link.d_km, "BS-MS distance, km")->required();
  lb_macro->add_option("--lsh", macro_link.lsh_db, "shadowing offset, dB");
  auto* lb_macro_pt = lb_macro->add_option("--pt", macro_link.pt_dbm, "transmit power, dBm");
  lb_macro->add_option("--noise-mw", lb_noise_mw, "noise power, mW");
  lb_macro->add_option("--femto-interferer-mw", lb_femto_interf, "interfering femtocell power, mW");
  lb_macro->add_option("--macro-interferer-mw", lb_macro_interf, "interfering macrocell power, mW");
  lb_macro->add_option("--bandwidth-hz", lb_bandwidth_hz, "allocated bandwidth, Hz");
  lb_macro->callback([&] {
    rc = run_linkbudget(true, macro_link, femto_link, lb_macro_pt->count() > 0, lb_femto_interf,
                        lb_macro_interf, lb_noise_mw, lb_bandwidth_hz);
  });

  auto* lb_femto = linkbudget->add_subcommand("femto", "femtocell link");
  lb_femto->add_option("--fc", femto_link.fc_mhz, "carrier frequency, MHz")->required();
  lb_femto->add_option("--d1", femto_link.d1_m, "FAP-MS distance, m")->required();
  lb_femto->add_option("--n", femto_link.n_exp, "distance-loss coefficient");
  auto* lb_femto_pt = lb_femto->add_option("--pt", femto_link.pt_dbm, "transmit power, dBm");
  lb_femto->add_option("--noise-mw", lb_noise_mw, "noise power, mW");
  lb_femto->add_option("--femto-interferer-mw", lb_femto_interf, "interfering femtocell power, mW");
  lb_femto->add_option("--macro-interferer-mw", lb_macro_interf, "interfering macrocell power, mW");
  lb_femto->add_option("--bandwidth-hz", lb_bandwidth_hz, "allocated bandwidth, Hz");
  lb_femto->callback([&] {
    rc = run_linkbudget(false, macro_link, femto_link, lb_femto_pt->count() > 0, lb_femto_interf,
                        lb_macro_interf, lb_noise_mw, lb_bandwidth_hz);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const hodec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
