#include "hodec/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace hodec {

const std::vector<ConditionPreset>& builtin_presets() {
  using L = InputLevel;
  // Fixed conditions per network while velocity sweeps. The suffix names the
  // overall signal environment the non-swept inputs are pinned to.
  static const std::vector<ConditionPreset> presets = {
      // strong coverage everywhere: both networks at full rssi/rate/snir
      {"fig8-high", {L::High, L::High, L::High}, {L::High, L::High, L::High}},
      // moderate environment: macro rssi/rate at medium, femto keeps strong
      // rssi but mid-level rate and snir; macro snir stays strong
      {"fig9-medium", {L::High, L::Medium, L::Medium}, {L::Medium, L::Medium, L::High}},
      // weak environment: macro degraded to low rssi/rate with mid snir,
      // femto strong rssi but low rate and snir
      {"fig10-low", {L::High, L::Low, L::Low}, {L::Low, L::Low, L::Medium}},
  };
  return presets;
}

const ConditionPreset& find_preset(std::string_view name) {
  for (const ConditionPreset& p : builtin_presets()) {
    if (p.name == name) return p;
  }
  std::string known;
  for (const ConditionPreset& p : builtin_presets()) {
    if (!known.empty()) known += ", ";
    known += p.name;
  }
  throw InvalidSpec("unknown preset '" + std::string(name) + "', expected one of: " + known);
}

namespace {

FuzzyInput resolve_conditions(const NetworkConditions& cond, const VariableSet& vars) {
  return FuzzyInput{
      .rssi = level_peak(vars.rssi, cond.rssi),
      .rate = level_peak(vars.rate, cond.rate),
      .velocity = 0.0,  // filled per sweep sample
      .snir = level_peak(vars.snir, cond.snir),
  };
}

// linear interpolation of both curves at velocity v
std::pair<double, double> gammas_at(std::span<const SweepSample> samples, double v) {
  if (v <= samples.front().velocity) {
    return {samples.front().gamma_f, samples.front().gamma_m};
  }
  if (v >= samples.back().velocity) {
    return {samples.back().gamma_f, samples.back().gamma_m};
  }
  const auto it = std::upper_bound(samples.begin(), samples.end(), v,
                                   [](double x, const SweepSample& s) { return x < s.velocity; });
  const SweepSample& hi = *it;
  const SweepSample& lo = *(it - 1);
  const double t = (v - lo.velocity) / (hi.velocity - lo.velocity);
  return {lo.gamma_f + t * (hi.gamma_f - lo.gamma_f), lo.gamma_m + t * (hi.gamma_m - lo.gamma_m)};
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  if (!(spec.v_min < spec.v_max) || !(spec.step > 0.0)) {
    throw InvalidSpec("sweep needs v_min < v_max and step > 0");
  }
  if ((spec.v_max - spec.v_min) / spec.step < 2.0) {
    throw InvalidSpec("sweep needs at least three samples; shrink the step");
  }

  const VariableSet fvars =
      build_variables(spec.profiles.lookup(spec.service, NetworkKind::Femtocell));
  const VariableSet mvars =
      build_variables(spec.profiles.lookup(spec.service, NetworkKind::Macrocell));
  FuzzyInput fin = resolve_conditions(spec.preset.femto, fvars);
  FuzzyInput min = resolve_conditions(spec.preset.macro, mvars);

  const int n = static_cast<int>(std::floor((spec.v_max - spec.v_min) / spec.step + 1e-9)) + 1;
  SweepResult result;
  result.samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double v = std::min(spec.v_min + i * spec.step, spec.v_max);
    fin.velocity = v;
    min.velocity = v;
    const double gamma_f = defuzzify_centroid(infer(spec.rulebase, fin, fvars));
    const double gamma_m = defuzzify_centroid(infer(spec.rulebase, min, mvars));
    result.samples.push_back(SweepSample{v, gamma_f, gamma_m});
  }
  result.intersections = find_intersections(result.samples);
  result.segments = preferred_segments(result.samples, result.intersections, spec.config);
  return result;
}

std::vector<double> find_intersections(std::span<const SweepSample> samples) {
  std::vector<double> out;
  const size_t n = samples.size();
  if (n < 2) return out;
  const auto diff = [&](size_t i) { return samples[i].gamma_f - samples[i].gamma_m; };

  size_t zeros = 0;
  for (size_t i = 0; i < n; ++i) zeros += diff(i) == 0.0;
  if (zeros == n) return out;  // identical curves, no crossing event

  for (size_t i = 0; i < n;) {
    if (diff(i) == 0.0) {
      // a touch; collapse a run of exact zeros into one report
      size_t j = i;
      while (j + 1 < n && diff(j + 1) == 0.0) ++j;
      out.push_back(0.5 * (samples[i].velocity + samples[j].velocity));
      i = j + 1;
      continue;
    }
    if (i + 1 < n && diff(i + 1) != 0.0 && (diff(i) > 0.0) != (diff(i + 1) > 0.0)) {
      const double di = diff(i);
      const double dj = diff(i + 1);
      const double t = di / (di - dj);
      out.push_back(samples[i].velocity + t * (samples[i + 1].velocity - samples[i].velocity));
    }
    ++i;
  }
  return out;
}

std::vector<Segment> preferred_segments(std::span<const SweepSample> samples,
                                        std::span<const double> intersections,
                                        const DecisionConfig& cfg) {
  std::vector<Segment> out;
  if (samples.empty()) return out;
  const double v_lo = samples.front().velocity;
  const double v_hi = samples.back().velocity;
  constexpr double kBoundaryEps = 1e-9;

  std::vector<double> bounds{v_lo};
  for (double v : intersections) {
    if (v > bounds.back() + kBoundaryEps && v < v_hi - kBoundaryEps) bounds.push_back(v);
  }
  bounds.push_back(v_hi);

  for (size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double mid = 0.5 * (bounds[i] + bounds[i + 1]);
    const auto [gf, gm] = gammas_at(samples, mid);
    const HandoverOutcome outcome = decide_case2(HandoverFactor{gf, NetworkKind::Femtocell},
                                                 HandoverFactor{gm, NetworkKind::Macrocell}, cfg);
    const NetworkKind preferred = outcome.verdict == Verdict::HandoverToFemto
                                      ? NetworkKind::Femtocell
                                      : NetworkKind::Macrocell;
    out.push_back(Segment{bounds[i], bounds[i + 1], preferred});
  }
  return out;
}

void export_csv(const SweepResult& result, std::ostream& os) {
  os << "velocity_kmh,gamma_femto,gamma_macro\n";
  char line[96];
  for (const SweepSample& s : result.samples) {
    std::snprintf(line, sizeof line, "%.6f,%.6f,%.6f\n", s.velocity, s.gamma_f, s.gamma_m);
    os << line;
  }
  if (result.intersections.empty()) {
    os << "# intersections: none\n";
  } else {
    os << "# intersections: ";
    for (size_t i = 0; i < result.intersections.size(); ++i) {
      std::snprintf(line, sizeof line, "%s%.6f", i ? "," : "", result.intersections[i]);
      os << line;
    }
    os << "\n";
  }
  os.flush();
  if (!os) throw IoError("failed writing sweep csv");
}

}  // namespace hodec
