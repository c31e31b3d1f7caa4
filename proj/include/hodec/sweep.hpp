#pragma once

// Velocity-sweep simulator: evaluate both handover-factor curves over a
// velocity range under fixed network conditions, locate their intersections
// and classify preferred-network segments.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hodec/decision.hpp"

namespace hodec {

// Fixed inputs are given as level anchors; each resolves to that level's peak
// point in the variable's universe for the service under test.
struct NetworkConditions {
  InputLevel rssi;
  InputLevel rate;
  InputLevel snir;
};

struct ConditionPreset {
  std::string name;
  NetworkConditions femto;
  NetworkConditions macro;
};

const std::vector<ConditionPreset>& builtin_presets();
const ConditionPreset& find_preset(std::string_view name);  // InvalidSpec

struct SweepSpec {
  ServiceType service = ServiceType::Voice;
  ConditionPreset preset;
  double v_min = 0.0;   // km/h
  double v_max = 20.0;  // km/h
  double step = 0.1;    // km/h, (v_max - v_min) / step >= 2
  RuleBase rulebase = synthesize_default_rulebase();
  DecisionConfig config;
  ProfileTable profiles = ProfileTable::builtin();
};

struct SweepSample {
  double velocity;
  double gamma_f;
  double gamma_m;
};

struct Segment {
  double v_lo, v_hi;
  NetworkKind preferred;
};

struct SweepResult {
  std::vector<SweepSample> samples;        // sorted by velocity
  std::vector<double> intersections;       // within the sampled span
  std::vector<Segment> segments;           // partition of the sampled span
};

SweepResult run_sweep(const SweepSpec& spec);  // InvalidSpec / MissingProfile

// One velocity per sign change of (gamma_f - gamma_m), located by linear
// interpolation; an exact-zero touch is reported once. Identical curves
// (zero everywhere) yield no intersections.
std::vector<double> find_intersections(std::span<const SweepSample> samples);

// Preferred network per interval between boundary points, decided by the
// case-2 verdict at the interval midpoint (gammas linearly interpolated).
std::vector<Segment> preferred_segments(std::span<const SweepSample> samples,
                                        std::span<const double> intersections,
                                        const DecisionConfig& cfg);

// CSV: header `velocity_kmh,gamma_femto,gamma_macro`, 6-decimal fixed-point
// rows, then a trailing `# intersections: ...` comment line.
void export_csv(const SweepResult& result, std::ostream& os);  // IoError

}  // namespace hodec
