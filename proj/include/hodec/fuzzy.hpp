#pragma once

// Mamdani fuzzy-inference core: membership functions, linguistic variables,
// the 81-rule base, min/max inference and centroid defuzzification.

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hodec/errors.hpp"

namespace hodec {

inline constexpr int kNumLevels = 3;      // low / medium / high
inline constexpr int kNumCategories = 6;  // lower .. higher
inline constexpr int kNumInputs = 4;      // rssi, rate, velocity, snir
inline constexpr int kRuleCount = 81;     // 3^4 antecedent combinations
inline constexpr int kDefaultResolution = 1001;

struct Triangular {
  double a, b, c;  // feet and peak, a <= b <= c with a < c
  Triangular(double a, double b, double c);
  bool operator==(const Triangular&) const = default;
};

struct Gaussian {
  double center, sigma;  // sigma > 0
  Gaussian(double center, double sigma);
  bool operator==(const Gaussian&) const = default;
};

using MembershipFunction = std::variant<Triangular, Gaussian>;

double membership_degree(const MembershipFunction& mf, double x);
double peak_point(const MembershipFunction& mf);

enum class InputLevel : int { Low = 0, Medium = 1, High = 2 };
enum class OutputCategory : int {
  Lower = 0,
  Low = 1,
  LowerMedium = 2,
  HigherMedium = 3,
  High = 4,
  Higher = 5,
};

std::string_view level_name(InputLevel level);
std::string_view category_name(OutputCategory category);
InputLevel parse_level(std::string_view token);          // throws ParseError
OutputCategory parse_category(std::string_view token);   // throws ParseError

// Output partition: six gaussians with centers 0.0, 0.2, .., 1.0 and sigma 0.10.
Gaussian output_category_mf(OutputCategory category);

// On a descending axis larger crisp values map to lower linguistic levels
// (femtocell velocity: "high" peaks at 0 km/h).
enum class AxisDirection { Ascending, Descending };

struct FuzzyVariable {
  std::string name;
  double umin, umax;
  std::array<MembershipFunction, kNumLevels> partitions;  // indexed by InputLevel
  AxisDirection direction = AxisDirection::Ascending;
};

// Half-overlap partition over [lo, hi]:
//   low = tri(lo, lo, mid), medium = tri(lo, mid, hi), high = tri(mid, hi, hi).
FuzzyVariable standard_variable(std::string name, double lo, double hi,
                                AxisDirection direction = AxisDirection::Ascending);

struct LevelDegrees {
  std::array<double, kNumLevels> degree{};
  double operator[](InputLevel level) const { return degree[static_cast<int>(level)]; }
};

// Clamps x to the universe, then evaluates the three levels (on the reversed
// axis for descending variables).
LevelDegrees fuzzify(const FuzzyVariable& var, double x);

// Crisp point at which the level's membership reaches 1, direction-aware.
double level_peak(const FuzzyVariable& var, InputLevel level);

using Antecedent = std::array<InputLevel, kNumInputs>;  // rssi, rate, velocity, snir

struct Rule {
  Antecedent antecedent;
  OutputCategory consequent;
  bool operator==(const Rule&) const = default;
};

int antecedent_index(const Antecedent& antecedent);  // 0..80, rssi-major
Antecedent antecedent_from_index(int index);

// Complete rule table: one consequent for each of the 81 antecedents.
class RuleBase {
 public:
  explicit RuleBase(const std::array<OutputCategory, kRuleCount>& consequents);
  static RuleBase from_rules(const std::vector<Rule>& rules);

  OutputCategory consequent(const Antecedent& antecedent) const;
  std::vector<Rule> rules() const;  // canonical antecedent order
  bool operator==(const RuleBase&) const = default;

 private:
  std::array<OutputCategory, kRuleCount> consequents_{};
};

// Weighted-score table: score = idx(rssi) + idx(rate) + idx(velocity) +
// 2*idx(snir), mapped onto the six output categories. Monotone, covers all
// categories and reproduces the four anchor rules.
RuleBase synthesize_default_rulebase();

// The four rules any rule table for this controller is validated against.
std::array<Rule, 4> anchor_rules();

// Rule-file format: one `RSSI,RATE,VEL,SNIR -> CATEGORY` line per rule,
// `#` starts a comment, exactly 81 rule lines required.
Rule parse_rule_line(std::string_view line);        // throws ParseError
RuleBase load_rulebase(std::string_view text);      // ParseError / IncompleteRuleBase / DuplicateAntecedent
std::string serialize_rulebase(const RuleBase& rb);

// Pairs (rule, rule-with-one-level-raised) whose consequent order is inverted.
std::vector<std::array<Rule, 2>> monotonicity_violations(const RuleBase& rb);

struct FuzzyInput {
  double rssi;      // dBm
  double rate;      // Mbps
  double velocity;  // km/h
  double snir;      // dB
};

struct VariableSet {
  FuzzyVariable rssi, rate, velocity, snir;
};

double rule_strength(const Antecedent& antecedent,
                     const std::array<LevelDegrees, kNumInputs>& degrees);
double rule_strength(const Rule& rule, const std::array<LevelDegrees, kNumInputs>& degrees);

// Aggregated output set sampled uniformly over [0,1].
struct AggregatedOutput {
  std::vector<double> x;
  std::vector<double> degree;
};

// Mamdani min/max: clip each consequent at its rule strength, aggregate
// pointwise by max. Throws ResolutionTooCoarse when resolution < 3.
AggregatedOutput infer(const RuleBase& rb, const FuzzyInput& input, const VariableSet& vars,
                       int resolution = kDefaultResolution);

// Discrete centroid of the sampled curve. Throws ZeroMass when no rule fired.
double defuzzify_centroid(const AggregatedOutput& agg);

}  // namespace hodec
