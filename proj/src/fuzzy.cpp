#include "hodec/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hodec {

namespace {

std::string describe(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Triangular::Triangular(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || a > b || b > c || a >= c) {
    throw InvalidRange("triangular membership needs a <= b <= c with a < c, got (" +
                       describe(a) + ", " + describe(b) + ", " + describe(c) + ")");
  }
}

Gaussian::Gaussian(double center_, double sigma_) : center(center_), sigma(sigma_) {
  if (!std::isfinite(center) || !(sigma > 0.0)) {
    throw InvalidRange("gaussian membership needs sigma > 0, got sigma = " + describe(sigma));
  }
}

double membership_degree(const MembershipFunction& mf, double x) {
  if (const auto* t = std::get_if<Triangular>(&mf)) {
    if (x < t->a || x > t->c) return 0.0;
    if (x == t->b) return 1.0;
    if (x < t->b) return (x - t->a) / (t->b - t->a);
    return (t->c - x) / (t->c - t->b);
  }
  const auto& g = std::get<Gaussian>(mf);
  const double z = (x - g.center) / g.sigma;
  return std::exp(-0.5 * z * z);
}

double peak_point(const MembershipFunction& mf) {
  if (const auto* t = std::get_if<Triangular>(&mf)) return t->b;
  return std::get<Gaussian>(mf).center;
}

std::string_view level_name(InputLevel level) {
  switch (level) {
    case InputLevel::Low: return "low";
    case InputLevel::Medium: return "medium";
    case InputLevel::High: return "high";
  }
  return "?";
}

std::string_view category_name(OutputCategory category) {
  switch (category) {
    case OutputCategory::Lower: return "lower";
    case OutputCategory::Low: return "low";
    case OutputCategory::LowerMedium: return "lower_medium";
    case OutputCategory::HigherMedium: return "higher_medium";
    case OutputCategory::High: return "high";
    case OutputCategory::Higher: return "higher";
  }
  return "?";
}

InputLevel parse_level(std::string_view token) {
  if (token == "low") return InputLevel::Low;
  if (token == "medium") return InputLevel::Medium;
  if (token == "high") return InputLevel::High;
  throw ParseError("unknown level '" + std::string(token) + "', expected low|medium|high");
}

OutputCategory parse_category(std::string_view token) {
  for (int c = 0; c < kNumCategories; ++c) {
    if (token == category_name(static_cast<OutputCategory>(c))) {
      return static_cast<OutputCategory>(c);
    }
  }
  throw ParseError("unknown category '" + std::string(token) +
                   "', expected lower|low|lower_medium|higher_medium|high|higher");
}

Gaussian output_category_mf(OutputCategory category) {
  return Gaussian(0.2 * static_cast<int>(category), 0.10);
}

FuzzyVariable standard_variable(std::string name, double lo, double hi, AxisDirection direction) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo >= hi) {
    throw InvalidRange("variable '" + name + "' needs lo < hi, got [" + describe(lo) + ", " +
                       describe(hi) + "]");
  }
  const double mid = 0.5 * (lo + hi);
  return FuzzyVariable{
      .name = std::move(name),
      .umin = lo,
      .umax = hi,
      .partitions = {Triangular(lo, lo, mid), Triangular(lo, mid, hi), Triangular(mid, hi, hi)},
      .direction = direction,
  };
}

namespace {

// Mirror the membership function across the universe midpoint. Evaluating the
// mirrored function at x equals evaluating the original on the reversed axis,
// without the rounding noise of reflecting x itself.
MembershipFunction reflect(const MembershipFunction& mf, double lo, double hi) {
  if (const auto* t = std::get_if<Triangular>(&mf)) {
    return Triangular(lo + hi - t->c, lo + hi - t->b, lo + hi - t->a);
  }
  const auto& g = std::get<Gaussian>(mf);
  return Gaussian(lo + hi - g.center, g.sigma);
}

}  // namespace

LevelDegrees fuzzify(const FuzzyVariable& var, double x) {
  const double v = std::clamp(x, var.umin, var.umax);
  const bool descending = var.direction == AxisDirection::Descending;
  LevelDegrees out;
  for (int l = 0; l < kNumLevels; ++l) {
    out.degree[l] = descending
                        ? membership_degree(reflect(var.partitions[l], var.umin, var.umax), v)
                        : membership_degree(var.partitions[l], v);
  }
  return out;
}

double level_peak(const FuzzyVariable& var, InputLevel level) {
  const double peak = peak_point(var.partitions[static_cast<int>(level)]);
  if (var.direction == AxisDirection::Descending) return var.umin + var.umax - peak;
  return peak;
}

int antecedent_index(const Antecedent& antecedent) {
  int idx = 0;
  for (InputLevel l : antecedent) idx = idx * kNumLevels + static_cast<int>(l);
  return idx;
}

Antecedent antecedent_from_index(int index) {
  Antecedent a{};
  for (int slot = kNumInputs - 1; slot >= 0; --slot) {
    a[slot] = static_cast<InputLevel>(index % kNumLevels);
    index /= kNumLevels;
  }
  return a;
}

RuleBase::RuleBase(const std::array<OutputCategory, kRuleCount>& consequents)
    : consequents_(consequents) {}

RuleBase RuleBase::from_rules(const std::vector<Rule>& rules) {
  std::array<OutputCategory, kRuleCount> consequents{};
  std::array<bool, kRuleCount> seen{};
  for (const Rule& r : rules) {
    const int idx = antecedent_index(r.antecedent);
    if (seen[idx]) {
      throw DuplicateAntecedent("duplicate antecedent " + std::string(level_name(r.antecedent[0])) +
                                "," + std::string(level_name(r.antecedent[1])) + "," +
                                std::string(level_name(r.antecedent[2])) + "," +
                                std::string(level_name(r.antecedent[3])));
    }
    seen[idx] = true;
    consequents[idx] = r.consequent;
  }
  const auto count = static_cast<int>(std::count(seen.begin(), seen.end(), true));
  if (count != kRuleCount) {
    throw IncompleteRuleBase("incomplete rule base: " + std::to_string(count) + "/" +
                             std::to_string(kRuleCount) + " rules");
  }
  return RuleBase(consequents);
}

OutputCategory RuleBase::consequent(const Antecedent& antecedent) const {
  return consequents_[antecedent_index(antecedent)];
}

std::vector<Rule> RuleBase::rules() const {
  std::vector<Rule> out;
  out.reserve(kRuleCount);
  for (int idx = 0; idx < kRuleCount; ++idx) {
    out.push_back(Rule{antecedent_from_index(idx), consequents_[idx]});
  }
  return out;
}

namespace {

// score -> category; snir carries double weight, so scores run 0..10
constexpr std::array<OutputCategory, 11> kScoreToCategory = {
    OutputCategory::Lower,         // 0
    OutputCategory::Low,           // 1
    OutputCategory::Low,           // 2
    OutputCategory::LowerMedium,   // 3
    OutputCategory::LowerMedium,   // 4
    OutputCategory::HigherMedium,  // 5
    OutputCategory::High,          // 6
    OutputCategory::High,          // 7
    OutputCategory::High,          // 8
    OutputCategory::Higher,        // 9
    OutputCategory::Higher,        // 10
};

}  // namespace

RuleBase synthesize_default_rulebase() {
  std::array<OutputCategory, kRuleCount> consequents{};
  for (int idx = 0; idx < kRuleCount; ++idx) {
    const Antecedent a = antecedent_from_index(idx);
    const int score = static_cast<int>(a[0]) + static_cast<int>(a[1]) + static_cast<int>(a[2]) +
                      2 * static_cast<int>(a[3]);
    consequents[idx] = kScoreToCategory[score];
  }
  return RuleBase(consequents);
}

std::array<Rule, 4> anchor_rules() {
  using L = InputLevel;
  return {{
      {{L::Low, L::Low, L::Low, L::Low}, OutputCategory::Lower},
      {{L::Low, L::High, L::High, L::Low}, OutputCategory::LowerMedium},
      {{L::Medium, L::High, L::Medium, L::Medium}, OutputCategory::High},
      {{L::High, L::High, L::High, L::High}, OutputCategory::Higher},
  }};
}

Rule parse_rule_line(std::string_view line) {
  const size_t arrow = line.find("->");
  if (arrow == std::string_view::npos) {
    throw ParseError("missing '->' in rule line '" + std::string(trim(line)) + "'");
  }
  std::string_view lhs = trim(line.substr(0, arrow));
  std::string_view rhs = trim(line.substr(arrow + 2));

  Antecedent antecedent{};
  for (int slot = 0; slot < kNumInputs; ++slot) {
    const size_t comma = lhs.find(',');
    if ((comma == std::string_view::npos) != (slot == kNumInputs - 1)) {
      throw ParseError("rule antecedent must have exactly four levels, got '" +
                       std::string(trim(line.substr(0, arrow))) + "'");
    }
    antecedent[slot] = parse_level(trim(lhs.substr(0, comma)));
    if (comma != std::string_view::npos) lhs.remove_prefix(comma + 1);
  }
  return Rule{antecedent, parse_category(rhs)};
}

RuleBase load_rulebase(std::string_view text) {
  std::vector<Rule> rules;
  rules.reserve(kRuleCount);
  size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    try {
      rules.push_back(parse_rule_line(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return RuleBase::from_rules(rules);
}

std::string serialize_rulebase(const RuleBase& rb) {
  std::string out;
  out.reserve(kRuleCount * 32);
  for (const Rule& r : rb.rules()) {
    out.append(level_name(r.antecedent[0]));
    out.push_back(',');
    out.append(level_name(r.antecedent[1]));
    out.push_back(',');
    out.append(level_name(r.antecedent[2]));
    out.push_back(',');
    out.append(level_name(r.antecedent[3]));
    out.append(" -> ");
    out.append(category_name(r.consequent));
    out.push_back('\n');
  }
  return out;
}

std::vector<std::array<Rule, 2>> monotonicity_violations(const RuleBase& rb) {
  std::vector<std::array<Rule, 2>> out;
  for (int idx = 0; idx < kRuleCount; ++idx) {
    const Antecedent a = antecedent_from_index(idx);
    for (int slot = 0; slot < kNumInputs; ++slot) {
      if (a[slot] == InputLevel::High) continue;
      Antecedent raised = a;
      raised[slot] = static_cast<InputLevel>(static_cast<int>(a[slot]) + 1);
      if (static_cast<int>(rb.consequent(raised)) < static_cast<int>(rb.consequent(a))) {
        out.push_back({Rule{a, rb.consequent(a)}, Rule{raised, rb.consequent(raised)}});
      }
    }
  }
  return out;
}

double rule_strength(const Antecedent& antecedent,
                     const std::array<LevelDegrees, kNumInputs>& degrees) {
  double strength = 1.0;
  for (int slot = 0; slot < kNumInputs; ++slot) {
    strength = std::min(strength, degrees[slot][antecedent[slot]]);
  }
  return strength;
}

double rule_strength(const Rule& rule, const std::array<LevelDegrees, kNumInputs>& degrees) {
  return rule_strength(rule.antecedent, degrees);
}

namespace {

struct CategoryCurves {
  std::vector<double> xs;
  std::array<std::vector<double>, kNumCategories> curve;
};

CategoryCurves make_category_curves(int resolution) {
  CategoryCurves cc;
  cc.xs.resize(resolution);
  for (int i = 0; i < resolution; ++i) cc.xs[i] = static_cast<double>(i) / (resolution - 1);
  for (int c = 0; c < kNumCategories; ++c) {
    const MembershipFunction mf = output_category_mf(static_cast<OutputCategory>(c));
    cc.curve[c].resize(resolution);
    for (int i = 0; i < resolution; ++i) cc.curve[c][i] = membership_degree(mf, cc.xs[i]);
  }
  return cc;
}

const CategoryCurves& default_category_curves() {
  static const CategoryCurves cc = make_category_curves(kDefaultResolution);
  return cc;
}

}  // namespace

AggregatedOutput infer(const RuleBase& rb, const FuzzyInput& input, const VariableSet& vars,
                       int resolution) {
  if (resolution < 3) {
    throw ResolutionTooCoarse("sampling resolution must be >= 3, got " +
                              std::to_string(resolution));
  }
  const std::array<LevelDegrees, kNumInputs> degrees = {
      fuzzify(vars.rssi, input.rssi),
      fuzzify(vars.rate, input.rate),
      fuzzify(vars.velocity, input.velocity),
      fuzzify(vars.snir, input.snir),
  };

  std::array<double, kNumCategories> activation{};
  for (int idx = 0; idx < kRuleCount; ++idx) {
    const Antecedent a = antecedent_from_index(idx);
    const double s = rule_strength(a, degrees);
    double& act = activation[static_cast<int>(rb.consequent(a))];
    act = std::max(act, s);
  }

  CategoryCurves local;
  const CategoryCurves* cc = &default_category_curves();
  if (resolution != kDefaultResolution) {
    local = make_category_curves(resolution);
    cc = &local;
  }

  AggregatedOutput agg;
  agg.x = cc->xs;
  agg.degree.assign(resolution, 0.0);
  for (int c = 0; c < kNumCategories; ++c) {
    if (activation[c] <= 0.0) continue;
    const auto& curve = cc->curve[c];
    for (int i = 0; i < resolution; ++i) {
      agg.degree[i] = std::max(agg.degree[i], std::min(activation[c], curve[i]));
    }
  }
  return agg;
}

double defuzzify_centroid(const AggregatedOutput& agg) {
  double mass = 0.0;
  double moment = 0.0;
  for (size_t i = 0; i < agg.x.size(); ++i) {
    mass += agg.degree[i];
    moment += agg.x[i] * agg.degree[i];
  }
  if (!(mass > 0.0)) throw ZeroMass("aggregated output has zero mass");
  return moment / mass;
}

}  // namespace hodec
