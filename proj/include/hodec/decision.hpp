#pragma once

// Handover factors and the two decision flows: case-1 (MS inside a macrocell)
// and case-2 (MS inside a femtocell).

#include <string_view>

#include "hodec/fuzzy.hpp"
#include "hodec/profiles.hpp"

namespace hodec {

struct Measurements {
  FuzzyInput femto;  // measured toward the candidate femtocell
  FuzzyInput macro;  // measured toward the macrocell
};

struct DecisionConfig {
  double gamma_threshold = 0.6;  // case-1 admission threshold
  double k_weight = 1.0;         // case-2 femtocell preference weight, > 0
};

struct HandoverFactor {
  double value;  // in [0,1]
  NetworkKind target;
};

enum class Verdict { HandoverToFemto, HandoverToMacro, StayInMacro };

std::string_view verdict_name(Verdict verdict);

struct HandoverOutcome {
  Verdict verdict;
  double gamma_f;
  double gamma_m;
};

// Builds the four variables for (service, target), runs inference and
// centroid defuzzification.
HandoverFactor handover_factor(const ProfileTable& profiles, ServiceType service,
                               NetworkKind target, const FuzzyInput& input,
                               const RuleBase& rb);  // MissingProfile
HandoverFactor handover_factor(ServiceType service, NetworkKind target,
                               const FuzzyInput& input, const RuleBase& rb);

// MS in macrocell: handover to the femtocell when gamma_f clears the
// threshold, or when it at least matches gamma_m; otherwise stay.
HandoverOutcome decide_case1(const HandoverFactor& gamma_f, const HandoverFactor& gamma_m,
                             const DecisionConfig& cfg);

// MS in femtocell: prefer the femtocell when gamma_m <= gamma_f or when the
// weighted factor k*gamma_f still reaches gamma_m; otherwise go to macro.
HandoverOutcome decide_case2(const HandoverFactor& gamma_f, const HandoverFactor& gamma_m,
                             const DecisionConfig& cfg);

}  // namespace hodec
