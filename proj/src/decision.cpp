#include "hodec/decision.hpp"

#include <cassert>

namespace hodec {

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::HandoverToFemto: return "handover-to-femto";
    case Verdict::HandoverToMacro: return "handover-to-macro";
    case Verdict::StayInMacro: return "stay-in-macro";
  }
  return "?";
}

HandoverFactor handover_factor(const ProfileTable& profiles, ServiceType service,
                               NetworkKind target, const FuzzyInput& input, const RuleBase& rb) {
  const VariableSet vars = build_variables(profiles.lookup(service, target));
  return HandoverFactor{defuzzify_centroid(infer(rb, input, vars)), target};
}

HandoverFactor handover_factor(ServiceType service, NetworkKind target, const FuzzyInput& input,
                               const RuleBase& rb) {
  return handover_factor(ProfileTable::builtin(), service, target, input, rb);
}

HandoverOutcome decide_case1(const HandoverFactor& gamma_f, const HandoverFactor& gamma_m,
                             const DecisionConfig& cfg) {
  assert(gamma_f.target == NetworkKind::Femtocell && gamma_m.target == NetworkKind::Macrocell);
  Verdict verdict = Verdict::StayInMacro;
  if (gamma_f.value >= cfg.gamma_threshold || gamma_f.value >= gamma_m.value) {
    verdict = Verdict::HandoverToFemto;
  }
  return HandoverOutcome{verdict, gamma_f.value, gamma_m.value};
}

HandoverOutcome decide_case2(const HandoverFactor& gamma_f, const HandoverFactor& gamma_m,
                             const DecisionConfig& cfg) {
  assert(gamma_f.target == NetworkKind::Femtocell && gamma_m.target == NetworkKind::Macrocell);
  Verdict verdict = Verdict::HandoverToMacro;
  if (gamma_m.value <= gamma_f.value || cfg.k_weight * gamma_f.value >= gamma_m.value) {
    verdict = Verdict::HandoverToFemto;
  }
  return HandoverOutcome{verdict, gamma_f.value, gamma_m.value};
}

}  // namespace hodec
