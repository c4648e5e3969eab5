#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fairicl/dataset.hpp"

namespace fairicl {

enum class FairnessDefinition {
  NoFairness,
  DemographicParity,
  EqualOpportunity,
  EqualizedOdds,
  OverallAccuracyEquality,
  TreatmentEquality,
  CausalDiscrimination,
  FairnessThroughUnawareness,
  GenericFairness,
};

inline constexpr std::size_t kDefinitionCount = 9;

// Canonical report order, matching the result tables.
inline constexpr std::array<FairnessDefinition, kDefinitionCount> kDefinitionOrder = {
    FairnessDefinition::NoFairness,
    FairnessDefinition::DemographicParity,
    FairnessDefinition::EqualOpportunity,
    FairnessDefinition::EqualizedOdds,
    FairnessDefinition::OverallAccuracyEquality,
    FairnessDefinition::TreatmentEquality,
    FairnessDefinition::CausalDiscrimination,
    FairnessDefinition::FairnessThroughUnawareness,
    FairnessDefinition::GenericFairness,
};

enum class RuleLevel { Abstract, Detailed };
enum class ShotMode { Zero, Few };

std::string_view definition_name(FairnessDefinition d);  // "Demographic Parity"
std::string_view definition_slug(FairnessDefinition d);  // "demographic_parity"
FairnessDefinition definition_from_name(std::string_view name);
FairnessDefinition definition_from_slug(std::string_view slug);

std::string_view level_name(RuleLevel l);  // "abstract" | "detailed"
RuleLevel level_from_name(std::string_view name);

std::string_view shot_name(ShotMode s);  // "zero" | "few"
ShotMode shot_from_name(std::string_view name);

struct FairnessRule {
  FairnessDefinition definition = FairnessDefinition::NoFairness;
  RuleLevel level = RuleLevel::Abstract;
  std::string text;  // empty for NoFairness
};

// The 18 rule texts, loaded from the bundled rules file. Quotes around
// 'gender' are straight in the stored texts.
class RuleSet {
 public:
  static RuleSet load(const std::string& path);

  const FairnessRule& rule(FairnessDefinition d, RuleLevel l) const;
  const std::string& rule_text(FairnessDefinition d, RuleLevel l) const;

 private:
  std::array<FairnessRule, kDefinitionCount * 2> rules_{};
};

// Fixed task text (tau) and the test-clause template (kappa).
std::string_view task_text();
std::string test_clause(const IndividualRecord& test_record);

struct PromptBundle {
  std::string task;
  std::vector<std::string> demonstrations;  // serialized records with labels
  std::string test_clause;
  FairnessRule rule;
  std::string rendered;
};

// Joins tau, the demonstration block, kappa, and the rule text with single
// blank lines. Empty parts (no demos, empty rule) contribute nothing. Throws
// CompositionError if demos exceed k.
PromptBundle compose_prompt(const IndividualRecord& test_record,
                            const std::vector<std::string>& demos,
                            const FairnessRule& rule, std::size_t k);

}  // namespace fairicl
