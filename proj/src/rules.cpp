#include "fairicl/rules.hpp"

#include <fstream>

#include <json.hpp>

#include "fairicl/errors.hpp"

namespace fairicl {

namespace {

struct DefinitionNames {
  FairnessDefinition def;
  std::string_view name;
  std::string_view slug;
};

constexpr std::array<DefinitionNames, kDefinitionCount> kNames = {{
    {FairnessDefinition::NoFairness, "No Fairness", "no_fairness"},
    {FairnessDefinition::DemographicParity, "Demographic Parity", "demographic_parity"},
    {FairnessDefinition::EqualOpportunity, "Equal Opportunity", "equal_opportunity"},
    {FairnessDefinition::EqualizedOdds, "Equalized Odds", "equalized_odds"},
    {FairnessDefinition::OverallAccuracyEquality, "Overall Accuracy Equality",
     "overall_accuracy_equality"},
    {FairnessDefinition::TreatmentEquality, "Treatment Equality", "treatment_equality"},
    {FairnessDefinition::CausalDiscrimination, "Causal Discrimination",
     "causal_discrimination"},
    {FairnessDefinition::FairnessThroughUnawareness, "Fairness through Unawareness",
     "fairness_through_unawareness"},
    {FairnessDefinition::GenericFairness, "Generic Fairness", "generic_fairness"},
}};

constexpr std::string_view kTaskText =
    "You are an assistant that predicts whether income of a person is <= $50K/yr or "
    "> $50K/yr. Task: Given the features of a person, enclosed in angle brackets <> "
    "your task is to classify the income of person as <=50K or >50K";

}  // namespace

std::string_view definition_name(FairnessDefinition d) {
  for (const auto& e : kNames) {
    if (e.def == d) return e.name;
  }
  throw Error("unknown fairness definition");
}

std::string_view definition_slug(FairnessDefinition d) {
  for (const auto& e : kNames) {
    if (e.def == d) return e.slug;
  }
  throw Error("unknown fairness definition");
}

FairnessDefinition definition_from_name(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.def;
  }
  throw ConfigError("unknown fairness definition name '" + std::string(name) + "'");
}

FairnessDefinition definition_from_slug(std::string_view slug) {
  for (const auto& e : kNames) {
    if (e.slug == slug) return e.def;
  }
  throw ConfigError("unknown fairness definition slug '" + std::string(slug) + "'");
}

std::string_view level_name(RuleLevel l) {
  return l == RuleLevel::Abstract ? "abstract" : "detailed";
}

RuleLevel level_from_name(std::string_view name) {
  if (name == "abstract") return RuleLevel::Abstract;
  if (name == "detailed") return RuleLevel::Detailed;
  throw ConfigError("unknown rule level '" + std::string(name) + "'");
}

std::string_view shot_name(ShotMode s) { return s == ShotMode::Zero ? "zero" : "few"; }

ShotMode shot_from_name(std::string_view name) {
  if (name == "zero") return ShotMode::Zero;
  if (name == "few") return ShotMode::Few;
  throw ConfigError("unknown shot mode '" + std::string(name) + "'");
}

namespace {

std::size_t rule_slot(FairnessDefinition d, RuleLevel l) {
  return static_cast<std::size_t>(d) * 2 + (l == RuleLevel::Detailed ? 1 : 0);
}

}  // namespace

RuleSet RuleSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open rules file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("rules file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.contains("rules") || !doc["rules"].is_array()) {
    throw ConfigError("rules file lacks a 'rules' array");
  }

  RuleSet out;
  std::array<bool, kDefinitionCount * 2> seen{};
  for (const auto& entry : doc["rules"]) {
    FairnessDefinition d = definition_from_name(entry.at("definition").get<std::string>());
    RuleLevel l = level_from_name(entry.at("level").get<std::string>());
    std::string text = entry.at("text").get<std::string>();
    std::size_t slot = rule_slot(d, l);
    if (seen[slot]) {
      throw ConfigError("rules file repeats (" + std::string(definition_name(d)) + ", " +
                        std::string(level_name(l)) + ")");
    }
    seen[slot] = true;
    if (d == FairnessDefinition::NoFairness && !text.empty()) {
      throw ConfigError("No Fairness rule text must be empty");
    }
    if (d != FairnessDefinition::NoFairness && text.empty()) {
      throw ConfigError("rule text for " + std::string(definition_name(d)) + "/" +
                        std::string(level_name(l)) + " is empty");
    }
    out.rules_[slot] = FairnessRule{d, l, std::move(text)};
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      FairnessDefinition d = static_cast<FairnessDefinition>(i / 2);
      RuleLevel l = i % 2 == 0 ? RuleLevel::Abstract : RuleLevel::Detailed;
      throw ConfigError("rules file is missing (" + std::string(definition_name(d)) +
                        ", " + std::string(level_name(l)) + ")");
    }
  }
  return out;
}

const FairnessRule& RuleSet::rule(FairnessDefinition d, RuleLevel l) const {
  return rules_[rule_slot(d, l)];
}

const std::string& RuleSet::rule_text(FairnessDefinition d, RuleLevel l) const {
  return rule(d, l).text;
}

std::string_view task_text() { return kTaskText; }

std::string test_clause(const IndividualRecord& test_record) {
  return "Classify following person " + serialize_record(test_record, false) +
         ". Response Format: Give output only as <=50K or >50K";
}

PromptBundle compose_prompt(const IndividualRecord& test_record,
                            const std::vector<std::string>& demos,
                            const FairnessRule& rule, std::size_t k) {
  if (demos.size() > k) {
    throw CompositionError("demo list has " + std::to_string(demos.size()) +
                           " entries, configured k is " + std::to_string(k));
  }
  PromptBundle out;
  out.task = std::string(kTaskText);
  out.demonstrations = demos;
  out.test_clause = test_clause(test_record);
  out.rule = rule;

  out.rendered = out.task;
  if (!demos.empty()) {
    out.rendered += "\n\nExamples:";
    for (const std::string& d : demos) {
      out.rendered += "\n";
      out.rendered += d;
    }
  }
  out.rendered += "\n\n";
  out.rendered += out.test_clause;
  if (!rule.text.empty()) {
    out.rendered += "\n\n";
    out.rendered += rule.text;
  }
  return out;
}

}  // namespace fairicl
