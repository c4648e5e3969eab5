#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace fairicl {

// Binary income label; GT50K is the positive class everywhere.
enum class IncomeLabel { LE50K, GT50K };

// Protected-attribute group. The unprivileged group is the ratio numerator
// in every fairness metric (females in the reference dataset).
enum class Group { Unprivileged, Privileged };

// Outcome of parsing a model response.
enum class ParsedLabel { LE50K, GT50K, Refusal };

inline std::string_view label_token(IncomeLabel l) {
  return l == IncomeLabel::LE50K ? "<=50K" : ">50K";
}

inline std::string_view label_name(IncomeLabel l) {
  return l == IncomeLabel::LE50K ? "LE50K" : "GT50K";
}

inline std::string_view parsed_name(ParsedLabel p) {
  switch (p) {
    case ParsedLabel::LE50K: return "LE50K";
    case ParsedLabel::GT50K: return "GT50K";
    default: return "REFUSAL";
  }
}

inline std::optional<ParsedLabel> parsed_from_name(std::string_view s) {
  if (s == "LE50K") return ParsedLabel::LE50K;
  if (s == "GT50K") return ParsedLabel::GT50K;
  if (s == "REFUSAL") return ParsedLabel::Refusal;
  return std::nullopt;
}

inline std::optional<IncomeLabel> to_income(ParsedLabel p) {
  switch (p) {
    case ParsedLabel::LE50K: return IncomeLabel::LE50K;
    case ParsedLabel::GT50K: return IncomeLabel::GT50K;
    default: return std::nullopt;
  }
}

}  // namespace fairicl
