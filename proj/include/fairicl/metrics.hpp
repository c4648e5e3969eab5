#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fairicl/label.hpp"
#include "fairicl/metric_value.hpp"

namespace fairicl {

struct GroupConfusion {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t tn = 0;
  std::int64_t fn = 0;

  std::int64_t n() const { return tp + fp + tn + fn; }
  bool operator==(const GroupConfusion&) const = default;
};

// The six group ratios, each female-quantity over male-quantity.
struct RatioVector {
  MetricValue di;    // positive-classification rate ratio
  MetricValue tpr;   // true positive rate ratio
  MetricValue fpr;   // false positive rate ratio
  MetricValue ppv;   // positive predictive value ratio
  MetricValue for_;  // false omission rate ratio
  MetricValue acc;   // group accuracy ratio

  bool operator==(const RatioVector&) const = default;
};

// |1 - ratio| per metric, sentinels propagated.
struct DeviationVector {
  MetricValue di;
  MetricValue tpr;
  MetricValue fpr;
  MetricValue ppv;
  MetricValue for_;
  MetricValue acc;

  bool operator==(const DeviationVector&) const = default;
};

inline constexpr std::array<std::string_view, 6> kRatioNames = {
    "di", "tpr", "fpr", "ppv", "for", "acc"};

struct PerformanceScores {
  double macro_accuracy = 0.0;  // unweighted mean of per-class recall
  double macro_f1 = 0.0;        // unweighted mean of per-class F1

  bool operator==(const PerformanceScores&) const = default;
};

struct EightyPercentFlags {
  bool di = false;
  bool tpr = false;
  bool fpr = false;
  bool ppv = false;
  bool for_ = false;
  bool acc = false;

  bool operator==(const EightyPercentFlags&) const = default;
};

// Everything the renderer needs about one (definition, model, setup) cell.
struct FairnessReport {
  std::string model;
  std::string shot_mode;   // "zero" | "few"
  std::string rule_level;  // "abstract" | "detailed"
  std::string definition;  // display name, e.g. "Demographic Parity"
  RatioVector ratios;
  DeviationVector deviations;
  PerformanceScores performance;
  EightyPercentFlags eighty_percent;
  GroupConfusion female;
  GroupConfusion male;
  std::int64_t parsed_count = 0;
  std::int64_t refusal_count = 0;
};

// Averaged row across definitions; undefined entries track how many
// contributors were excluded.
struct AggregateRow {
  MetricValue macro_accuracy;
  MetricValue macro_f1;
  DeviationVector deviations;
  std::array<int, 6> undefined_excluded{};  // per kRatioNames order
  int report_count = 0;
};

std::pair<GroupConfusion, GroupConfusion> group_confusion(
    const std::vector<IncomeLabel>& predictions, const std::vector<IncomeLabel>& golds,
    const std::vector<Group>& groups);

RatioVector fairness_ratios(const GroupConfusion& f, const GroupConfusion& m);

DeviationVector deviations(const RatioVector& r);

PerformanceScores performance(const std::vector<IncomeLabel>& predictions,
                              const std::vector<IncomeLabel>& golds);

// true iff finite and <= 0.2.
EightyPercentFlags eighty_percent_check(const DeviationVector& d);
bool eighty_percent_pass(const MetricValue& deviation);

// Mean per column over the given reports. INFINITE absorbs the mean;
// UNDEFINED entries are excluded and counted. Throws on an empty list.
AggregateRow aggregate(const std::vector<FairnessReport>& reports);

}  // namespace fairicl
