#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairicl/metrics.hpp"

namespace fairicl {

// One rendered block: a (model, shot mode, rule level) setup with its
// per-definition rows and the average over the non-baseline rows.
struct ReportSection {
  std::string model;
  std::string shot;   // "zero" | "few"
  std::string level;  // "abstract" | "detailed"
  std::vector<FairnessReport> rows;  // canonical definition order
  std::optional<AggregateRow> average;
};

// "0.65", or the sentinels: infinite -> U+221E, undefined -> U+2014.
std::string format_metric(const MetricValue& v);

// Aligned text tables, one section per setup. Column order mirrors the
// result tables: Accuracy, F1, then the six deviation columns. The average
// row carries an arrow and delta against the No Fairness baseline row; for
// fairness columns a decrease is the improvement, for performance columns an
// increase is. Rows with no parsed predictions render "-" in every cell.
std::string render_text(const std::vector<ReportSection>& sections);

// Flat machine-readable table, one row per (setup, definition) plus one
// Average row per setup; raw ratios, deviations, flags, and counts.
std::string render_tsv(const std::vector<ReportSection>& sections);

}  // namespace fairicl
