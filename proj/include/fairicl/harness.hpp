#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fairicl/config.hpp"
#include "fairicl/manifest.hpp"
#include "fairicl/report_render.hpp"
#include "fairicl/retrieval.hpp"

namespace fairicl {

// Clock injection point so tests can pin timestamps.
using Clock = std::function<std::string()>;
Clock system_clock_iso8601();

struct RunOutcome {
  std::string run_dir;
  int cells_completed = 0;
  std::int64_t records_appended = 0;
  std::int64_t records_skipped = 0;  // already present before this invocation
};

// Runs the configured grid cell by cell, appending one line-delimited record
// per (definition, test instance). Present record_ids are skipped, so a
// killed run resumes cleanly. The provider and embedder are passed in so
// callers control the transport; embedder may be null in zero-shot mode.
RunOutcome run_experiment(const ExperimentConfig& cfg, ChatProvider& provider,
                          EmbeddingProvider* embedder,
                          const Clock& clock = system_clock_iso8601());

// Convenience wrapper constructing providers from the config.
RunOutcome run_experiment(const ExperimentConfig& cfg,
                          const Clock& clock = system_clock_iso8601());

// Computes a FairnessReport per prediction file in run_dir, grouped into
// sections by (model, shot, level) with an average row over the non-baseline
// definitions. Throws ReportError when a section lacks a definition or a
// file is missing test records.
std::vector<ReportSection> build_report(const std::string& run_dir,
                                        const SplitManifest& manifest);

// Recomputes metrics from externally supplied prediction files and tabulates
// absolute differences against expected rows (TSV: model, shot, rules,
// definition, then the eight report columns). Returns the comparison table.
std::string validate_fixture(const std::string& predictions_dir,
                             const SplitManifest& manifest,
                             const std::string& expected_tsv_path);

// Prediction file name for one grid cell, derived from the cell identity.
std::string prediction_file_name(const std::string& model, ShotMode shot, RuleLevel level,
                                 FairnessDefinition def);

}  // namespace fairicl
