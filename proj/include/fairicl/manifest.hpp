#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairicl/dataset.hpp"
#include "fairicl/label.hpp"

namespace fairicl {

struct SplitManifestEntry {
  std::int64_t id = 0;
  Group group = Group::Privileged;
  IncomeLabel income = IncomeLabel::LE50K;
};

// The persisted split: gold labels and groups for the test set, plus the
// demonstration pool ids. Everything a report needs besides predictions.
struct SplitManifest {
  std::uint64_t seed = 0;
  ProtectedSpec spec;
  std::string dataset_path;  // informational
  std::vector<SplitManifestEntry> test;
  std::vector<std::int64_t> pool_ids;
};

SplitManifest make_manifest(const SplitResult& split, const ProtectedSpec& spec,
                            const std::string& dataset_path);

void save_manifest(const SplitManifest& m, const std::string& path);
SplitManifest load_manifest(const std::string& path);

// Content hash of the manifest file bytes; names the run directory and ties
// prediction files to the split they were made under.
std::string manifest_hash_hex(const std::string& path);

}  // namespace fairicl
