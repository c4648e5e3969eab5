#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fairicl/label.hpp"

namespace fairicl {

// Canonical feature names, in dataset column order. Serialization and the
// schema both use these exact spellings.
inline constexpr std::array<std::string_view, 14> kFeatureNames = {
    "age",          "workclass",      "final weight", "education",
    "education number", "marital status", "occupation",   "relationship",
    "race",         "gender",         "capital gain", "capital loss",
    "hours per week", "native country"};

inline constexpr std::string_view kIncomeColumn = "income";

// One census row. All fields are clean (no null marker) after loading.
struct IndividualRecord {
  int age = 0;
  std::string workclass;
  std::int64_t final_weight = 0;
  std::string education;
  int education_number = 0;
  std::string marital_status;
  std::string occupation;
  std::string relationship;
  std::string race;
  std::string gender;
  int capital_gain = 0;
  int capital_loss = 0;
  int hours_per_week = 0;
  std::string native_country;
  IncomeLabel income = IncomeLabel::LE50K;
  std::int64_t record_id = 0;
};

// Feature value by canonical name, formatted as it appears in serialization.
std::string feature_value(const IndividualRecord& r, std::string_view name);

struct RecordSet {
  std::vector<IndividualRecord> records;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
};

// Which column carries the protected attribute and how its two values map
// onto groups. Values compare case-insensitively.
struct ProtectedSpec {
  std::string column = "gender";
  std::string unprivileged_value = "Female";
  std::string privileged_value = "Male";
};

Group group_of(const IndividualRecord& r, const ProtectedSpec& spec);

struct SplitResult {
  RecordSet test_set;   // 4 x per_cell records, ordered by record_id
  RecordSet demo_pool;  // remaining records, input order
  std::uint64_t seed = 0;
};

// Records per (group x income) cell in the test set.
inline constexpr std::size_t kTestCellSize = 250;

// Parses a character-separated tabular stream. `schema` names the stream's
// columns in order using the canonical names plus "income"; it must cover all
// 15. Rows containing the null marker "?" in any column are dropped. Labels
// accept an optional trailing period. record_id is the 0-based data-row index
// in the input (dropped rows still consume an id).
RecordSet load_records(std::istream& in, const std::vector<std::string>& schema,
                       bool has_header, char sep = ',');

RecordSet load_records_file(const std::string& path, const std::vector<std::string>& schema,
                            bool has_header, char sep = ',');

// Samples kTestCellSize records uniformly without replacement from each
// (group x income) cell. Deterministic for a given (records, seed) on any
// platform. Throws InsufficientStratumError naming the first short cell.
SplitResult stratified_split(const RecordSet& records, std::uint64_t seed,
                             const ProtectedSpec& spec = {});

// "<age: 39, workclass: State-gov, ..., native country: United-States>",
// optionally with ", income: <=50K" appended inside the brackets.
std::string serialize_record(const IndividualRecord& r, bool include_label);

}  // namespace fairicl
