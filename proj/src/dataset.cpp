#include "fairicl/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <random>
#include <sstream>

#include "fairicl/errors.hpp"
#include "fairicl/util.hpp"

namespace fairicl {

namespace {

int parse_int(std::string_view tok, std::string_view column, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": column '" +
                     std::string(column) + "' is not an integer: '" +
                     std::string(tok) + "'");
  }
  return value;
}

std::int64_t parse_i64(std::string_view tok, std::string_view column, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": column '" +
                     std::string(column) + "' is not an integer: '" +
                     std::string(tok) + "'");
  }
  return value;
}

IncomeLabel parse_income(std::string_view tok, std::size_t line_no) {
  std::string t(tok);
  if (!t.empty() && t.back() == '.') t.pop_back();
  if (t == "<=50K") return IncomeLabel::LE50K;
  if (t == ">50K") return IncomeLabel::GT50K;
  throw LabelError("line " + std::to_string(line_no) + ": unknown income label '" +
                   std::string(tok) + "'");
}

struct ColumnMap {
  // Index into the row tokens for each canonical feature, plus income.
  std::array<std::size_t, 14> feature_idx{};
  std::size_t income_idx = 0;
  std::size_t width = 0;
};

ColumnMap map_schema(const std::vector<std::string>& schema) {
  ColumnMap m;
  m.width = schema.size();
  std::array<bool, 14> seen{};
  bool income_seen = false;
  for (std::size_t i = 0; i < schema.size(); ++i) {
    const std::string& name = schema[i];
    if (name == kIncomeColumn) {
      if (income_seen) throw ConfigError("schema repeats column 'income'");
      m.income_idx = i;
      income_seen = true;
      continue;
    }
    bool matched = false;
    for (std::size_t f = 0; f < kFeatureNames.size(); ++f) {
      if (name == kFeatureNames[f]) {
        if (seen[f]) throw ConfigError("schema repeats column '" + name + "'");
        m.feature_idx[f] = i;
        seen[f] = true;
        matched = true;
        break;
      }
    }
    if (!matched) throw ConfigError("schema names unknown column '" + name + "'");
  }
  for (std::size_t f = 0; f < kFeatureNames.size(); ++f) {
    if (!seen[f]) {
      throw ConfigError("schema is missing column '" + std::string(kFeatureNames[f]) + "'");
    }
  }
  if (!income_seen) throw ConfigError("schema is missing column 'income'");
  return m;
}

}  // namespace

RecordSet load_records(std::istream& in, const std::vector<std::string>& schema,
                       bool has_header, char sep) {
  ColumnMap cols = map_schema(schema);
  RecordSet out;
  std::string line;
  std::size_t line_no = 0;
  std::int64_t next_id = 0;
  bool header_pending = has_header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed(trim(line));
    if (trimmed.empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    std::vector<std::string> raw = split(line, sep);
    if (raw.size() != cols.width) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(cols.width) + " columns, got " +
                       std::to_string(raw.size()));
    }
    std::vector<std::string> tok(raw.size());
    bool has_null = false;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      tok[i] = std::string(trim(raw[i]));
      if (tok[i] == "?") has_null = true;
    }
    std::int64_t id = next_id++;
    if (has_null) continue;

    IndividualRecord r;
    r.record_id = id;
    r.age = parse_int(tok[cols.feature_idx[0]], kFeatureNames[0], line_no);
    r.workclass = tok[cols.feature_idx[1]];
    r.final_weight = parse_i64(tok[cols.feature_idx[2]], kFeatureNames[2], line_no);
    r.education = tok[cols.feature_idx[3]];
    r.education_number = parse_int(tok[cols.feature_idx[4]], kFeatureNames[4], line_no);
    r.marital_status = tok[cols.feature_idx[5]];
    r.occupation = tok[cols.feature_idx[6]];
    r.relationship = tok[cols.feature_idx[7]];
    r.race = tok[cols.feature_idx[8]];
    r.gender = tok[cols.feature_idx[9]];
    r.capital_gain = parse_int(tok[cols.feature_idx[10]], kFeatureNames[10], line_no);
    r.capital_loss = parse_int(tok[cols.feature_idx[11]], kFeatureNames[11], line_no);
    r.hours_per_week = parse_int(tok[cols.feature_idx[12]], kFeatureNames[12], line_no);
    r.native_country = tok[cols.feature_idx[13]];
    r.income = parse_income(tok[cols.income_idx], line_no);
    out.records.push_back(std::move(r));
  }
  return out;
}

RecordSet load_records_file(const std::string& path, const std::vector<std::string>& schema,
                            bool has_header, char sep) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open dataset file: " + path);
  return load_records(in, schema, has_header, sep);
}

Group group_of(const IndividualRecord& r, const ProtectedSpec& spec) {
  std::string value = to_lower(feature_value(r, spec.column));
  if (value == to_lower(spec.unprivileged_value)) return Group::Unprivileged;
  if (value == to_lower(spec.privileged_value)) return Group::Privileged;
  throw Error("record " + std::to_string(r.record_id) + ": value '" +
              feature_value(r, spec.column) + "' in column '" + spec.column +
              "' matches neither protected group value");
}

std::string feature_value(const IndividualRecord& r, std::string_view name) {
  if (name == "age") return std::to_string(r.age);
  if (name == "workclass") return r.workclass;
  if (name == "final weight") return std::to_string(r.final_weight);
  if (name == "education") return r.education;
  if (name == "education number") return std::to_string(r.education_number);
  if (name == "marital status") return r.marital_status;
  if (name == "occupation") return r.occupation;
  if (name == "relationship") return r.relationship;
  if (name == "race") return r.race;
  if (name == "gender") return r.gender;
  if (name == "capital gain") return std::to_string(r.capital_gain);
  if (name == "capital loss") return std::to_string(r.capital_loss);
  if (name == "hours per week") return std::to_string(r.hours_per_week);
  if (name == "native country") return r.native_country;
  throw Error("unknown feature name '" + std::string(name) + "'");
}

SplitResult stratified_split(const RecordSet& records, std::uint64_t seed,
                             const ProtectedSpec& spec) {
  // Stratum key -> indices into records.records, in input order.
  std::map<std::string, std::vector<std::size_t>> strata;
  for (std::size_t i = 0; i < records.records.size(); ++i) {
    const IndividualRecord& r = records.records[i];
    Group g = group_of(r, spec);
    std::string key = std::string(g == Group::Unprivileged ? spec.unprivileged_value
                                                           : spec.privileged_value) +
                      "|" + std::string(label_token(r.income));
    strata[key].push_back(i);
  }

  const std::array<std::string, 4> cells = {
      spec.unprivileged_value + "|" + std::string(label_token(IncomeLabel::LE50K)),
      spec.unprivileged_value + "|" + std::string(label_token(IncomeLabel::GT50K)),
      spec.privileged_value + "|" + std::string(label_token(IncomeLabel::LE50K)),
      spec.privileged_value + "|" + std::string(label_token(IncomeLabel::GT50K))};

  std::vector<char> picked(records.records.size(), 0);
  for (const std::string& key : cells) {
    auto it = strata.find(key);
    std::size_t have = it == strata.end() ? 0 : it->second.size();
    if (have < kTestCellSize) {
      throw InsufficientStratumError("stratum '" + key + "' has " + std::to_string(have) +
                                     " records, need " + std::to_string(kTestCellSize));
    }
    std::vector<std::size_t>& idx = it->second;
    // Sub-seed per stratum so adding records to one cell cannot shift the
    // draws of another.
    std::mt19937_64 rng(seed ^ fnv1a64(key));
    // Partial Fisher-Yates: the first kTestCellSize slots become the sample.
    for (std::size_t i = 0; i < kTestCellSize; ++i) {
      std::size_t j = i + static_cast<std::size_t>(bounded_draw(rng, idx.size() - i));
      std::swap(idx[i], idx[j]);
      picked[idx[i]] = 1;
    }
  }

  SplitResult out;
  out.seed = seed;
  for (std::size_t i = 0; i < records.records.size(); ++i) {
    if (picked[i]) {
      out.test_set.records.push_back(records.records[i]);
    } else {
      out.demo_pool.records.push_back(records.records[i]);
    }
  }
  // picked[] walks input order, which for the test set is record_id order
  // already; sort anyway in case callers pass records out of id order.
  std::sort(out.test_set.records.begin(), out.test_set.records.end(),
            [](const IndividualRecord& a, const IndividualRecord& b) {
              return a.record_id < b.record_id;
            });
  return out;
}

std::string serialize_record(const IndividualRecord& r, bool include_label) {
  std::string out = "<";
  for (std::size_t f = 0; f < kFeatureNames.size(); ++f) {
    if (f > 0) out += ", ";
    out += kFeatureNames[f];
    out += ": ";
    out += feature_value(r, kFeatureNames[f]);
  }
  if (include_label) {
    out += ", income: ";
    out += label_token(r.income);
  }
  out += ">";
  return out;
}

}  // namespace fairicl
