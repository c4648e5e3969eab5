#include "fairicl/manifest.hpp"

#include <fstream>

#include <json.hpp>

#include "fairicl/errors.hpp"
#include "fairicl/util.hpp"

namespace fairicl {

SplitManifest make_manifest(const SplitResult& split, const ProtectedSpec& spec,
                            const std::string& dataset_path) {
  SplitManifest m;
  m.seed = split.seed;
  m.spec = spec;
  m.dataset_path = dataset_path;
  m.test.reserve(split.test_set.size());
  for (const IndividualRecord& r : split.test_set.records) {
    m.test.push_back(SplitManifestEntry{r.record_id, group_of(r, spec), r.income});
  }
  m.pool_ids.reserve(split.demo_pool.size());
  for (const IndividualRecord& r : split.demo_pool.records) {
    m.pool_ids.push_back(r.record_id);
  }
  return m;
}

void save_manifest(const SplitManifest& m, const std::string& path) {
  nlohmann::json test = nlohmann::json::array();
  for (const SplitManifestEntry& e : m.test) {
    test.push_back({{"group", e.group == Group::Unprivileged ? m.spec.unprivileged_value
                                                             : m.spec.privileged_value},
                    {"id", e.id},
                    {"income", std::string(label_token(e.income))}});
  }
  nlohmann::json doc{{"dataset_path", m.dataset_path},
                     {"pool_ids", m.pool_ids},
                     {"protected_column", m.spec.column},
                     {"privileged_value", m.spec.privileged_value},
                     {"seed", m.seed},
                     {"test", std::move(test)},
                     {"unprivileged_value", m.spec.unprivileged_value}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write manifest file: " + path);
  out << doc.dump(2) << "\n";
  if (!out) throw Error("short write to manifest file: " + path);
}

SplitManifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open manifest file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError("manifest is not valid JSON: " + std::string(e.what()));
  }
  SplitManifest m;
  try {
    m.seed = doc.at("seed").get<std::uint64_t>();
    m.spec.column = doc.at("protected_column").get<std::string>();
    m.spec.unprivileged_value = doc.at("unprivileged_value").get<std::string>();
    m.spec.privileged_value = doc.at("privileged_value").get<std::string>();
    m.dataset_path = doc.value("dataset_path", std::string());
    for (const auto& e : doc.at("test")) {
      SplitManifestEntry entry;
      entry.id = e.at("id").get<std::int64_t>();
      std::string group = e.at("group").get<std::string>();
      if (group == m.spec.unprivileged_value) {
        entry.group = Group::Unprivileged;
      } else if (group == m.spec.privileged_value) {
        entry.group = Group::Privileged;
      } else {
        throw IngestionError("manifest test entry for id " + std::to_string(entry.id) +
                             " has group '" + group + "' matching neither configured value");
      }
      std::string income = e.at("income").get<std::string>();
      if (income == label_token(IncomeLabel::LE50K)) {
        entry.income = IncomeLabel::LE50K;
      } else if (income == label_token(IncomeLabel::GT50K)) {
        entry.income = IncomeLabel::GT50K;
      } else {
        throw IngestionError("manifest test entry for id " + std::to_string(entry.id) +
                             " has unknown income '" + income + "'");
      }
      m.test.push_back(entry);
    }
    m.pool_ids = doc.at("pool_ids").get<std::vector<std::int64_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError("manifest is missing fields: " + std::string(e.what()));
  }
  return m;
}

std::string manifest_hash_hex(const std::string& path) {
  return to_hex(fnv1a64(read_file(path)));
}

}  // namespace fairicl
