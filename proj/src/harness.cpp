#include "fairicl/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fairicl/errors.hpp"
#include "fairicl/util.hpp"

namespace fs = std::filesystem;

namespace fairicl {

Clock system_clock_iso8601() {
  return [] { return iso8601_utc_now(); };
}

namespace {

std::string slugify(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                (c >= '0' && c <= '9') || c == '.' || c == '-';
    out.push_back(keep ? c : '_');
  }
  return out;
}

struct CellIdentity {
  std::string model;
  std::string shot;
  std::string level;
  std::string definition;
  std::string manifest_hash;
  int k = 0;
};

nlohmann::json header_json(const CellIdentity& id) {
  return nlohmann::json{{"definition", id.definition}, {"k", id.k},
                        {"level", id.level},           {"manifest_hash", id.manifest_hash},
                        {"model", id.model},           {"shot", id.shot}};
}

CellIdentity parse_header(const nlohmann::json& doc, const std::string& path) {
  try {
    CellIdentity id;
    id.definition = doc.at("definition").get<std::string>();
    id.k = doc.at("k").get<int>();
    id.level = doc.at("level").get<std::string>();
    id.manifest_hash = doc.at("manifest_hash").get<std::string>();
    id.model = doc.at("model").get<std::string>();
    id.shot = doc.at("shot").get<std::string>();
    return id;
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError("bad prediction header in " + path + ": " + e.what());
  }
}

struct PredictionLine {
  std::int64_t record_id = 0;
  ParsedLabel parsed = ParsedLabel::Refusal;
  std::string raw;
};

// One prediction file, already checked for line-level integrity. A trailing
// partial line (crash mid-append) is reported via `truncate_to` so the
// writer can drop it before resuming.
struct PredictionFile {
  CellIdentity cell;
  std::vector<PredictionLine> lines;
  std::set<std::int64_t> ids;
  std::size_t truncate_to = 0;  // byte size of the complete prefix
  bool has_partial_tail = false;
};

PredictionFile read_prediction_file(const std::string& path) {
  std::string content = read_file(path);
  PredictionFile out;
  if (content.empty()) throw IngestionError("prediction file is empty: " + path);

  std::size_t complete = content.rfind('\n');
  if (complete == std::string::npos) {
    throw IngestionError("prediction file has no complete line: " + path);
  }
  if (complete + 1 != content.size()) {
    out.has_partial_tail = true;
  }
  out.truncate_to = complete + 1;

  std::istringstream in(content.substr(0, out.truncate_to));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw IngestionError("bad JSON at " + path + ":" + std::to_string(line_no) + ": " +
                           e.what());
    }
    if (line_no == 1) {
      out.cell = parse_header(doc, path);
      continue;
    }
    PredictionLine p;
    try {
      p.record_id = doc.at("record_id").get<std::int64_t>();
      std::string parsed_text = doc.at("parsed").get<std::string>();
      auto parsed = parsed_from_name(parsed_text);
      if (!parsed) {
        throw IngestionError("unknown parsed label '" + parsed_text + "' at " + path +
                             ":" + std::to_string(line_no));
      }
      p.parsed = *parsed;
      p.raw = doc.value("raw", std::string());
    } catch (const nlohmann::json::exception& e) {
      throw IngestionError("bad prediction record at " + path + ":" +
                           std::to_string(line_no) + ": " + e.what());
    }
    if (!out.ids.insert(p.record_id).second) {
      throw IngestionError("duplicate record_id " + std::to_string(p.record_id) + " in " +
                           path);
    }
    out.lines.push_back(std::move(p));
  }
  if (line_no == 0) throw IngestionError("prediction file has no header: " + path);
  return out;
}

void append_run_manifest(const std::string& run_dir, const std::string& manifest_hash,
                         const nlohmann::json& config_snapshot, const Clock& clock,
                         const std::string& cell_file, std::int64_t progress,
                         bool new_invocation) {
  std::string path = run_dir + "/run_manifest.json";
  nlohmann::json doc;
  if (fs::exists(path)) {
    std::ifstream in(path);
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception&) {
      doc = nlohmann::json::object();  // rebuilt below; predictions stay authoritative
    }
  }
  if (!doc.contains("created")) doc["created"] = clock();
  doc["manifest_hash"] = manifest_hash;
  if (new_invocation) {
    if (!doc.contains("invocations")) doc["invocations"] = nlohmann::json::array();
    doc["invocations"].push_back({{"config", config_snapshot}, {"started", clock()}});
  }
  if (!cell_file.empty()) doc["progress"][cell_file] = progress;
  std::ofstream out(path);
  out << doc.dump(2) << "\n";
}

nlohmann::json config_snapshot(const ExperimentConfig& cfg, const std::string& model) {
  nlohmann::json defs = nlohmann::json::array();
  for (FairnessDefinition d : cfg.definitions) defs.push_back(definition_name(d));
  return nlohmann::json{{"dataset", cfg.dataset.path},
                        {"definitions", std::move(defs)},
                        {"embedding", cfg.embedding.kind},
                        {"in_flight", cfg.in_flight},
                        {"index", cfg.index_path},
                        {"k", cfg.k},
                        {"level", std::string(level_name(cfg.level))},
                        {"manifest", cfg.manifest_path},
                        {"model", model},
                        {"provider_kind", cfg.provider.kind},
                        {"shot", std::string(shot_name(cfg.shot))}};
}

std::string render_prediction_line(const CellIdentity& cell, const CompletionRecord& r) {
  nlohmann::json doc{{"ambiguous", r.ambiguous},
                     {"attempts", r.attempts},
                     {"definition", cell.definition},
                     {"level", cell.level},
                     {"model", cell.model},
                     {"parsed", std::string(parsed_name(r.parsed))},
                     {"prompt_hash", r.prompt_hash},
                     {"raw", r.raw},
                     {"record_id", r.record_id},
                     {"shot", cell.shot},
                     {"timestamp", r.timestamp}};
  return doc.dump();
}

}  // namespace

std::string prediction_file_name(const std::string& model, ShotMode shot, RuleLevel level,
                                 FairnessDefinition def) {
  return "predictions__" + slugify(model) + "__" + std::string(shot_name(shot)) + "__" +
         std::string(level_name(level)) + "__" + std::string(definition_slug(def)) +
         ".jsonl";
}

RunOutcome run_experiment(const ExperimentConfig& cfg, ChatProvider& provider,
                          EmbeddingProvider* embedder, const Clock& clock) {
  SplitManifest manifest = load_manifest(cfg.manifest_path);
  std::string hash = manifest_hash_hex(cfg.manifest_path);

  RecordSet records = load_records_file(cfg.dataset.path, cfg.dataset.schema,
                                        cfg.dataset.has_header, cfg.dataset.separator);
  std::map<std::int64_t, const IndividualRecord*> by_id;
  for (const IndividualRecord& r : records.records) by_id[r.record_id] = &r;

  for (const SplitManifestEntry& e : manifest.test) {
    auto it = by_id.find(e.id);
    if (it == by_id.end()) {
      throw ConfigError("manifest test id " + std::to_string(e.id) +
                        " is not in the dataset; wrong dataset file?");
    }
    const IndividualRecord& r = *it->second;
    if (r.income != e.income || group_of(r, manifest.spec) != e.group) {
      throw ConfigError("manifest entry for id " + std::to_string(e.id) +
                        " disagrees with the dataset; wrong dataset file?");
    }
  }

  RuleSet rules = RuleSet::load(cfg.rules_path);

  DemoIndex index;
  if (cfg.shot == ShotMode::Few) {
    if (embedder == nullptr) throw ConfigError("few-shot mode requires an embedder");
    index = DemoIndex::load(cfg.index_path);
    if (index.provider_id() != embedder->id()) {
      throw IndexCorruptionError("index built with provider '" + index.provider_id() +
                                 "', configured embedder is '" + embedder->id() + "'");
    }
    if (index.dimension() != embedder->dimension()) {
      throw IndexCorruptionError("index dimension " + std::to_string(index.dimension()) +
                                 " does not match embedder dimension " +
                                 std::to_string(embedder->dimension()));
    }
  }

  std::string run_dir = cfg.output_dir + "/" + hash;
  fs::create_directories(run_dir);

  RunOutcome outcome;
  outcome.run_dir = run_dir;
  append_run_manifest(run_dir, hash, config_snapshot(cfg, provider.id()), clock, "", 0,
                      /*new_invocation=*/true);

  // Demonstrations depend only on the test record, so they are retrieved
  // once and reused across all definition cells.
  std::map<std::int64_t, std::vector<std::string>> demo_cache;
  auto demos_for = [&](const SplitManifestEntry& e) -> const std::vector<std::string>& {
    auto it = demo_cache.find(e.id);
    if (it != demo_cache.end()) return it->second;
    std::vector<std::string> demos;
    if (cfg.shot == ShotMode::Few) {
      RetrievalResult r = retrieve(index, *by_id.at(e.id), cfg.k, *embedder);
      demos.reserve(r.demos.size());
      for (ScoredDemo& d : r.demos) demos.push_back(std::move(d.text));
    }
    return demo_cache.emplace(e.id, std::move(demos)).first->second;
  };

  for (FairnessDefinition def : cfg.definitions) {
    CellIdentity cell{provider.id(), std::string(shot_name(cfg.shot)),
                      std::string(level_name(cfg.level)),
                      std::string(definition_name(def)), hash, cfg.k};
    std::string file_name =
        prediction_file_name(provider.id(), cfg.shot, cfg.level, def);
    std::string path = run_dir + "/" + file_name;

    std::set<std::int64_t> present;
    if (fs::exists(path)) {
      PredictionFile existing = read_prediction_file(path);
      if (existing.cell.model != cell.model || existing.cell.shot != cell.shot ||
          existing.cell.level != cell.level ||
          existing.cell.definition != cell.definition ||
          existing.cell.manifest_hash != cell.manifest_hash || existing.cell.k != cell.k) {
        throw ConfigError("existing prediction file " + path +
                          " belongs to a different cell or split");
      }
      if (existing.has_partial_tail) {
        fs::resize_file(path, existing.truncate_to);
      }
      present = std::move(existing.ids);
    } else {
      std::ofstream out(path, std::ios::binary);
      out << header_json(cell).dump() << "\n";
      if (!out) throw Error("cannot write prediction file: " + path);
    }

    std::vector<const SplitManifestEntry*> todo;
    for (const SplitManifestEntry& e : manifest.test) {
      if (present.count(e.id) == 0) todo.push_back(&e);
    }
    outcome.records_skipped += static_cast<std::int64_t>(present.size());

    const FairnessRule& rule = rules.rule(def, cfg.level);
    std::ofstream app(path, std::ios::binary | std::ios::app);
    if (!app) throw Error("cannot append to prediction file: " + path);

    std::int64_t done_in_cell = static_cast<std::int64_t>(present.size());
    auto flush_progress = [&] {
      append_run_manifest(run_dir, hash, {}, clock, file_name, done_in_cell,
                          /*new_invocation=*/false);
    };

    std::size_t i = 0;
    while (i < todo.size()) {
      std::size_t batch = std::min<std::size_t>(static_cast<std::size_t>(cfg.in_flight),
                                                todo.size() - i);
      // Prompts (and any retrieval) are prepared serially; only the provider
      // calls fan out.
      std::vector<PromptBundle> bundles;
      bundles.reserve(batch);
      for (std::size_t b = 0; b < batch; ++b) {
        const SplitManifestEntry& e = *todo[i + b];
        bundles.push_back(
            compose_prompt(*by_id.at(e.id), demos_for(e), rule,
                           static_cast<std::size_t>(cfg.k)));
      }

      auto call = [&](const PromptBundle& bundle) {
        std::vector<ChatMessage> messages;
        if (provider.wants_system_role()) {
          messages.push_back({"system", bundle.task});
          messages.push_back({"user", bundle.rendered.substr(bundle.task.size() + 2)});
        } else {
          messages.push_back({"user", bundle.rendered});
        }
        return provider.complete(messages);
      };

      std::vector<std::future<Completion>> futures;
      if (batch > 1) {
        for (std::size_t b = 0; b < batch; ++b) {
          futures.push_back(
              std::async(std::launch::async, call, std::cref(bundles[b])));
        }
      }

      std::exception_ptr failure;
      for (std::size_t b = 0; b < batch; ++b) {
        Completion c;
        try {
          c = batch > 1 ? futures[b].get() : call(bundles[b]);
        } catch (...) {
          failure = std::current_exception();
          break;
        }
        ParseDetail parsed = parse_label_detailed(c.text);
        CompletionRecord rec;
        rec.record_id = todo[i + b]->id;
        rec.prompt_hash = to_hex(fnv1a64(bundles[b].rendered));
        rec.raw = c.text;
        rec.parsed = parsed.label;
        rec.ambiguous = parsed.ambiguous;
        rec.provider_id = provider.id();
        rec.timestamp = clock();
        rec.attempts = c.attempts;
        app << render_prediction_line(cell, rec) << "\n";
        app.flush();
        if (!app) throw Error("short write to prediction file: " + path);
        ++done_in_cell;
        ++outcome.records_appended;
      }
      if (failure) {
        // Drain the rest so in-flight calls finish before we unwind.
        for (auto& f : futures) {
          if (f.valid()) {
            try {
              f.get();
            } catch (...) {
            }
          }
        }
        flush_progress();
        std::rethrow_exception(failure);
      }
      i += batch;
    }

    flush_progress();
    ++outcome.cells_completed;
  }
  return outcome;
}

RunOutcome run_experiment(const ExperimentConfig& cfg, const Clock& clock) {
  std::unique_ptr<ChatProvider> provider = make_chat_provider(cfg.provider);
  std::unique_ptr<EmbeddingProvider> embedder;
  if (cfg.shot == ShotMode::Few) embedder = make_embedding_provider(cfg.embedding);
  return run_experiment(cfg, *provider, embedder.get(), clock);
}

namespace {

struct SectionKey {
  std::string model;
  std::string shot;
  std::string level;

  bool operator<(const SectionKey& o) const {
    if (model != o.model) return model < o.model;
    if (shot != o.shot) return shot == "zero" && o.shot == "few";
    return level < o.level;  // "abstract" < "detailed"
  }
};

FairnessReport report_from_file(const PredictionFile& file, const SplitManifest& manifest,
                                const std::string& path, bool require_complete) {
  std::map<std::int64_t, const SplitManifestEntry*> gold;
  for (const SplitManifestEntry& e : manifest.test) gold[e.id] = &e;

  if (require_complete) {
    std::size_t missing = 0;
    std::int64_t first_missing = -1;
    for (const SplitManifestEntry& e : manifest.test) {
      if (file.ids.count(e.id) == 0) {
        if (missing == 0) first_missing = e.id;
        ++missing;
      }
    }
    if (missing > 0) {
      throw ReportError("cell (" + file.cell.model + ", " + file.cell.shot + ", " +
                        file.cell.level + ", " + file.cell.definition + ") is missing " +
                        std::to_string(missing) + " of " +
                        std::to_string(manifest.test.size()) +
                        " test records (first missing id " +
                        std::to_string(first_missing) + "): " + path);
    }
  }

  std::vector<IncomeLabel> preds, golds;
  std::vector<Group> groups;
  FairnessReport r;
  r.model = file.cell.model;
  r.shot_mode = file.cell.shot;
  r.rule_level = file.cell.level;
  r.definition = file.cell.definition;
  for (const PredictionLine& p : file.lines) {
    auto it = gold.find(p.record_id);
    if (it == gold.end()) {
      throw ReportError("prediction for record_id " + std::to_string(p.record_id) +
                        " has no matching test entry in the manifest: " + path);
    }
    if (p.parsed == ParsedLabel::Refusal) {
      ++r.refusal_count;
      continue;
    }
    ++r.parsed_count;
    preds.push_back(p.parsed == ParsedLabel::GT50K ? IncomeLabel::GT50K
                                                   : IncomeLabel::LE50K);
    golds.push_back(it->second->income);
    groups.push_back(it->second->group);
  }

  auto [female, male] = group_confusion(preds, golds, groups);
  r.female = female;
  r.male = male;
  r.ratios = fairness_ratios(female, male);
  r.deviations = deviations(r.ratios);
  r.eighty_percent = eighty_percent_check(r.deviations);
  if (r.parsed_count > 0) {
    r.performance = performance(preds, golds);
  }
  return r;
}

std::map<SectionKey, std::map<std::string, PredictionFile>> collect_prediction_files(
    const std::string& dir, bool require_prefix,
    std::map<std::string, std::string>* paths_out) {
  std::map<SectionKey, std::map<std::string, PredictionFile>> grouped;
  if (!fs::is_directory(dir)) throw IngestionError("not a directory: " + dir);
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string name = entry.path().filename().string();
    if (name.size() < 6 || name.substr(name.size() - 6) != ".jsonl") continue;
    if (require_prefix && name.rfind("predictions__", 0) != 0) continue;
    paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  std::string shared_hash;
  for (const std::string& p : paths) {
    PredictionFile f = read_prediction_file(p);
    if (shared_hash.empty()) {
      shared_hash = f.cell.manifest_hash;
    } else if (f.cell.manifest_hash != shared_hash) {
      throw ReportError("prediction files span different splits: " + p);
    }
    SectionKey key{f.cell.model, f.cell.shot, f.cell.level};
    std::string def = f.cell.definition;
    if (grouped[key].count(def) > 0) {
      throw ReportError("two prediction files describe cell (" + key.model + ", " +
                        key.shot + ", " + key.level + ", " + def + ")");
    }
    if (paths_out != nullptr) (*paths_out)[p] = def;
    grouped[key].emplace(std::move(def), std::move(f));
  }
  return grouped;
}

}  // namespace

std::vector<ReportSection> build_report(const std::string& run_dir,
                                        const SplitManifest& manifest) {
  auto grouped = collect_prediction_files(run_dir, /*require_prefix=*/true, nullptr);
  if (grouped.empty()) {
    throw ReportError("no prediction files found under " + run_dir);
  }

  std::vector<ReportSection> sections;
  for (auto& [key, files] : grouped) {
    ReportSection section;
    section.model = key.model;
    section.shot = key.shot;
    section.level = key.level;

    std::vector<FairnessReport> non_baseline;
    for (FairnessDefinition def : kDefinitionOrder) {
      std::string name(definition_name(def));
      auto it = files.find(name);
      if (it == files.end()) {
        throw ReportError("cell (" + key.model + ", " + key.shot + ", " + key.level +
                          ", " + name + ") has no prediction file");
      }
      FairnessReport r = report_from_file(it->second, manifest, run_dir,
                                          /*require_complete=*/true);
      if (def != FairnessDefinition::NoFairness) non_baseline.push_back(r);
      section.rows.push_back(std::move(r));
    }
    section.average = aggregate(non_baseline);
    sections.push_back(std::move(section));
  }
  return sections;
}

namespace {

struct ExpectedRow {
  SectionKey key;
  std::string definition;
  // accuracy, f1, then the six raw ratios in report order.
  std::array<std::string, 8> values;
};

std::vector<ExpectedRow> load_expected_rows(const std::string& path) {
  std::string content = read_file(path);
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line)) throw IngestionError("expected-rows file is empty: " + path);
  static const std::vector<std::string> kWanted = {
      "model", "shot", "rules", "definition", "accuracy", "f1",
      "di",    "tpr",  "fpr",   "ppv",        "for",      "acc"};
  std::vector<std::string> head = split(line, '\t');
  if (head.size() != kWanted.size()) {
    throw IngestionError("expected-rows header has " + std::to_string(head.size()) +
                         " columns, want " + std::to_string(kWanted.size()));
  }
  for (std::size_t i = 0; i < kWanted.size(); ++i) {
    if (trim(head[i]) != kWanted[i]) {
      throw IngestionError("expected-rows column " + std::to_string(i + 1) + " is '" +
                           std::string(head[i]) + "', want '" + kWanted[i] + "'");
    }
  }
  std::vector<ExpectedRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> f = split(line, '\t');
    if (f.size() != kWanted.size()) {
      throw IngestionError("expected-rows line " + std::to_string(line_no) + " has " +
                           std::to_string(f.size()) + " columns");
    }
    ExpectedRow r;
    r.key = SectionKey{std::string(trim(f[0])), std::string(trim(f[1])),
                       std::string(trim(f[2]))};
    r.definition = std::string(trim(f[3]));
    for (std::size_t i = 0; i < 8; ++i) r.values[i] = std::string(trim(f[4 + i]));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw IngestionError("expected-rows file has no data rows: " + path);
  return rows;
}

MetricValue parse_expected_value(const std::string& s, std::size_t line_hint) {
  if (s == "inf") return MetricValue::infinite();
  if (s == "undef") return MetricValue::undefined();
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return MetricValue::finite(v);
  } catch (const std::exception&) {
    throw IngestionError("expected value '" + s + "' in row " + std::to_string(line_hint) +
                         " is not a number, 'inf', or 'undef'");
  }
}

std::string diff_cell(const MetricValue& expected, const MetricValue& computed) {
  if (expected.kind() != computed.kind()) return "kind-mismatch";
  if (!expected.is_finite()) return "0.0000";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", std::fabs(expected.value() - computed.value()));
  return buf;
}

}  // namespace

std::string validate_fixture(const std::string& predictions_dir,
                             const SplitManifest& manifest,
                             const std::string& expected_tsv_path) {
  auto grouped = collect_prediction_files(predictions_dir, /*require_prefix=*/false,
                                          nullptr);
  if (grouped.empty()) {
    throw IngestionError("no prediction files found under " + predictions_dir);
  }

  std::map<std::pair<SectionKey, std::string>, FairnessReport> computed;
  for (auto& [key, files] : grouped) {
    for (auto& [def, file] : files) {
      computed.emplace(std::make_pair(key, def),
                       report_from_file(file, manifest, predictions_dir,
                                        /*require_complete=*/false));
    }
  }

  std::vector<ExpectedRow> expected = load_expected_rows(expected_tsv_path);

  static const std::array<std::string_view, 8> kColumns = {
      "accuracy", "f1", "di", "tpr", "fpr", "ppv", "for", "acc"};

  std::string out = "model\tshot\trules\tdefinition\tcolumn\texpected\tcomputed\tabs_diff\n";
  std::size_t row_no = 1;
  for (const ExpectedRow& row : expected) {
    ++row_no;
    auto it = computed.find(std::make_pair(row.key, row.definition));
    if (it == computed.end()) {
      throw IngestionError("expected row names cell (" + row.key.model + ", " +
                           row.key.shot + ", " + row.key.level + ", " + row.definition +
                           ") but no prediction file describes it");
    }
    const FairnessReport& r = it->second;
    std::array<MetricValue, 8> got = {
        r.parsed_count > 0 ? MetricValue::finite(r.performance.macro_accuracy)
                           : MetricValue::undefined(),
        r.parsed_count > 0 ? MetricValue::finite(r.performance.macro_f1)
                           : MetricValue::undefined(),
        r.ratios.di,
        r.ratios.tpr,
        r.ratios.fpr,
        r.ratios.ppv,
        r.ratios.for_,
        r.ratios.acc};
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
      MetricValue want = parse_expected_value(row.values[c], row_no);
      std::string expected_text = row.values[c];
      std::string computed_text =
          got[c].is_finite()
              ? [&] {
                  char buf[40];
                  std::snprintf(buf, sizeof(buf), "%.6f", got[c].value());
                  return std::string(buf);
                }()
              : std::string(got[c].is_infinite() ? "inf" : "undef");
      out += row.key.model + "\t" + row.key.shot + "\t" + row.key.level + "\t" +
             row.definition + "\t" + std::string(kColumns[c]) + "\t" + expected_text +
             "\t" + computed_text + "\t" + diff_cell(want, got[c]) + "\n";
    }
  }
  return out;
}

}  // namespace fairicl
