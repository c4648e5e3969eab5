#include <cstdio>
#include <exception>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairicl/config.hpp"
#include "fairicl/errors.hpp"
#include "fairicl/harness.hpp"
#include "fairicl/manifest.hpp"
#include "fairicl/retrieval.hpp"
#include "fairicl/util.hpp"

namespace {

using namespace fairicl;

struct DatasetArgs {
  std::string path;
  std::vector<std::string> schema;
  bool has_header = false;
  std::string separator = ",";
};

void add_dataset_args(CLI::App* cmd, DatasetArgs& args) {
  cmd->add_option("--dataset", args.path, "census CSV file")->required();
  cmd->add_option("--schema", args.schema,
                  "column names in file order (default: the standard 15)");
  cmd->add_flag("--has-header", args.has_header, "skip the first line");
  cmd->add_option("--separator", args.separator, "field separator (default ,)");
}

RecordSet load_dataset(const DatasetArgs& args) {
  if (args.separator.size() != 1) {
    throw ConfigError("--separator must be a single character");
  }
  std::vector<std::string> schema =
      args.schema.empty() ? default_schema() : args.schema;
  return load_records_file(args.path, schema, args.has_header, args.separator[0]);
}

int cmd_split(const DatasetArgs& data, std::uint64_t seed, const ProtectedSpec& spec,
              const std::string& out_path) {
  RecordSet records = load_dataset(data);
  SplitResult split = stratified_split(records, seed, spec);
  SplitManifest manifest = make_manifest(split, spec, data.path);
  save_manifest(manifest, out_path);
  std::printf("wrote %s: test=%zu pool=%zu seed=%llu hash=%s\n", out_path.c_str(),
              split.test_set.size(), split.demo_pool.size(),
              static_cast<unsigned long long>(seed),
              manifest_hash_hex(out_path).c_str());
  return 0;
}

int cmd_index(const DatasetArgs& data, const std::string& manifest_path,
              const EmbeddingConfig& embed_cfg, const std::string& out_path) {
  RecordSet records = load_dataset(data);
  SplitManifest manifest = load_manifest(manifest_path);

  std::map<std::int64_t, const IndividualRecord*> by_id;
  for (const IndividualRecord& r : records.records) by_id[r.record_id] = &r;
  RecordSet pool;
  pool.records.reserve(manifest.pool_ids.size());
  for (std::int64_t id : manifest.pool_ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw ConfigError("manifest pool id " + std::to_string(id) +
                        " is not in the dataset; wrong dataset file?");
    }
    pool.records.push_back(*it->second);
  }

  auto provider = make_embedding_provider(embed_cfg);
  DemoIndex index = DemoIndex::build(pool, *provider);
  index.save(out_path);
  std::printf("wrote %s: entries=%zu dimension=%zu provider=%s\n", out_path.c_str(),
              index.size(), index.dimension(), index.provider_id().c_str());
  return 0;
}

int cmd_run(const std::string& config_path) {
  ExperimentConfig cfg = load_experiment_config(config_path);
  RunOutcome outcome = run_experiment(cfg);
  std::printf("run dir %s: cells=%d appended=%lld skipped=%lld\n",
              outcome.run_dir.c_str(), outcome.cells_completed,
              static_cast<long long>(outcome.records_appended),
              static_cast<long long>(outcome.records_skipped));
  return 0;
}

int cmd_report(const std::string& run_dir, const std::string& manifest_path,
               const std::string& text_out, const std::string& tsv_out) {
  SplitManifest manifest = load_manifest(manifest_path);
  std::vector<ReportSection> sections = build_report(run_dir, manifest);
  std::string text = render_text(sections);
  if (!text_out.empty()) {
    write_file(text_out, text);
  }
  if (!tsv_out.empty()) {
    write_file(tsv_out, render_tsv(sections));
  }
  if (text_out.empty() && tsv_out.empty()) {
    std::fputs(text.c_str(), stdout);
  }
  return 0;
}

int cmd_validate(const std::string& predictions_dir, const std::string& manifest_path,
                 const std::string& expected_path, const std::string& out_path) {
  SplitManifest manifest = load_manifest(manifest_path);
  std::string table = validate_fixture(predictions_dir, manifest, expected_path);
  if (out_path.empty()) {
    std::fputs(table.c_str(), stdout);
  } else {
    write_file(out_path, table);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fairness-aware income classification harness"};
  app.require_subcommand(1);

  DatasetArgs split_data;
  std::uint64_t seed = 0;
  ProtectedSpec spec;
  std::string split_out = "manifest.json";
  CLI::App* split = app.add_subcommand("split", "stratify the dataset into test and pool");
  add_dataset_args(split, split_data);
  split->add_option("--seed", seed, "sampling seed")->required();
  split->add_option("--column", spec.column, "protected attribute column");
  split->add_option("--unprivileged", spec.unprivileged_value, "unprivileged group value");
  split->add_option("--privileged", spec.privileged_value, "privileged group value");
  split->add_option("--out", split_out, "manifest output path");

  DatasetArgs index_data;
  std::string index_manifest;
  std::string index_out = "demo_index.jsonl";
  EmbeddingConfig embed_cfg;
  CLI::App* index = app.add_subcommand("index", "embed the demonstration pool");
  add_dataset_args(index, index_data);
  index->add_option("--manifest", index_manifest, "split manifest")->required();
  index->add_option("--out", index_out, "index output path");
  index->add_option("--embedder", embed_cfg.kind, "'local' or 'http'");
  index->add_option("--embed-url", embed_cfg.endpoint.url, "remote embedding endpoint");
  index->add_option("--embed-model", embed_cfg.endpoint.model, "remote embedding model");
  index->add_option("--embed-provider-id", embed_cfg.endpoint.provider_id,
                    "cache namespace for the remote provider");
  index->add_option("--embed-credential-env", embed_cfg.endpoint.credential_env,
                    "environment variable holding the API key");
  index->add_option("--embed-dim", embed_cfg.endpoint.dimension, "remote vector dimension");
  index->add_option("--cache-dir", embed_cfg.cache_dir, "embedding cache directory");

  std::string run_config;
  CLI::App* run = app.add_subcommand("run", "execute the experiment grid");
  run->add_option("--config", run_config, "experiment config JSON")->required();

  std::string report_dir, report_manifest, report_text, report_tsv;
  CLI::App* report = app.add_subcommand("report", "render tables from predictions");
  report->add_option("--run-dir", report_dir, "directory of prediction files")->required();
  report->add_option("--manifest", report_manifest, "split manifest")->required();
  report->add_option("--text-out", report_text, "write the aligned text table here");
  report->add_option("--tsv-out", report_tsv, "write the TSV table here");

  std::string val_dir, val_manifest, val_expected, val_out;
  CLI::App* validate =
      app.add_subcommand("validate", "compare released predictions against expected rows");
  validate->add_option("--predictions", val_dir, "directory of prediction files")
      ->required();
  validate->add_option("--manifest", val_manifest, "split manifest")->required();
  validate->add_option("--expected", val_expected, "expected rows TSV")->required();
  validate->add_option("--out", val_out, "write the comparison table here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (split->parsed()) {
      return cmd_split(split_data, seed, spec, split_out);
    }
    if (index->parsed()) {
      if (embed_cfg.kind != "local" && embed_cfg.kind != "http") {
        throw ConfigError("--embedder must be 'local' or 'http'");
      }
      if (embed_cfg.kind == "http" &&
          (embed_cfg.endpoint.url.empty() || embed_cfg.endpoint.model.empty())) {
        throw ConfigError("http embedder needs --embed-url and --embed-model");
      }
      return cmd_index(index_data, index_manifest, embed_cfg, index_out);
    }
    if (run->parsed()) return cmd_run(run_config);
    if (report->parsed()) {
      return cmd_report(report_dir, report_manifest, report_text, report_tsv);
    }
    if (validate->parsed()) {
      return cmd_validate(val_dir, val_manifest, val_expected, val_out);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
