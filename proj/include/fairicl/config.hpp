#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fairicl/dataset.hpp"
#include "fairicl/embedding.hpp"
#include "fairicl/llm_client.hpp"
#include "fairicl/rules.hpp"

namespace fairicl {

// The standard 15-column order of the census file.
std::vector<std::string> default_schema();

struct DatasetConfig {
  std::string path;
  std::vector<std::string> schema;  // defaults to default_schema()
  bool has_header = false;
  char separator = ',';
};

struct ChatProviderConfig {
  std::string kind;  // "mock" | "http"
  std::string mock_rule;  // threshold rule, or "refusal"
  ProviderProfile profile;
};

struct EmbeddingConfig {
  std::string kind = "local";  // "local" | "http"
  EmbeddingEndpoint endpoint;
  std::string cache_dir = "embedding_cache";
};

struct ExperimentConfig {
  DatasetConfig dataset;
  std::string manifest_path;
  std::string rules_path = "data/rules.json";
  ShotMode shot = ShotMode::Zero;
  int k = 20;
  RuleLevel level = RuleLevel::Abstract;
  std::vector<FairnessDefinition> definitions;  // defaults to all nine
  std::string output_dir = "runs";
  std::string index_path;  // required in few-shot mode
  int in_flight = 1;
  ChatProviderConfig provider;
  EmbeddingConfig embedding;
};

ExperimentConfig load_experiment_config(const std::string& path);

std::unique_ptr<ChatProvider> make_chat_provider(const ChatProviderConfig& cfg);
std::unique_ptr<EmbeddingProvider> make_embedding_provider(const EmbeddingConfig& cfg);

}  // namespace fairicl
