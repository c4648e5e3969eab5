#include "fairicl/config.hpp"

#include <fstream>

#include <json.hpp>

#include "fairicl/errors.hpp"

namespace fairicl {

std::vector<std::string> default_schema() {
  std::vector<std::string> schema;
  schema.reserve(kFeatureNames.size() + 1);
  for (std::string_view name : kFeatureNames) schema.emplace_back(name);
  schema.emplace_back(kIncomeColumn);
  return schema;
}

namespace {

DatasetConfig parse_dataset(const nlohmann::json& doc) {
  DatasetConfig d;
  d.path = doc.at("path").get<std::string>();
  d.schema = doc.value("schema", default_schema());
  d.has_header = doc.value("has_header", false);
  std::string sep = doc.value("separator", std::string(","));
  if (sep.size() != 1) throw ConfigError("dataset separator must be one character");
  d.separator = sep[0];
  return d;
}

GenerationParams parse_params(const nlohmann::json& doc) {
  GenerationParams p;
  p.temperature = doc.value("temperature", p.temperature);
  p.top_p = doc.value("top_p", p.top_p);
  p.frequency_penalty = doc.value("frequency_penalty", p.frequency_penalty);
  p.presence_penalty = doc.value("presence_penalty", p.presence_penalty);
  p.max_output_tokens = doc.value("max_output_tokens", p.max_output_tokens);
  if (p.temperature < 0.0) throw ConfigError("temperature must be nonnegative");
  if (p.top_p <= 0.0 || p.top_p > 1.0) throw ConfigError("top_p must be in (0, 1]");
  return p;
}

ChatProviderConfig parse_provider(const nlohmann::json& doc) {
  ChatProviderConfig c;
  c.kind = doc.at("kind").get<std::string>();
  if (c.kind == "mock") {
    c.mock_rule = doc.at("rule").get<std::string>();
  } else if (c.kind == "http") {
    c.profile.provider_id = doc.value("provider_id", std::string("http"));
    c.profile.endpoint = doc.at("endpoint").get<std::string>();
    c.profile.model = doc.at("model").get<std::string>();
    c.profile.credential_env = doc.value("credential_env", std::string());
    c.profile.system_role = doc.value("system_role", true);
    if (doc.contains("params")) c.profile.params = parse_params(doc["params"]);
  } else {
    throw ConfigError("provider kind must be 'mock' or 'http', got '" + c.kind + "'");
  }
  return c;
}

EmbeddingConfig parse_embedding(const nlohmann::json& doc) {
  EmbeddingConfig e;
  e.kind = doc.value("kind", std::string("local"));
  if (e.kind == "http") {
    e.endpoint.provider_id = doc.value("provider_id", std::string("remote-embed"));
    e.endpoint.url = doc.at("url").get<std::string>();
    e.endpoint.model = doc.at("model").get<std::string>();
    e.endpoint.credential_env = doc.value("credential_env", std::string());
    e.endpoint.dimension = doc.value("dimension", std::size_t{1536});
    e.cache_dir = doc.value("cache_dir", e.cache_dir);
  } else if (e.kind != "local") {
    throw ConfigError("embedding kind must be 'local' or 'http', got '" + e.kind + "'");
  }
  return e;
}

}  // namespace

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }

  ExperimentConfig cfg;
  try {
    cfg.dataset = parse_dataset(doc.at("dataset"));
    cfg.manifest_path = doc.at("manifest").get<std::string>();
    cfg.rules_path = doc.value("rules", cfg.rules_path);
    cfg.shot = shot_from_name(doc.value("shot", std::string("zero")));
    cfg.k = doc.value("k", 20);
    cfg.level = level_from_name(doc.value("level", std::string("abstract")));
    if (doc.contains("definitions")) {
      for (const auto& name : doc["definitions"]) {
        cfg.definitions.push_back(definition_from_name(name.get<std::string>()));
      }
    } else {
      cfg.definitions.assign(kDefinitionOrder.begin(), kDefinitionOrder.end());
    }
    cfg.output_dir = doc.value("output_dir", cfg.output_dir);
    cfg.index_path = doc.value("index", std::string());
    cfg.in_flight = doc.value("in_flight", 1);
    cfg.provider = parse_provider(doc.at("provider"));
    if (doc.contains("embedding")) cfg.embedding = parse_embedding(doc["embedding"]);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config is missing fields: " + std::string(e.what()));
  }

  if (cfg.k < 1) throw ConfigError("k must be at least 1");
  if (cfg.in_flight < 1) throw ConfigError("in_flight must be at least 1");
  if (cfg.shot == ShotMode::Few && cfg.index_path.empty()) {
    throw ConfigError("few-shot mode requires an 'index' path");
  }
  if (cfg.definitions.empty()) throw ConfigError("definitions list is empty");
  return cfg;
}

std::unique_ptr<ChatProvider> make_chat_provider(const ChatProviderConfig& cfg) {
  if (cfg.kind == "mock") {
    if (cfg.mock_rule == "refusal") {
      return std::make_unique<MockChatProvider>(MockChatProvider::refusing());
    }
    return std::make_unique<MockChatProvider>(MockChatProvider::with_rule(cfg.mock_rule));
  }
  return std::make_unique<HttpChatProvider>(cfg.profile, make_default_transport());
}

std::unique_ptr<EmbeddingProvider> make_embedding_provider(const EmbeddingConfig& cfg) {
  if (cfg.kind == "local") return std::make_unique<LocalHashEmbedder>();
  return std::make_unique<HttpEmbedder>(cfg.endpoint, cfg.cache_dir,
                                        make_default_transport());
}

}  // namespace fairicl
