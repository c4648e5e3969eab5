#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fairicl/http.hpp"
#include "fairicl/label.hpp"

namespace fairicl {

struct GenerationParams {
  double temperature = 0.0;
  double top_p = 0.95;
  double frequency_penalty = 0.0;
  double presence_penalty = 1.0;
  int max_output_tokens = 16;
};

struct ProviderProfile {
  std::string provider_id;
  std::string endpoint;        // full chat-completions URL
  std::string model;
  std::string credential_env;  // name of the env var; the value never leaves the request
  GenerationParams params;
  bool system_role = true;     // deliver the task text as a system message
};

struct ChatMessage {
  std::string role;  // "system" | "user"
  std::string content;
};

struct Completion {
  std::string text;
  int attempts = 1;
};

class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  virtual const std::string& id() const = 0;
  virtual Completion complete(const std::vector<ChatMessage>& messages) = 0;

  // Whether the task text should travel as a system-role message rather
  // than inline user text.
  virtual bool wants_system_role() const { return false; }
};

// Chat-completions wire client. Transient failures are retried with
// exponential backoff; 429 honors the server's Retry-After; 401/403 raise
// CredentialError without retrying.
class HttpChatProvider : public ChatProvider {
 public:
  HttpChatProvider(ProviderProfile profile, std::shared_ptr<HttpTransport> transport,
                   RetryPolicy retry = {}, Sleeper sleeper = default_sleeper());

  // Reports identify setups by model name, so that is the provider identity.
  const std::string& id() const override { return profile_.model; }
  Completion complete(const std::vector<ChatMessage>& messages) override;
  bool wants_system_role() const override { return profile_.system_role; }

  const ProviderProfile& profile() const { return profile_; }

 private:
  ProviderProfile profile_;
  std::shared_ptr<HttpTransport> transport_;
  RetryPolicy retry_;
  Sleeper sleeper_;
};

// Deterministic offline provider. In rule mode it reads the test clause out
// of the last user message, applies a threshold rule such as
// "education number >= 13", and answers with the bare label token. In
// refusal mode it answers with a fixed paragraph containing no label token.
class MockChatProvider : public ChatProvider {
 public:
  static MockChatProvider with_rule(const std::string& rule);
  static MockChatProvider refusing();

  const std::string& id() const override { return id_; }
  Completion complete(const std::vector<ChatMessage>& messages) override;

 private:
  struct Rule {
    std::string feature;
    std::string op;  // ">=", ">", "<=", "<", "=="
    long long value = 0;
  };

  std::string id_;
  std::optional<Rule> rule_;
};

// Mock provider ids use this prefix followed by the rule (or "refusal").
inline constexpr const char* kMockProviderPrefix = "mock";

struct ParseDetail {
  ParsedLabel label = ParsedLabel::Refusal;
  bool ambiguous = false;  // both tokens present outside instruction restatements
};

// Scans for the first label token, ignoring restatements of the response
// instruction that list both options.
ParsedLabel parse_label(const std::string& raw);
ParseDetail parse_label_detailed(const std::string& raw);

struct CompletionRecord {
  std::int64_t record_id = 0;
  std::string prompt_hash;  // hex content hash of the rendered prompt
  std::string raw;
  ParsedLabel parsed = ParsedLabel::Refusal;
  bool ambiguous = false;
  std::string provider_id;
  std::string timestamp;  // ISO-8601 UTC
  int attempts = 1;
};

}  // namespace fairicl
