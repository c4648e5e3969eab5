#include "fairicl/embedding.hpp"

#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "fairicl/errors.hpp"
#include "fairicl/util.hpp"

namespace fairicl {

const std::string& LocalHashEmbedder::id() const {
  static const std::string kId = "local-hash-256";
  return kId;
}

std::vector<double> LocalHashEmbedder::embed(const std::string& text) {
  if (text.empty()) throw Error("cannot embed empty text");
  std::vector<double> v(kDimension, 0.0);
  std::string token;
  bool any = false;
  auto flush = [&] {
    if (token.empty()) return;
    v[fnv1a64(token) % kDimension] += 1.0;
    any = true;
    token.clear();
  };
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      token.push_back(static_cast<char>(std::tolower(c)));
    } else {
      flush();
    }
  }
  flush();
  if (!any) throw Error("text produced no tokens to embed: '" + text + "'");
  double norm_sq = 0.0;
  for (double x : v) norm_sq += x * x;
  double norm = std::sqrt(norm_sq);
  for (double& x : v) x /= norm;
  return v;
}

HttpEmbedder::HttpEmbedder(EmbeddingEndpoint endpoint, std::string cache_dir,
                           std::shared_ptr<HttpTransport> transport, RetryPolicy retry,
                           Sleeper sleeper)
    : endpoint_(std::move(endpoint)),
      cache_dir_(std::move(cache_dir)),
      transport_(std::move(transport)),
      retry_(retry),
      sleeper_(std::move(sleeper)) {}

std::string HttpEmbedder::cache_path(const std::string& text) const {
  // Content hash plus length; a 64-bit hash alone invites silent collisions.
  std::string key = to_hex(fnv1a64(text)) + "-" + std::to_string(text.size());
  return cache_dir_ + "/" + endpoint_.provider_id + "/" + key + ".json";
}

std::vector<double> HttpEmbedder::embed(const std::string& text) {
  if (text.empty()) throw Error("cannot embed empty text");
  std::string path = cache_path(text);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.at("text") != text) {
      throw IndexCorruptionError("embedding cache collision at " + path);
    }
    auto v = doc.at("vector").get<std::vector<double>>();
    if (v.size() != endpoint_.dimension) {
      throw IndexCorruptionError("cached embedding at " + path + " has dimension " +
                                 std::to_string(v.size()) + ", provider declares " +
                                 std::to_string(endpoint_.dimension));
    }
    return v;
  }

  nlohmann::json req{{"model", endpoint_.model}, {"input", text}};
  HeaderList headers{{"Content-Type", "application/json"}};
  std::string key = resolve_credential(endpoint_.credential_env);
  if (!key.empty()) headers.emplace_back("Authorization", "Bearer " + key);
  auto [resp, attempts] =
      post_with_retry(*transport_, endpoint_.url, req.dump(), headers, retry_, sleeper_);

  std::vector<double> v;
  try {
    nlohmann::json doc = nlohmann::json::parse(resp.body);
    v = doc.at("data").at(0).at("embedding").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw TransportError("embedding response is not in the expected shape: " +
                         std::string(e.what()));
  }
  if (v.size() != endpoint_.dimension) {
    throw IndexCorruptionError("provider returned dimension " + std::to_string(v.size()) +
                               ", declared " + std::to_string(endpoint_.dimension));
  }
  bool all_zero = true;
  for (double x : v) {
    if (x != 0.0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) throw TransportError("provider returned an all-zero embedding");

  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  nlohmann::json cached{{"text", text}, {"vector", v}};
  std::ofstream out(path);
  out << cached.dump() << "\n";
  return v;
}

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw AlignmentError("cosine of vectors with dimensions " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()));
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) throw Error("cosine of a zero vector");
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace fairicl
