#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "fairicl/http.hpp"

namespace fairicl {

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual const std::string& id() const = 0;
  virtual std::size_t dimension() const = 0;

  // Maps nonempty text to a vector of the declared dimension, never all-zero.
  virtual std::vector<double> embed(const std::string& text) = 0;
};

// Deterministic offline embedder: feature-hashing bag of tokens into 256
// dimensions, L2-normalized. Tokens are maximal [a-z0-9] runs of the
// lowercased text.
class LocalHashEmbedder : public EmbeddingProvider {
 public:
  static constexpr std::size_t kDimension = 256;

  const std::string& id() const override;
  std::size_t dimension() const override { return kDimension; }
  std::vector<double> embed(const std::string& text) override;
};

struct EmbeddingEndpoint {
  std::string provider_id;     // names the cache namespace
  std::string url;             // full endpoint URL
  std::string model;
  std::string credential_env;  // environment variable holding the API key; may be empty
  std::size_t dimension = 1536;
};

// Remote embedding provider speaking the common {model, input} -> data[0]
// .embedding JSON shape. Responses are cached on disk keyed by provider id
// and content hash, so reruns never re-bill.
class HttpEmbedder : public EmbeddingProvider {
 public:
  HttpEmbedder(EmbeddingEndpoint endpoint, std::string cache_dir,
               std::shared_ptr<HttpTransport> transport, RetryPolicy retry = {},
               Sleeper sleeper = default_sleeper());

  const std::string& id() const override { return endpoint_.provider_id; }
  std::size_t dimension() const override { return endpoint_.dimension; }
  std::vector<double> embed(const std::string& text) override;

 private:
  std::string cache_path(const std::string& text) const;

  EmbeddingEndpoint endpoint_;
  std::string cache_dir_;
  std::shared_ptr<HttpTransport> transport_;
  RetryPolicy retry_;
  Sleeper sleeper_;
};

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace fairicl
