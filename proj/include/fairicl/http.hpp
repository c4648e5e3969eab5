#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace fairicl {

struct HttpResponse {
  int status = 0;
  std::string body;
  std::map<std::string, std::string> headers;  // lowercase keys
};

using HeaderList = std::vector<std::pair<std::string, std::string>>;

// Minimal transport seam so providers can be tested without a network.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;

  // POSTs a JSON body; throws TransportError on connection-level failure.
  virtual HttpResponse post_json(const std::string& url, const std::string& body,
                                 const HeaderList& headers) = 0;
};

// Real transport backed by an HTTP client library. TLS endpoints require the
// library's TLS support to be compiled in; plain http always works.
std::shared_ptr<HttpTransport> make_default_transport();

struct RetryPolicy {
  int max_attempts = 5;
  std::chrono::milliseconds initial_backoff{500};
  double backoff_multiplier = 2.0;
  std::chrono::milliseconds max_backoff{30000};
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;
Sleeper default_sleeper();

// Issues the request with retries. Retries on connection failures, 408, 429,
// and 5xx, sleeping the backoff (or the server's Retry-After on 429) between
// attempts. 401/403 raise CredentialError immediately; other 4xx raise
// TransportError immediately. Returns the successful response and the number
// of attempts spent.
struct RetriedResponse {
  HttpResponse response;
  int attempts = 1;
};

RetriedResponse post_with_retry(HttpTransport& transport, const std::string& url,
                                const std::string& body, const HeaderList& headers,
                                const RetryPolicy& policy, const Sleeper& sleeper);

// Resolves an environment credential. Returns empty when env_var is empty;
// throws CredentialError when the variable is named but unset.
std::string resolve_credential(const std::string& env_var);

}  // namespace fairicl
