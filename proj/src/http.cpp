#include "fairicl/http.hpp"

#include <charconv>
#include <cstdlib>
#include <thread>

#include <httplib.h>

#include "fairicl/errors.hpp"
#include "fairicl/util.hpp"

namespace fairicl {

namespace {

// Splits "https://host:port/path" into origin and path for the client.
std::pair<std::string, std::string> split_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("endpoint URL lacks a scheme: " + url);
  }
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

class HttplibTransport : public HttpTransport {
 public:
  HttpResponse post_json(const std::string& url, const std::string& body,
                         const HeaderList& headers) override {
    auto [origin, path] = split_url(url);
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
    if (origin.rfind("https://", 0) == 0) {
      throw TransportError("TLS support not compiled in; cannot reach " + origin);
    }
#endif
    httplib::Client client(origin);
    client.set_connection_timeout(30);
    client.set_read_timeout(300);
    httplib::Headers h;
    for (const auto& [k, v] : headers) h.emplace(k, v);
    auto res = client.Post(path, h, body, "application/json");
    if (!res) {
      throw TransportError("connection to " + origin + " failed: " +
                           httplib::to_string(res.error()));
    }
    HttpResponse out;
    out.status = res->status;
    out.body = res->body;
    for (const auto& [k, v] : res->headers) out.headers[to_lower(k)] = v;
    return out;
  }
};

bool retryable_status(int status) {
  return status == 408 || status == 429 || status >= 500;
}

std::chrono::milliseconds retry_after_delay(const HttpResponse& r) {
  auto it = r.headers.find("retry-after");
  if (it == r.headers.end()) return std::chrono::milliseconds{0};
  long seconds = 0;
  const std::string& v = it->second;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), seconds);
  if (ec != std::errc{} || ptr != v.data() + v.size() || seconds < 0) {
    return std::chrono::milliseconds{0};  // HTTP-date form ignored
  }
  return std::chrono::seconds{seconds};
}

}  // namespace

std::shared_ptr<HttpTransport> make_default_transport() {
  return std::make_shared<HttplibTransport>();
}

Sleeper default_sleeper() {
  return [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
}

RetriedResponse post_with_retry(HttpTransport& transport, const std::string& url,
                                const std::string& body, const HeaderList& headers,
                                const RetryPolicy& policy, const Sleeper& sleeper) {
  auto backoff = policy.initial_backoff;
  std::string last_failure;
  for (int attempt = 1; attempt <= policy.max_attempts; ++attempt) {
    bool transport_failed = false;
    HttpResponse resp;
    try {
      resp = transport.post_json(url, body, headers);
    } catch (const TransportError& e) {
      transport_failed = true;
      last_failure = e.what();
    }
    if (!transport_failed) {
      if (resp.status >= 200 && resp.status < 300) {
        return RetriedResponse{std::move(resp), attempt};
      }
      if (resp.status == 401 || resp.status == 403) {
        throw CredentialError("provider rejected credentials (HTTP " +
                              std::to_string(resp.status) + ")");
      }
      if (!retryable_status(resp.status)) {
        throw TransportError("provider returned HTTP " + std::to_string(resp.status) +
                             ": " + resp.body.substr(0, 200));
      }
      last_failure = "HTTP " + std::to_string(resp.status);
    }
    if (attempt == policy.max_attempts) break;
    auto delay = backoff;
    if (!transport_failed && resp.status == 429) {
      auto server_delay = retry_after_delay(resp);
      if (server_delay.count() > 0) delay = server_delay;
    }
    sleeper(delay);
    backoff = std::min(
        std::chrono::milliseconds{static_cast<long long>(
            static_cast<double>(backoff.count()) * policy.backoff_multiplier)},
        policy.max_backoff);
  }
  throw TransportError("request failed after " + std::to_string(policy.max_attempts) +
                       " attempts; last failure: " + last_failure);
}

std::string resolve_credential(const std::string& env_var) {
  if (env_var.empty()) return "";
  const char* value = std::getenv(env_var.c_str());
  if (value == nullptr || *value == '\0') {
    throw CredentialError("credential environment variable " + env_var + " is not set");
  }
  return value;
}

}  // namespace fairicl
