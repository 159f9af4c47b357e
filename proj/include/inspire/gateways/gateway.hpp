#pragma once

#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "inspire/core/errors.hpp"

namespace inspire::gateways {

struct ChatMessage {
    std::string role;  // system | user | assistant
    std::string content;
};

struct ChatRequest {
    std::string engine;
    std::vector<ChatMessage> messages;
    double temperature = 0.0;
    int max_tokens = 1024;
    // Replay disambiguation tag for deliberately repeated sampling; part of
    // the fingerprint, never sent on the wire.
    std::string sample_tag;
};

struct SearchResult {
    std::string title;
    std::string snippet;
    std::string link;
};

struct EngineConfig {
    std::string id;
    std::string base_url;  // e.g. https://api.openai.com/v1 or sim://alpha
    std::string model;
    std::string api_key_env = "INSPIRE_LLM_API_KEY";
};

struct GatewayPolicy {
    int max_retries = 3;
    int backoff_base_ms = 500;
    int requests_per_minute = 60;
    int timeout_seconds = 30;
};

enum class CassetteMode { Live, Record, Replay };

const char* to_string(CassetteMode mode);
CassetteMode cassette_mode_from_string(const std::string& s);

class TransportError : public Error {
public:
    using Error::Error;
};

class RateLimitError : public TransportError {
public:
    using TransportError::TransportError;
};

class MalformedPayloadError : public Error {
public:
    using Error::Error;
};

class CassetteMissError : public Error {
public:
    using Error::Error;
};

class EmptyCompletionError : public Error {
public:
    using Error::Error;
};

class NoJsonFoundError : public Error {
public:
    using Error::Error;
};

struct HttpResponse {
    int status = 0;
    std::string body;
};

// Low-level POST of a JSON body; implementations: real HTTP (httplib) and the
// deterministic sim backend. Throws TransportError on connection failure.
class Transport {
public:
    virtual ~Transport() = default;
    virtual HttpResponse post_json(const std::string& base_url, const std::string& path,
                                   const std::map<std::string, std::string>& headers,
                                   const std::string& body) = 0;
};

std::unique_ptr<Transport> make_http_transport();
// Deterministic offline engine+search simulator, selected for sim:// URLs.
std::unique_ptr<Transport> make_sim_transport();

struct GatewayCounters {
    std::atomic<long> live_chat{0};
    std::atomic<long> live_search{0};
    std::atomic<long> replayed_chat{0};
    std::atomic<long> replayed_search{0};
    std::atomic<long> chat_calls{0};
    std::atomic<long> search_calls{0};
};

// Canonical JSON used for fingerprinting: message order preserved, content
// whitespace-normalized, temperature included.
nlohmann::ordered_json canonical_chat_request(const ChatRequest& req);
nlohmann::ordered_json canonical_search_request(const std::string& query, int k);
std::string request_fingerprint(const nlohmann::ordered_json& canonical);

// Scans fenced ```...``` blocks first, then brace-balanced spans, and returns
// the first syntactically valid JSON object or array. Tolerates single-quoted
// pseudo-JSON as a fallback. Throws NoJsonFoundError.
nlohmann::json extract_json(const std::string& text);

class ReplayCassette {
public:
    ReplayCassette(CassetteMode mode, std::string path);

    CassetteMode mode() const { return mode_; }
    // Replay lookup; nullopt in live mode or on record-mode lookups.
    std::optional<nlohmann::json> lookup(const std::string& fingerprint) const;
    void append(const std::string& kind, const std::string& fingerprint,
                const nlohmann::ordered_json& request, const nlohmann::json& response);

private:
    CassetteMode mode_;
    std::string path_;
    std::map<std::string, nlohmann::json> entries_;  // first entry wins
    mutable std::mutex mutex_;
};

// All network I/O behind one interface. Thread-safe; the rate limiter and
// cassette store serialize internally.
class GatewayHub {
public:
    GatewayHub(std::map<std::string, EngineConfig> engines, GatewayPolicy policy,
               CassetteMode mode = CassetteMode::Live, std::string cassette_path = {},
               std::unique_ptr<Transport> transport_override = nullptr);

    std::string chat(const ChatRequest& req);
    std::vector<SearchResult> search(const std::string& query, int k = 5);

    const GatewayCounters& counters() const { return counters_; }
    const GatewayPolicy& policy() const { return policy_; }
    CassetteMode mode() const;

    int default_search_k = 5;

private:
    std::string live_chat(const ChatRequest& req);
    std::vector<SearchResult> live_search(const std::string& query, int k);
    HttpResponse post_with_retries(Transport& transport, const std::string& base_url,
                                   const std::string& path,
                                   const std::map<std::string, std::string>& headers,
                                   const std::string& body);
    Transport& transport_for(const std::string& base_url);
    void rate_limit_tick();

    std::map<std::string, EngineConfig> engines_;
    GatewayPolicy policy_;
    std::unique_ptr<ReplayCassette> cassette_;
    std::unique_ptr<Transport> http_transport_;
    std::unique_ptr<Transport> sim_transport_;
    std::unique_ptr<Transport> override_transport_;
    GatewayCounters counters_;
    std::vector<std::chrono::steady_clock::time_point> recent_requests_;
    std::mutex rate_mutex_;
    std::string search_base_url_ = "https://google.serper.dev";
};

}  // namespace inspire::gateways
