#include "inspire/gateways/gateway.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "inspire/util/fs.hpp"
#include "inspire/util/hash.hpp"
#include "inspire/util/logging.hpp"
#include "inspire/util/strings.hpp"

namespace inspire::gateways {

const char* to_string(CassetteMode mode) {
    switch (mode) {
        case CassetteMode::Live: return "live";
        case CassetteMode::Record: return "record";
        case CassetteMode::Replay: return "replay";
    }
    return "?";
}

CassetteMode cassette_mode_from_string(const std::string& s) {
    std::string low = util::to_lower(util::trim(s));
    if (low == "live") return CassetteMode::Live;
    if (low == "record") return CassetteMode::Record;
    if (low == "replay") return CassetteMode::Replay;
    throw ValidationError("unknown cassette mode: " + s);
}

nlohmann::ordered_json canonical_chat_request(const ChatRequest& req) {
    nlohmann::ordered_json messages = nlohmann::ordered_json::array();
    for (const ChatMessage& m : req.messages)
        messages.push_back({{"role", m.role}, {"content", util::collapse_whitespace(m.content)}});
    return nlohmann::ordered_json{{"kind", "chat"},
                                  {"engine", req.engine},
                                  {"messages", messages},
                                  {"temperature", req.temperature},
                                  {"max_tokens", req.max_tokens},
                                  {"tag", req.sample_tag}};
}

nlohmann::ordered_json canonical_search_request(const std::string& query, int k) {
    return nlohmann::ordered_json{
        {"kind", "search"}, {"query", util::collapse_whitespace(query)}, {"k", k}};
}

std::string request_fingerprint(const nlohmann::ordered_json& canonical) {
    return util::fingerprint(canonical.dump());
}

// ---------------------------------------------------------------------------
// ReplayCassette
// ---------------------------------------------------------------------------

ReplayCassette::ReplayCassette(CassetteMode mode, std::string path)
    : mode_(mode), path_(std::move(path)) {
    if (mode_ == CassetteMode::Replay) {
        std::ifstream in(path_);
        if (!in) throw CassetteMissError("cannot open cassette: " + path_);
        std::string line;
        while (std::getline(in, line)) {
            if (util::trim(line).empty()) continue;
            nlohmann::json entry = nlohmann::json::parse(line);
            std::string fp = entry.at("fingerprint").get<std::string>();
            entries_.emplace(fp, entry.at("response"));  // first entry wins
        }
    } else if (mode_ == CassetteMode::Record) {
        if (std::filesystem::path(path_).has_parent_path())
            util::ensure_dir(std::filesystem::path(path_).parent_path());
        std::ofstream out(path_, std::ios::trunc);  // fresh cassette per run
        if (!out) throw Error("cannot create cassette: " + path_);
    }
}

std::optional<nlohmann::json> ReplayCassette::lookup(const std::string& fingerprint) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find(fingerprint);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ReplayCassette::append(const std::string& kind, const std::string& fingerprint,
                            const nlohmann::ordered_json& request,
                            const nlohmann::json& response) {
    std::lock_guard<std::mutex> lock(mutex_);
    nlohmann::ordered_json entry{
        {"kind", kind}, {"fingerprint", fingerprint}, {"request", request}, {"response", response}};
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot append to cassette: " + path_);
    out << entry.dump() << "\n";
}

// ---------------------------------------------------------------------------
// GatewayHub
// ---------------------------------------------------------------------------

GatewayHub::GatewayHub(std::map<std::string, EngineConfig> engines, GatewayPolicy policy,
                       CassetteMode mode, std::string cassette_path,
                       std::unique_ptr<Transport> transport_override)
    : engines_(std::move(engines)),
      policy_(policy),
      override_transport_(std::move(transport_override)) {
    if (policy_.max_retries < 0) throw ValidationError("retries must be >= 0");
    if (policy_.timeout_seconds <= 0) throw ValidationError("timeout must be > 0");
    if (mode != CassetteMode::Live)
        cassette_ = std::make_unique<ReplayCassette>(mode, std::move(cassette_path));
    if (const char* url = std::getenv("INSPIRE_SEARCH_BASE_URL"); url && *url)
        search_base_url_ = url;
}

CassetteMode GatewayHub::mode() const {
    return cassette_ ? cassette_->mode() : CassetteMode::Live;
}

Transport& GatewayHub::transport_for(const std::string& base_url) {
    if (override_transport_) return *override_transport_;
    if (base_url.rfind("sim://", 0) == 0) {
        if (!sim_transport_) sim_transport_ = make_sim_transport();
        return *sim_transport_;
    }
    if (!http_transport_) http_transport_ = make_http_transport();
    return *http_transport_;
}

void GatewayHub::rate_limit_tick() {
    if (policy_.requests_per_minute <= 0) return;
    using clock = std::chrono::steady_clock;
    while (true) {
        clock::duration wait{};
        {
            std::lock_guard<std::mutex> lock(rate_mutex_);
            auto now = clock::now();
            auto minute_ago = now - std::chrono::minutes(1);
            recent_requests_.erase(
                std::remove_if(recent_requests_.begin(), recent_requests_.end(),
                               [&](auto t) { return t < minute_ago; }),
                recent_requests_.end());
            if (static_cast<int>(recent_requests_.size()) < policy_.requests_per_minute) {
                recent_requests_.push_back(now);
                return;
            }
            wait = recent_requests_.front() + std::chrono::minutes(1) - now;
        }
        std::this_thread::sleep_for(std::max(wait, clock::duration(std::chrono::milliseconds(10))));
    }
}

HttpResponse GatewayHub::post_with_retries(Transport& transport, const std::string& base_url,
                                           const std::string& path,
                                           const std::map<std::string, std::string>& headers,
                                           const std::string& body) {
    int attempts = policy_.max_retries + 1;
    std::string last_error;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        if (attempt > 0) {
            auto backoff = std::chrono::milliseconds(
                static_cast<long>(policy_.backoff_base_ms) * (1L << (attempt - 1)));
            std::this_thread::sleep_for(backoff);
        }
        rate_limit_tick();
        HttpResponse resp;
        try {
            resp = transport.post_json(base_url, path, headers, body);
        } catch (const TransportError& e) {
            last_error = e.what();
            continue;  // transport failures are retryable
        }
        if (resp.status == 429 || resp.status >= 500) {
            last_error = "HTTP " + std::to_string(resp.status);
            continue;
        }
        if (resp.status >= 400)
            throw TransportError("HTTP " + std::to_string(resp.status) + ": " + resp.body);
        return resp;
    }
    if (last_error.rfind("HTTP 429", 0) == 0)
        throw RateLimitError("rate limit exhausted after " + std::to_string(attempts) +
                             " attempts");
    throw TransportError("transport failed after " + std::to_string(attempts) +
                         " attempts: " + last_error);
}

std::string GatewayHub::live_chat(const ChatRequest& req) {
    auto it = engines_.find(req.engine);
    if (it == engines_.end()) throw ValidationError("unknown engine id: " + req.engine);
    const EngineConfig& engine = it->second;

    nlohmann::ordered_json messages = nlohmann::ordered_json::array();
    for (const ChatMessage& m : req.messages)
        messages.push_back({{"role", m.role}, {"content", m.content}});
    nlohmann::ordered_json body{{"model", engine.model},
                                {"messages", messages},
                                {"temperature", req.temperature},
                                {"max_tokens", req.max_tokens}};

    std::map<std::string, std::string> headers;
    bool is_sim = engine.base_url.rfind("sim://", 0) == 0;
    if (!is_sim && !override_transport_) {
        const char* key = std::getenv(engine.api_key_env.c_str());
        if (!key || !*key)
            throw TransportError("missing credential env var " + engine.api_key_env +
                                 " for engine " + engine.id);
        headers["Authorization"] = std::string("Bearer ") + key;
    }

    HttpResponse resp = post_with_retries(transport_for(engine.base_url), engine.base_url,
                                          "/chat/completions", headers, body.dump());
    counters_.live_chat++;

    nlohmann::json parsed = nlohmann::json::parse(resp.body, nullptr, false);
    if (parsed.is_discarded() || !parsed.contains("choices") || parsed["choices"].empty())
        throw MalformedPayloadError("chat response missing choices: " + resp.body.substr(0, 200));
    std::string content;
    try {
        content = parsed["choices"][0]["message"]["content"].get<std::string>();
    } catch (const nlohmann::json::exception&) {
        throw MalformedPayloadError("chat response missing message content");
    }
    return content;
}

std::string GatewayHub::chat(const ChatRequest& req) {
    if (req.messages.empty()) throw ValidationError("chat request has no messages");
    const std::string& first = req.messages.front().role;
    if (first != "system" && first != "user")
        throw ValidationError("first message role must be system or user, got " + first);
    for (const ChatMessage& m : req.messages)
        if (m.role != "system" && m.role != "user" && m.role != "assistant")
            throw ValidationError("unknown message role: " + m.role);
    if (req.temperature < 0) throw ValidationError("temperature must be >= 0");

    counters_.chat_calls++;
    nlohmann::ordered_json canonical = canonical_chat_request(req);
    std::string fp = request_fingerprint(canonical);

    if (cassette_ && cassette_->mode() == CassetteMode::Replay) {
        auto hit = cassette_->lookup(fp);
        if (!hit) throw CassetteMissError("cassette miss for chat fingerprint " + fp);
        counters_.replayed_chat++;
        std::string content = hit->get<std::string>();
        if (util::trim(content).empty()) throw EmptyCompletionError("empty completion (replayed)");
        return content;
    }

    std::string content = live_chat(req);
    if (util::trim(content).empty()) throw EmptyCompletionError("engine returned empty completion");
    if (cassette_ && cassette_->mode() == CassetteMode::Record)
        cassette_->append("chat", fp, canonical, content);
    return content;
}

std::vector<SearchResult> GatewayHub::live_search(const std::string& query, int k) {
    std::map<std::string, std::string> headers;
    bool is_sim = search_base_url_.rfind("sim://", 0) == 0;
    if (!is_sim && !override_transport_) {
        const char* key = std::getenv("INSPIRE_SEARCH_API_KEY");
        if (!key || !*key)
            throw TransportError("missing credential env var INSPIRE_SEARCH_API_KEY");
        headers["X-API-KEY"] = key;
    }
    nlohmann::ordered_json body{{"q", query}};
    HttpResponse resp = post_with_retries(transport_for(search_base_url_), search_base_url_,
                                          "/search", headers, body.dump());
    counters_.live_search++;

    nlohmann::json parsed = nlohmann::json::parse(resp.body, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object())
        throw MalformedPayloadError("search response is not a JSON object");
    std::vector<SearchResult> results;
    if (parsed.contains("organic")) {
        if (!parsed["organic"].is_array())
            throw MalformedPayloadError("search response organic field is not an array");
        for (const auto& item : parsed["organic"]) {
            if (static_cast<int>(results.size()) >= k) break;
            SearchResult r;
            r.title = item.value("title", "");
            r.snippet = item.value("snippet", "");
            r.link = item.value("link", "");
            if (util::trim(r.snippet).empty()) continue;  // snippet must be non-empty
            results.push_back(std::move(r));
        }
    }
    return results;
}

std::vector<SearchResult> GatewayHub::search(const std::string& query, int k) {
    if (util::trim(query).empty()) throw ValidationError("search query must be non-empty");
    if (query.size() > 2048) throw ValidationError("search query exceeds 2048 characters");
    if (k <= 0) k = default_search_k;

    counters_.search_calls++;
    nlohmann::ordered_json canonical = canonical_search_request(query, k);
    std::string fp = request_fingerprint(canonical);

    if (cassette_ && cassette_->mode() == CassetteMode::Replay) {
        auto hit = cassette_->lookup(fp);
        if (!hit) throw CassetteMissError("cassette miss for search fingerprint " + fp);
        counters_.replayed_search++;
        std::vector<SearchResult> results;
        for (const auto& item : *hit)
            results.push_back(SearchResult{item.value("title", ""), item.value("snippet", ""),
                                           item.value("link", "")});
        return results;
    }

    std::vector<SearchResult> results = live_search(query, k);
    if (cassette_ && cassette_->mode() == CassetteMode::Record) {
        nlohmann::json recorded = nlohmann::json::array();
        for (const SearchResult& r : results)
            recorded.push_back(
                {{"title", r.title}, {"snippet", r.snippet}, {"link", r.link}});
        cassette_->append("search", fp, canonical, recorded);
    }
    return results;
}

}  // namespace inspire::gateways
