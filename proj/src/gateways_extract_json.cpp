#include <string>
#include <vector>

#include "inspire/gateways/gateway.hpp"

namespace inspire::gateways {

namespace {

std::optional<nlohmann::json> try_parse(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (!j.is_discarded() && (j.is_object() || j.is_array())) return j;
    return std::nullopt;
}

// LLMs frequently emit Python-style dicts ('key': 'value'); rewrite single
// quotes to double quotes outside of double-quoted strings and retry.
std::optional<nlohmann::json> try_parse_lenient(const std::string& text) {
    if (auto j = try_parse(text)) return j;
    std::string fixed;
    fixed.reserve(text.size());
    bool in_double = false;
    bool escaped = false;
    for (char c : text) {
        if (escaped) {
            fixed.push_back(c);
            escaped = false;
            continue;
        }
        if (c == '\\') {
            fixed.push_back(c);
            escaped = true;
            continue;
        }
        if (c == '"') in_double = !in_double;
        if (c == '\'' && !in_double) {
            fixed.push_back('"');
            continue;
        }
        fixed.push_back(c);
    }
    return try_parse(fixed);
}

// Candidate spans: balanced {...} or [...] regions (quote-aware).
std::vector<std::string> balanced_spans(const std::string& text) {
    std::vector<std::string> spans;
    for (size_t i = 0; i < text.size(); ++i) {
        char open = text[i];
        if (open != '{' && open != '[') continue;
        char close = (open == '{') ? '}' : ']';
        int depth = 0;
        bool in_str = false;
        bool escaped = false;
        for (size_t j = i; j < text.size(); ++j) {
            char c = text[j];
            if (escaped) {
                escaped = false;
                continue;
            }
            if (c == '\\') {
                escaped = true;
                continue;
            }
            if (c == '"') in_str = !in_str;
            if (in_str) continue;
            if (c == open) ++depth;
            else if (c == close && --depth == 0) {
                spans.push_back(text.substr(i, j - i + 1));
                break;
            }
        }
    }
    return spans;
}

}  // namespace

nlohmann::json extract_json(const std::string& text) {
    // Fenced blocks first.
    size_t pos = 0;
    while ((pos = text.find("```", pos)) != std::string::npos) {
        size_t body_start = text.find('\n', pos);
        if (body_start == std::string::npos) break;
        size_t end = text.find("```", body_start);
        if (end == std::string::npos) break;
        std::string block = text.substr(body_start + 1, end - body_start - 1);
        if (auto j = try_parse_lenient(block)) return *j;
        for (const std::string& span : balanced_spans(block))
            if (auto j = try_parse_lenient(span)) return *j;
        pos = end + 3;
    }
    for (const std::string& span : balanced_spans(text))
        if (auto j = try_parse_lenient(span)) return *j;
    throw NoJsonFoundError("no JSON object or array found in text");
}

}  // namespace inspire::gateways
