#include <httplib.h>

#include "inspire/gateways/gateway.hpp"

namespace inspire::gateways {

namespace {

// Splits "https://host:port/prefix" into client target and path prefix.
struct UrlParts {
    std::string origin;  // scheme://host[:port]
    std::string prefix;  // path prefix, no trailing slash
};

UrlParts split_url(const std::string& base_url) {
    UrlParts parts;
    size_t scheme_end = base_url.find("://");
    size_t path_start = (scheme_end == std::string::npos)
                            ? base_url.find('/')
                            : base_url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        parts.origin = base_url;
    } else {
        parts.origin = base_url.substr(0, path_start);
        parts.prefix = base_url.substr(path_start);
        while (!parts.prefix.empty() && parts.prefix.back() == '/') parts.prefix.pop_back();
    }
    return parts;
}

class HttpTransport : public Transport {
public:
    HttpResponse post_json(const std::string& base_url, const std::string& path,
                           const std::map<std::string, std::string>& headers,
                           const std::string& body) override {
        UrlParts parts = split_url(base_url);
        httplib::Client client(parts.origin);
        client.set_connection_timeout(30, 0);
        client.set_read_timeout(120, 0);
        httplib::Headers hl;
        for (const auto& [k, v] : headers) hl.emplace(k, v);
        auto result = client.Post(parts.prefix + path, hl, body, "application/json");
        if (!result)
            throw TransportError("connection to " + parts.origin +
                                 " failed: " + httplib::to_string(result.error()));
        return HttpResponse{result->status, result->body};
    }
};

}  // namespace

std::unique_ptr<Transport> make_http_transport() { return std::make_unique<HttpTransport>(); }

}  // namespace inspire::gateways
