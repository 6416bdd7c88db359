// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "refind/errors.hpp"
#include "refind/io.hpp"
#include "refind/provider.hpp"

namespace refind {

namespace detail {

inline std::string url_encode(std::string_view s) {
    static constexpr char kHex[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size() * 3);
    for (char c : s) {
        const auto u = static_cast<unsigned char>(c);
        const bool keep = (u >= 'A' && u <= 'Z') || (u >= 'a' && u <= 'z') ||
                          (u >= '0' && u <= '9') || c == '-' || c == '_' ||
                          c == '.' || c == '~';
        if (keep) {
            out.push_back(c);
        } else {
            out.push_back('%');
            out.push_back(kHex[u >> 4]);
            out.push_back(kHex[u & 0xF]);
        }
    }
    return out;
}

inline void replace_all(std::string& s, std::string_view what,
                        std::string_view with) {
    std::size_t pos = 0;
    while ((pos = s.find(what, pos)) != std::string::npos) {
        s.replace(pos, what.size(), with);
        pos += with.size();
    }
}

/// Resolves a dotted selector ("items[].link", "info.total") against a
/// JSON document; "[]" fans out over array elements. Collects every node
/// the path reaches; absent paths simply collect nothing.
inline void json_select(const nlohmann::json& node, std::string_view path,
                        std::vector<const nlohmann::json*>& out) {
    if (path.empty()) {
        out.push_back(&node);
        return;
    }
    const auto dot = path.find('.');
    std::string_view seg =
        path.substr(0, dot == std::string_view::npos ? path.size() : dot);
    const std::string_view rest =
        dot == std::string_view::npos ? std::string_view{}
                                      : path.substr(dot + 1);
    const bool iterate = seg.ends_with("[]");
    if (iterate) seg.remove_suffix(2);
    const nlohmann::json* cur = &node;
    if (!seg.empty()) {
        if (!cur->is_object()) return;
        const auto it = cur->find(std::string(seg));
        if (it == cur->end()) return;
        cur = &*it;
    }
    if (iterate) {
        if (!cur->is_array()) return;
        for (const auto& el : *cur) json_select(el, rest, out);
    } else {
        json_select(*cur, rest, out);
    }
}

inline std::vector<std::string> json_select_strings(const nlohmann::json& j,
                                                    std::string_view path) {
    std::vector<const nlohmann::json*> nodes;
    json_select(j, path, nodes);
    std::vector<std::string> out;
    for (const auto* n : nodes)
        if (n->is_string()) out.push_back(n->get<std::string>());
    return out;
}

inline std::uint64_t json_select_count(const nlohmann::json& j,
                                       std::string_view path) {
    std::vector<const nlohmann::json*> nodes;
    json_select(j, path, nodes);
    for (const auto* n : nodes) {
        if (n->is_number_unsigned() || n->is_number_integer())
            return n->get<std::uint64_t>();
        if (n->is_string()) {
            // Some providers report the estimate as a decimal string.
            try {
                return std::stoull(n->get<std::string>());
            } catch (const std::exception&) {
                return 0;
            }
        }
    }
    return 0;
}

}  // namespace detail

/// Generic JSON-over-HTTP search backend. Everything provider-specific is
/// configuration: URL template ({query}, {k}, {api_key} substituted),
/// method, response selectors, and the environment variable holding the
/// API key. See README for a worked config example.
class HttpProvider : public SearchProvider {
public:
    explicit HttpProvider(const std::filesystem::path& config_path) {
        nlohmann::json cfg;
        try {
            cfg = nlohmann::json::parse(read_text_file(config_path));
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("bad provider config " + config_path.string() +
                              ": " + e.what());
        }
        name_ = cfg.value("name", std::string("http"));
        endpoint_ = cfg.value("endpoint", std::string());
        if (endpoint_.empty())
            throw ConfigError("provider config needs an endpoint template");
        method_ = cfg.value("method", std::string("GET"));
        if (method_ != "GET" && method_ != "POST")
            throw ConfigError("provider method must be GET or POST, got " +
                              method_);
        results_path_ = cfg.value("results_path", std::string());
        if (results_path_.empty())
            throw ConfigError("provider config needs results_path");
        total_path_ = cfg.value("total_path", std::string());
        api_key_header_ = cfg.value("api_key_header", std::string());
        timeout_seconds_ = cfg.value("timeout_seconds", 10);
        if (const std::string env = cfg.value("api_key_env", std::string());
            !env.empty()) {
            const char* key = std::getenv(env.c_str());
            if (key == nullptr || *key == '\0')
                throw ConfigError("environment variable " + env +
                                  " is empty; the provider needs its key");
            api_key_ = key;
        }
        if (!endpoint_.starts_with("http://") &&
            !endpoint_.starts_with("https://"))
            throw ConfigError("endpoint must be http:// or https://");
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
        if (endpoint_.starts_with("https://"))
            throw ConfigError(
                "built without TLS support; use an http:// endpoint");
#endif
    }

    std::string name() const override { return name_; }

    ProviderResult search(const std::string& rendered_query,
                          std::size_t k) override {
        std::string url = endpoint_;
        detail::replace_all(url, "{query}", detail::url_encode(rendered_query));
        detail::replace_all(url, "{k}", std::to_string(k));
        if (!api_key_.empty()) detail::replace_all(url, "{api_key}", api_key_);

        const auto scheme_end = url.find("://");
        auto path_start = url.find('/', scheme_end + 3);
        if (path_start == std::string::npos) path_start = url.size();
        const std::string base = url.substr(0, path_start);
        std::string target = url.substr(path_start);
        if (target.empty()) target = "/";

        httplib::Client client(base);
        client.set_connection_timeout(timeout_seconds_);
        client.set_read_timeout(timeout_seconds_);
        client.set_follow_location(true);
        httplib::Headers headers;
        if (!api_key_header_.empty() && !api_key_.empty())
            headers.emplace(api_key_header_, api_key_);

        const httplib::Result res =
            method_ == "POST"
                ? client.Post(target, headers, "", "application/json")
                : client.Get(target, headers);
        if (!res)
            throw ProviderError("transport failure: " +
                                httplib::to_string(res.error()));
        if (res->status == 429) {
            double retry_after = 1.0;
            if (res->has_header("Retry-After")) {
                try {
                    retry_after = std::stod(res->get_header_value("Retry-After"));
                } catch (const std::exception&) {
                }
            }
            throw RateLimited("provider rate limit (HTTP 429)", retry_after);
        }
        if (res->status == 402)
            throw QuotaExceeded("provider quota exhausted (HTTP 402)");
        if (res->status < 200 || res->status >= 300)
            throw ProviderError("HTTP " + std::to_string(res->status) +
                                " from provider");

        nlohmann::json body;
        try {
            body = nlohmann::json::parse(res->body);
        } catch (const nlohmann::json::exception& e) {
            throw ProviderError(std::string("unparseable provider response: ") +
                                e.what());
        }
        ProviderResult out;
        out.results = detail::json_select_strings(body, results_path_);
        if (!total_path_.empty())
            out.total_results = detail::json_select_count(body, total_path_);
        return out;
    }

private:
    std::string name_;
    std::string endpoint_;
    std::string method_;
    std::string results_path_;
    std::string total_path_;
    std::string api_key_;
    std::string api_key_header_;
    int timeout_seconds_ = 10;
};

}  // namespace refind
