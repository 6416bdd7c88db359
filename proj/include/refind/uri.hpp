// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "refind/errors.hpp"

namespace refind {

namespace detail {

inline std::string ascii_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        out.push_back(static_cast<char>(
            std::tolower(static_cast<unsigned char>(c))));
    return out;
}

inline bool valid_scheme(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front())))
        return false;
    for (char c : s) {
        const auto u = static_cast<unsigned char>(c);
        if (!std::isalnum(u) && c != '+' && c != '-' && c != '.') return false;
    }
    return true;
}

}  // namespace detail

/// Canonicalizes an absolute URI: scheme and host are lowercased, default
/// ports (http:80, https:443) and the fragment are dropped, and a bare "/"
/// path is removed so "http://a.example/" == "http://a.example". Path and
/// query are otherwise preserved byte-for-byte, including case.
inline std::string normalize_uri(std::string_view uri) {
    const auto scheme_end = uri.find("://");
    if (scheme_end == std::string_view::npos || scheme_end == 0)
        throw InvalidUri(std::string(uri));
    const std::string_view scheme_raw = uri.substr(0, scheme_end);
    if (!detail::valid_scheme(scheme_raw)) throw InvalidUri(std::string(uri));

    std::string_view rest = uri.substr(scheme_end + 3);
    const auto frag = rest.find('#');
    if (frag != std::string_view::npos) rest = rest.substr(0, frag);

    auto auth_end = rest.find_first_of("/?");
    if (auth_end == std::string_view::npos) auth_end = rest.size();
    std::string_view authority = rest.substr(0, auth_end);
    std::string_view path_query = rest.substr(auth_end);

    std::string_view userinfo;
    const auto at = authority.rfind('@');
    if (at != std::string_view::npos) {
        userinfo = authority.substr(0, at + 1);
        authority = authority.substr(at + 1);
    }

    std::string_view host = authority;
    std::string_view port;
    // IPv6 literals carry brackets; the port colon, if any, follows ']'.
    const auto colon = (authority.starts_with('['))
                           ? authority.find(':', authority.find(']'))
                           : authority.rfind(':');
    if (colon != std::string_view::npos) {
        host = authority.substr(0, colon);
        port = authority.substr(colon + 1);
    }
    if (host.empty()) throw InvalidUri(std::string(uri));
    for (char c : port)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InvalidUri(std::string(uri));

    const std::string scheme = detail::ascii_lower(scheme_raw);
    const bool default_port = (scheme == "http" && port == "80") ||
                              (scheme == "https" && port == "443");

    std::string out = scheme;
    out += "://";
    out += userinfo;
    out += detail::ascii_lower(host);
    if (!port.empty() && !default_port) {
        out += ':';
        out += port;
    }
    if (path_query != "/") out += path_query;
    return out;
}

}  // namespace refind
