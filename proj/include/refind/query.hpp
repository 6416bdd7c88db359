// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refind/corpus.hpp"
#include "refind/errors.hpp"
#include "refind/tokenize.hpp"
#include "refind/uri.hpp"

namespace refind {

enum class QueryMode { Or, And, Quoted };

inline std::string_view to_string(QueryMode m) {
    switch (m) {
        case QueryMode::Or: return "or";
        case QueryMode::And: return "and";
        default: return "quoted";
    }
}

inline QueryMode query_mode_from_string(std::string_view s) {
    if (s == "or") return QueryMode::Or;
    if (s == "and") return QueryMode::And;
    if (s == "quoted") return QueryMode::Quoted;
    throw ConfigError("unrecognized query mode: " + std::string(s));
}

struct QuerySpec {
    QueryMode mode = QueryMode::Or;
    std::vector<std::string> terms;
    std::string rendered;

    bool operator==(const QuerySpec&) const = default;
};

/// The three query renderings: Or joins words as-is, And prefixes every
/// word with "+", Quoted wraps the joined words in double quotes. Tokens
/// pass through verbatim — punctuation and apostrophes included.
inline std::string render_query(QueryMode mode,
                                const std::vector<std::string>& terms) {
    std::string out;
    if (mode == QueryMode::Quoted) out.push_back('"');
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) out.push_back(' ');
        if (mode == QueryMode::And) out.push_back('+');
        out += terms[i];
    }
    if (mode == QueryMode::Quoted) out.push_back('"');
    return out;
}

inline QuerySpec build_query(std::string_view title, QueryMode mode) {
    QuerySpec q;
    q.mode = mode;
    q.terms = tokenize(title).words;
    if (q.terms.empty())
        throw EmptyTitle("cannot build a query from an empty title");
    q.rendered = render_query(mode, q.terms);
    return q;
}

struct SearchResponse {
    QuerySpec query;
    std::uint64_t total_results = 0;
    std::vector<std::string> top_results;  // normalized, duplicate-free
    std::string provider;
    std::int64_t retrieved_at = 0;

    bool operator==(const SearchResponse&) const = default;
};

struct Judgment {
    std::string target_uri;
    Status status = Status::NotFound;
    std::optional<std::size_t> rank;  // 1-based; present iff Found

    bool operator==(const Judgment&) const = default;
};

/// Normalizes when possible; a result URI a provider hands back in some
/// unparseable shape stays verbatim rather than sinking the whole response.
inline std::string normalize_or_keep(const std::string& uri) {
    try {
        return normalize_uri(uri);
    } catch (const InvalidUri&) {
        return uri;
    }
}

/// Found iff the normalized target equals one of the (already normalized)
/// top results; rank is its 1-based position.
inline Judgment judge(const SearchResponse& resp, std::string_view target_uri) {
    Judgment j;
    j.target_uri = std::string(target_uri);
    const std::string target = normalize_or_keep(j.target_uri);
    for (std::size_t i = 0; i < resp.top_results.size(); ++i) {
        if (resp.top_results[i] == target) {
            j.status = Status::Found;
            j.rank = i + 1;
            break;
        }
    }
    return j;
}

}  // namespace refind
