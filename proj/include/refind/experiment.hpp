// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "refind/corpus.hpp"
#include "refind/errors.hpp"
#include "refind/format.hpp"
#include "refind/provider.hpp"
#include "refind/query.hpp"

namespace refind {

struct ExperimentEntry {
    std::string uri;
    QueryMode mode = QueryMode::Or;
    SearchResponse response;
    Judgment judgment;
};

struct ExperimentFailure {
    std::string uri;
    QueryMode mode = QueryMode::Or;
    std::string error;
};

struct ExperimentResult {
    std::vector<ExperimentEntry> entries;  // record order × mode order
    std::vector<ExperimentFailure> failures;
};

/// Runs each configured query mode over every record's title and judges
/// top-k membership. Per-record provider errors (and empty titles) are
/// collected as failures; the run itself never aborts.
inline ExperimentResult run_experiment(const std::vector<TitleRecord>& corpus,
                                       SearchClient& client,
                                       const std::vector<QueryMode>& modes,
                                       std::size_t k = 10) {
    ExperimentResult result;
    for (const auto& record : corpus) {
        for (const QueryMode mode : modes) {
            try {
                ExperimentEntry entry;
                entry.uri = record.uri;
                entry.mode = mode;
                entry.response = client.execute(build_query(record.title, mode), k);
                entry.judgment = judge(entry.response, record.uri);
                result.entries.push_back(std::move(entry));
            } catch (const Error& e) {
                result.failures.push_back({record.uri, mode, e.what()});
            }
        }
    }
    return result;
}

/// Writes the mode's judgments into a copy of the corpus as ground truth.
/// The Or rendering is the paper's plain title query, so it is the one
/// that defines found/not-found.
inline std::vector<TitleRecord> apply_judgments(
    const std::vector<TitleRecord>& corpus, const ExperimentResult& result,
    QueryMode mode = QueryMode::Or) {
    std::map<std::string, Status> status_by_uri;
    for (const auto& e : result.entries) {
        if (e.mode == mode) status_by_uri[e.uri] = e.judgment.status;
    }
    std::vector<TitleRecord> out = corpus;
    for (auto& r : out) {
        if (const auto it = status_by_uri.find(r.uri);
            it != status_by_uri.end())
            r.status = it->second;
    }
    return out;
}

/// One JSON line per (uri, mode) entry, stable field order.
inline std::string experiment_jsonl(const ExperimentResult& result) {
    std::string out;
    for (const auto& e : result.entries) {
        nlohmann::json j;
        j["uri"] = e.uri;
        j["mode"] = to_string(e.mode);
        j["rendered"] = e.response.query.rendered;
        j["provider"] = e.response.provider;
        j["retrieved_at"] = e.response.retrieved_at;
        j["total_results"] = e.response.total_results;
        j["top_results"] = e.response.top_results;
        j["judgment"]["status"] = to_string(e.judgment.status);
        if (e.judgment.rank) j["judgment"]["rank"] = *e.judgment.rank;
        out += j.dump();
        out += '\n';
    }
    return out;
}

namespace detail {

struct ModeCounts {
    std::optional<std::uint64_t> or_count, and_count, quoted_count;
};

inline std::string count_cell(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string("undefined");
}

/// Ratio of result counts; anything over zero (or over a missing count)
/// is explicitly undefined — never infinity.
inline std::string ratio_cell(const std::optional<std::uint64_t>& num,
                              const std::optional<std::uint64_t>& den) {
    if (!num || !den || *den == 0) return "undefined";
    return format_double(static_cast<double>(*num) /
                         static_cast<double>(*den));
}

}  // namespace detail

/// The scatter-plot CSV: per-title result counts by mode plus or/quoted
/// and and/quoted ratios, one row per corpus record, corpus order.
inline std::string experiment_csv(const std::vector<TitleRecord>& corpus,
                                  const ExperimentResult& result) {
    std::map<std::string, detail::ModeCounts> counts;
    std::map<std::string, Status> judged;
    for (const auto& e : result.entries) {
        auto& c = counts[e.uri];
        if (e.mode == QueryMode::Or) {
            c.or_count = e.response.total_results;
            judged[e.uri] = e.judgment.status;
        } else if (e.mode == QueryMode::And) {
            c.and_count = e.response.total_results;
        } else {
            c.quoted_count = e.response.total_results;
        }
    }
    std::string out =
        "uri,or_count,and_count,quoted_count,or_over_quoted,and_over_quoted,"
        "status\n";
    for (const auto& record : corpus) {
        const auto it = counts.find(record.uri);
        const detail::ModeCounts c =
            it == counts.end() ? detail::ModeCounts{} : it->second;
        const auto jt = judged.find(record.uri);
        const Status status =
            jt == judged.end() ? record.status : jt->second;
        out += record.uri;
        out += ',';
        out += detail::count_cell(c.or_count);
        out += ',';
        out += detail::count_cell(c.and_count);
        out += ',';
        out += detail::count_cell(c.quoted_count);
        out += ',';
        out += detail::ratio_cell(c.or_count, c.quoted_count);
        out += ',';
        out += detail::ratio_cell(c.and_count, c.quoted_count);
        out += ',';
        out += to_string(status);
        out += '\n';
    }
    return out;
}

}  // namespace refind
