// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "refind/analysis.hpp"
#include "refind/corpus.hpp"
#include "refind/errors.hpp"
#include "refind/html.hpp"
#include "refind/io.hpp"
#include "refind/lexicon.hpp"
#include "refind/snapshot_store.hpp"
#include "refind/tokenize.hpp"

namespace refind {

struct FilterConfig {
    std::size_t min_content_words = 50;
    bool require_english = true;
    // Fraction of content words that must hit the English stopword list.
    double english_stopword_hit_threshold = 0.02;
};

enum class RejectReason { TooFewWords, NonEnglish, UndecodableHtml };

inline std::string_view to_string(RejectReason r) {
    switch (r) {
        case RejectReason::TooFewWords: return "TooFewWords";
        case RejectReason::NonEnglish: return "NonEnglish";
        default: return "UndecodableHtml";
    }
}

struct Rejection {
    TitleRecord record;
    RejectReason reason = RejectReason::TooFewWords;
    std::string detail;
};

struct FilterOutcome {
    std::vector<TitleRecord> kept;
    std::vector<Rejection> rejected;
};

namespace detail {

/// Fraction of visible-text words that, case-folded and stripped of edge
/// punctuation, appear in the English stopword lexicon. 0 for empty text.
inline double english_hit_fraction(std::string_view html,
                                   const Lexicon& english) {
    const TokenizedTitle toks = tokenize(html::visible_text(html));
    if (toks.empty()) return 0.0;
    std::size_t hits = 0;
    for (const auto& w : toks.folded) {
        const std::string_view stripped = strip_punct(w);
        if (!stripped.empty() && english.contains(stripped)) ++hits;
    }
    return static_cast<double>(hits) /
           static_cast<double>(toks.word_count());
}

}  // namespace detail

/// Partitions records into kept and rejected per the corpus filters:
/// fewer than min_content_words visible words rejects a page, and (when
/// enabled) so does an English-stopword hit fraction below threshold.
/// Records pass through in input order; there is no cross-record state.
inline FilterOutcome apply_filters(
    const std::vector<std::pair<TitleRecord, PageSnapshot>>& records,
    const FilterConfig& config, const Lexicon& english) {
    FilterOutcome out;
    for (const auto& [record, snapshot] : records) {
        const std::size_t words = html::content_word_count(snapshot.html);
        if (words < config.min_content_words) {
            out.rejected.push_back(
                {record, RejectReason::TooFewWords,
                 std::to_string(words) + " content words"});
            continue;
        }
        if (config.require_english) {
            const double hit =
                detail::english_hit_fraction(snapshot.html, english);
            if (hit < config.english_stopword_hit_threshold) {
                out.rejected.push_back(
                    {record, RejectReason::NonEnglish,
                     "stopword hit fraction " + std::to_string(hit)});
                continue;
            }
        }
        out.kept.push_back(record);
    }
    return out;
}

/// Optional ground-truth labels applied at ingest: JSON lines of
/// {"uri": ..., "status": "found"|"not_found"|"unknown"}.
inline std::map<std::string, Status> load_labels(
    const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    std::map<std::string, Status> labels;
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin < text.size()) {
        auto end = text.find('\n', begin);
        if (end == std::string::npos) end = text.size();
        ++line_no;
        std::string_view line(text.data() + begin, end - begin);
        begin = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            labels[j.at("uri").get<std::string>()] =
                status_from_string(j.at("status").get<std::string>());
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad label line: ") + e.what(),
                             line_no);
        } catch (const DataError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return labels;
}

struct IngestResult {
    std::vector<TitleRecord> kept;
    std::vector<Rejection> rejected;
};

/// Builds a corpus from a snapshot store: pages are decoded, titles
/// extracted, labels attached when present, then the filters applied.
/// Per-page decode failures become rejections, never aborts. Output is
/// ordered by URI (the store's iteration order), so results are stable.
inline IngestResult ingest_store(const SnapshotStore& store,
                                 const std::map<std::string, Status>& labels,
                                 const FilterConfig& config,
                                 const Lexicon& english) {
    std::vector<std::pair<TitleRecord, PageSnapshot>> pages;
    IngestResult result;
    for (const auto& uri : store.uris()) {
        TitleRecord record;
        record.uri = uri;
        if (const auto it = labels.find(uri); it != labels.end())
            record.status = it->second;
        PageSnapshot snap;
        try {
            snap = store.snapshot(uri);
        } catch (const MalformedHtml& e) {
            result.rejected.push_back(
                {std::move(record), RejectReason::UndecodableHtml, e.what()});
            continue;
        }
        record.title = html::extract_title(snap.html);
        pages.emplace_back(std::move(record), std::move(snap));
    }
    FilterOutcome filtered = apply_filters(pages, config, english);
    result.kept = std::move(filtered.kept);
    for (auto& r : filtered.rejected) result.rejected.push_back(std::move(r));
    return result;
}

}  // namespace refind
