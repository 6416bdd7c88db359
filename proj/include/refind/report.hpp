// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "refind/analysis.hpp"
#include "refind/classify.hpp"
#include "refind/confusion.hpp"
#include "refind/corpus.hpp"
#include "refind/errors.hpp"
#include "refind/fisher.hpp"
#include "refind/format.hpp"
#include "refind/stats.hpp"
#include "refind/tokenize.hpp"

namespace refind {

namespace detail {

inline std::string pad_left(std::string_view s, std::size_t width) {
    std::string out;
    if (s.size() < width) out.assign(width - s.size(), ' ');
    out += s;
    return out;
}

inline std::string pad_right(std::string_view s, std::size_t width) {
    std::string out(s);
    if (out.size() < width) out.append(width - out.size(), ' ');
    return out;
}

}  // namespace detail

/// Predicted-by-actual table with match/mismatch totals and integer
/// percents. The exact counts survive rendering; parse_confusion_table
/// recovers them.
inline std::string render_confusion_table(std::string_view title,
                                          const ConfusionMatrix& m) {
    const MatrixStats stats = matrix_stats(m);
    std::string out;
    if (!title.empty()) {
        out += title;
        out += '\n';
    }
    out += detail::pad_right("", 20);
    out += detail::pad_left("actual_found", 14);
    out += detail::pad_left("actual_not_found", 18);
    out += '\n';
    out += detail::pad_right("predicted_found", 20);
    out += detail::pad_left(std::to_string(m.tp), 14);
    out += detail::pad_left(std::to_string(m.fp), 18);
    out += '\n';
    out += detail::pad_right("predicted_not_found", 20);
    out += detail::pad_left(std::to_string(m.fn), 14);
    out += detail::pad_left(std::to_string(m.tn), 18);
    out += '\n';
    out += "match " + std::to_string(stats.match) + " (" +
           std::to_string(stats.percent_match) + "%)\n";
    out += "mismatch " + std::to_string(stats.mismatch) + " (" +
           std::to_string(stats.percent_mismatch) + "%)\n";
    return out;
}

/// Recovers the four counts from a rendered confusion table.
inline ConfusionMatrix parse_confusion_table(std::string_view text) {
    ConfusionMatrix m;
    bool saw_found = false;
    bool saw_not_found = false;
    std::size_t begin = 0;
    while (begin < text.size()) {
        auto end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(begin, end - begin);
        begin = end + 1;
        const bool found_row = line.starts_with("predicted_found");
        const bool not_found_row = line.starts_with("predicted_not_found");
        if (!found_row && !not_found_row) continue;
        const std::string_view rest =
            line.substr(not_found_row ? 19 : 15);
        std::size_t a = 0, b = 0;
        int fields = 0;
        std::size_t i = 0;
        while (i < rest.size() && fields < 2) {
            while (i < rest.size() && rest[i] == ' ') ++i;
            std::size_t v = 0;
            bool any = false;
            while (i < rest.size() && rest[i] >= '0' && rest[i] <= '9') {
                v = v * 10 + static_cast<std::size_t>(rest[i] - '0');
                ++i;
                any = true;
            }
            if (!any) break;
            (fields == 0 ? a : b) = v;
            ++fields;
        }
        if (fields != 2)
            throw DataError("confusion table row has fewer than two counts");
        if (not_found_row) {
            m.fn = a;
            m.tn = b;
            saw_not_found = true;
        } else {
            m.tp = a;
            m.fp = b;
            saw_found = true;
        }
    }
    if (!saw_found || !saw_not_found)
        throw DataError("text does not contain a rendered confusion table");
    return m;
}

inline std::string render_significance(const ConfusionMatrix& test,
                                       const ConfusionMatrix& baseline) {
    return "fisher_vs_baseline p=" +
           format_double(compare_to_baseline(test, baseline)) + "\n";
}

/// `threshold,tp,fp,fn,tn,match,mismatch,percent_match` rows; percent at
/// full precision — integer rendering is for tables, not CSVs.
inline std::string sweep_csv(
    const std::vector<std::pair<double, ConfusionMatrix>>& rows) {
    std::string out = "threshold,tp,fp,fn,tn,match,mismatch,percent_match\n";
    for (const auto& [threshold, m] : rows) {
        const MatrixStats stats = matrix_stats(m);
        out += format_double(threshold);
        out += ',';
        out += std::to_string(m.tp);
        out += ',';
        out += std::to_string(m.fp);
        out += ',';
        out += std::to_string(m.fn);
        out += ',';
        out += std::to_string(m.tn);
        out += ',';
        out += std::to_string(stats.match);
        out += ',';
        out += std::to_string(stats.mismatch);
        out += ',';
        out += format_double(stats.match_fraction * 100.0);
        out += '\n';
    }
    return out;
}

inline std::string render_stats_block(std::string_view label,
                                      const DescriptiveStats& s) {
    std::string out;
    out += label;
    out += '\n';
    out += "n " + std::to_string(s.n) + "\n";
    out += "mean " + format_double(s.mean) + "\n";
    out += "std_dev " + format_double(s.std_dev) + "\n";
    out += "min " + format_double(s.min) + "\n";
    out += "max " + format_double(s.max) + "\n";
    return out;
}

inline std::string histogram_csv(
    const std::vector<std::pair<double, std::size_t>>& bins) {
    std::string out = "bin,count\n";
    for (const auto& [bin, count] : bins) {
        out += format_double(bin);
        out += ',';
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

/// Success rate by word-count bucket. Prose-style percents truncate
/// (71.51% of titles of ten words or less reads as "71%"), hence
/// floor_percent here; the per-count table below rounds instead.
inline std::string render_bucket_table(const std::vector<BucketRate>& buckets) {
    std::string out = detail::pad_right("words", 10);
    out += detail::pad_left("found", 10);
    out += detail::pad_left("not_found", 12);
    out += detail::pad_left("percent_found", 15);
    out += '\n';
    for (const auto& b : buckets) {
        // Word count 0 only occurs for flagged empty titles; the first
        // bucket keeps its conventional "1-" label regardless.
        std::string label = std::to_string(std::max<std::size_t>(b.lo, 1));
        if (b.hi == BucketRate::npos) {
            label += "+";
        } else {
            label += "-" + std::to_string(b.hi);
        }
        out += detail::pad_right(label, 10);
        out += detail::pad_left(std::to_string(b.found), 10);
        out += detail::pad_left(std::to_string(b.not_found), 12);
        out += detail::pad_left(
            b.percent_found
                ? std::to_string(floor_percent(*b.percent_found)) + "%"
                : std::string("undefined"),
            15);
        out += '\n';
    }
    return out;
}

/// Found/not-found split per exact word count, rounded integer percent.
inline std::string per_count_success_csv(
    const std::vector<TitleRecord>& records) {
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_count;
    for (const auto& r : records) {
        if (r.status == Status::Unknown)
            throw UnlabeledRecord("record has no ground truth: " + r.uri);
        auto& [found, not_found] = by_count[tokenize(r.title).word_count()];
        if (r.status == Status::Found) ++found;
        else ++not_found;
    }
    std::string out = "word_count,found,not_found,percent_found\n";
    for (const auto& [wc, counts] : by_count) {
        const auto& [found, not_found] = counts;
        const double rate = static_cast<double>(found) /
                            static_cast<double>(found + not_found);
        out += std::to_string(wc);
        out += ',';
        out += std::to_string(found);
        out += ',';
        out += std::to_string(not_found);
        out += ',';
        out += std::to_string(round_percent(rate));
        out += '\n';
    }
    return out;
}

/// Corpus-wide duplicate-word tally: per-title duplicate counts summed,
/// top `top_n` rows ordered by count (descending) then word.
inline std::string duplicate_words_csv(const std::vector<TitleRecord>& records,
                                       std::size_t top_n = 10) {
    std::map<std::string, std::size_t> totals;
    for (const auto& r : records) {
        for (const auto& [word, count] :
             duplicate_word_counts(tokenize(r.title)))
            totals[word] += count;
    }
    std::vector<std::pair<std::string, std::size_t>> rows(totals.begin(),
                                                          totals.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (rows.size() > top_n) rows.resize(top_n);
    std::string out = "word,count\n";
    for (const auto& [word, count] : rows) {
        out += word;
        out += ',';
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

}  // namespace refind
