// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "refind/lexicon.hpp"
#include "refind/tokenize.hpp"
#include "refind/utf8.hpp"

namespace refind {

/// Fraction of tokens whose lowercase form is in the lexicon; 0 for an
/// empty title.
inline double lexicon_ratio(const TokenizedTitle& t, const Lexicon& lex) {
    if (t.empty()) return 0.0;
    std::size_t hits = 0;
    for (const auto& w : t.folded) {
        if (lex.contains(w)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(t.word_count());
}

/// A phrase match over token positions, half-open: [begin_word, end_word).
struct MatchedSpan {
    std::size_t begin_word = 0;
    std::size_t end_word = 0;
    std::string phrase;  // single-space joined lowercase phrase
};

/// How much of a title is covered by stop-title phrases.
///
/// word_ratio = covered tokens / word_count. char_ratio's numerator is
/// the character length of the matched spans rejoined with single
/// interior spaces; the denominator is the full trimmed title length,
/// spaces included. Both are 0 for an empty title.
struct StopTitleCoverage {
    double word_ratio = 0.0;
    double char_ratio = 0.0;
    std::vector<MatchedSpan> matched_spans;
};

/// Greedy longest-match scan, left to right: at each position the longest
/// phrase in the set that matches wins and the scan resumes after it, so
/// spans never overlap.
inline StopTitleCoverage stop_title_coverage(const TokenizedTitle& t,
                                             const StopTitleSet& set) {
    StopTitleCoverage cov;
    if (t.empty() || set.empty()) return cov;

    std::size_t covered_words = 0;
    std::size_t covered_chars = 0;
    std::size_t i = 0;
    while (i < t.folded.size()) {
        const std::vector<std::size_t>* cands = set.candidates(t.folded[i]);
        std::size_t matched_len = 0;
        if (cands != nullptr) {
            for (std::size_t idx : *cands) {  // longest first
                const auto& phrase = set.phrases()[idx];
                if (phrase.size() > t.folded.size() - i) continue;
                bool ok = true;
                for (std::size_t j = 1; j < phrase.size(); ++j) {
                    if (t.folded[i + j] != phrase[j]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    matched_len = phrase.size();
                    break;
                }
            }
        }
        if (matched_len == 0) {
            ++i;
            continue;
        }
        MatchedSpan span;
        span.begin_word = i;
        span.end_word = i + matched_len;
        for (std::size_t j = i; j < span.end_word; ++j) {
            if (j > i) {
                span.phrase.push_back(' ');
                ++covered_chars;  // interior space of the span
            }
            span.phrase += t.folded[j];
            covered_chars += utf8::length(t.words[j]);
        }
        covered_words += matched_len;
        cov.matched_spans.push_back(std::move(span));
        i += matched_len;
    }
    cov.word_ratio = static_cast<double>(covered_words) /
                     static_cast<double>(t.word_count());
    cov.char_ratio = static_cast<double>(covered_chars) /
                     static_cast<double>(t.char_count);
    return cov;
}

/// True iff the whole lowercase token list equals a phrase of the set.
inline bool is_exact_stop_title(const TokenizedTitle& t,
                                const StopTitleSet& set) {
    return set.contains_exact(t.folded);
}

namespace detail {

inline bool is_ascii_punct(char c) {
    return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
           (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

/// Strips leading/trailing ASCII punctuation ("marketing," -> "marketing").
inline std::string_view strip_punct(std::string_view w) {
    std::size_t b = 0;
    std::size_t e = w.size();
    while (b < e && is_ascii_punct(w[b])) ++b;
    while (e > b && is_ascii_punct(w[e - 1])) --e;
    return w.substr(b, e - b);
}

}  // namespace detail

/// Case-insensitive word counts after punctuation stripping, restricted
/// to words occurring at least twice. Tokens that are pure punctuation
/// vanish and are not counted.
inline std::map<std::string, std::size_t> duplicate_word_counts(
    const TokenizedTitle& t) {
    std::map<std::string, std::size_t> counts;
    for (const auto& w : t.folded) {
        const std::string_view stripped = detail::strip_punct(w);
        if (!stripped.empty()) ++counts[std::string(stripped)];
    }
    for (auto it = counts.begin(); it != counts.end();) {
        it = it->second < 2 ? counts.erase(it) : std::next(it);
    }
    return counts;
}

}  // namespace refind
