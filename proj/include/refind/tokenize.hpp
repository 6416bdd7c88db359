// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "refind/utf8.hpp"

namespace refind {

/// A title split into whitespace-separated tokens. `raw` keeps the
/// end-trimmed original; `folded` is a lowercase shadow of `words`,
/// index-aligned, used for all matching. char_count counts code points
/// of `raw`, interior spaces included.
struct TokenizedTitle {
    std::string raw;
    std::vector<std::string> words;
    std::vector<std::string> folded;
    std::size_t char_count = 0;

    std::size_t word_count() const { return words.size(); }
    bool empty() const { return words.empty(); }
};

inline std::string_view trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && utf8::is_space(s[b])) ++b;
    while (e > b && utf8::is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

/// A word is any maximal run of non-whitespace characters.
inline TokenizedTitle tokenize(std::string_view title) {
    TokenizedTitle t;
    const std::string_view trimmed = trim(title);
    t.raw.assign(trimmed);
    t.char_count = utf8::length(trimmed);
    std::size_t i = 0;
    while (i < trimmed.size()) {
        while (i < trimmed.size() && utf8::is_space(trimmed[i])) ++i;
        const std::size_t start = i;
        while (i < trimmed.size() && !utf8::is_space(trimmed[i])) ++i;
        if (i > start) {
            t.words.emplace_back(trimmed.substr(start, i - start));
            t.folded.push_back(utf8::fold_case(t.words.back()));
        }
    }
    return t;
}

/// Longest token length in code points; 0 for an empty title.
inline std::size_t longest_word(const TokenizedTitle& t) {
    std::size_t best = 0;
    for (const auto& w : t.words) best = std::max(best, utf8::length(w));
    return best;
}

}  // namespace refind
