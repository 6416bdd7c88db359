// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "refind/analysis.hpp"
#include "refind/corpus.hpp"
#include "refind/errors.hpp"
#include "refind/lexicon.hpp"
#include "refind/tokenize.hpp"

namespace refind {

// Reserved ratio keys; lexicon names may not shadow them.
inline constexpr std::string_view kStopTitleWordFeature = "stop_title_word";
inline constexpr std::string_view kStopTitleCharFeature = "stop_title_char";

struct FeatureVector {
    std::size_t word_count = 0;
    std::size_t char_count = 0;
    std::size_t longest_word = 0;
    std::map<std::string, double> ratios;  // feature id -> fraction in [0,1]
    bool exact_stop_title = false;

    bool operator==(const FeatureVector&) const = default;
};

/// Uniform numeric view over a vector, so threshold rules can target any
/// feature by id: the three counts, exact_stop_title (0/1) and every
/// ratio entry.
inline double feature_value(const FeatureVector& fv,
                            std::string_view feature_id) {
    if (feature_id == "word_count")
        return static_cast<double>(fv.word_count);
    if (feature_id == "char_count")
        return static_cast<double>(fv.char_count);
    if (feature_id == "longest_word")
        return static_cast<double>(fv.longest_word);
    if (feature_id == "exact_stop_title")
        return fv.exact_stop_title ? 1.0 : 0.0;
    const auto it = fv.ratios.find(std::string(feature_id));
    if (it == fv.ratios.end())
        throw UnknownFeature("no such feature: " + std::string(feature_id));
    return it->second;
}

/// One ratio entry per lexicon (keyed by lexicon name) plus the stop-title
/// word/char coverages and the scalar counts.
inline FeatureVector featurize(const TitleRecord& record,
                               const std::vector<Lexicon>& lexicons,
                               const StopTitleSet& stop_titles) {
    const TokenizedTitle toks = tokenize(record.title);
    FeatureVector fv;
    fv.word_count = toks.word_count();
    fv.char_count = toks.char_count;
    fv.longest_word = longest_word(toks);
    for (const auto& lex : lexicons) {
        if (lex.name().empty())
            throw ConfigError("lexicon has no name");
        if (lex.name() == kStopTitleWordFeature ||
            lex.name() == kStopTitleCharFeature)
            throw ConfigError("lexicon name collides with built-in feature: " +
                              lex.name());
        if (!fv.ratios.emplace(lex.name(), lexicon_ratio(toks, lex)).second)
            throw ConfigError("duplicate lexicon name: " + lex.name());
    }
    const StopTitleCoverage cov = stop_title_coverage(toks, stop_titles);
    fv.ratios[std::string(kStopTitleWordFeature)] = cov.word_ratio;
    fv.ratios[std::string(kStopTitleCharFeature)] = cov.char_ratio;
    fv.exact_stop_title = is_exact_stop_title(toks, stop_titles);
    return fv;
}

inline std::vector<FeatureVector> featurize_corpus(
    const std::vector<TitleRecord>& records,
    const std::vector<Lexicon>& lexicons, const StopTitleSet& stop_titles) {
    std::vector<FeatureVector> out;
    out.reserve(records.size());
    for (const auto& r : records)
        out.push_back(featurize(r, lexicons, stop_titles));
    return out;
}

}  // namespace refind
