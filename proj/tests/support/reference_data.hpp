// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
//
// Published corpus-level tallies used as test fixtures. The numbers are
// frozen here from the study this tool reproduces; derived quantities in
// the tests were recomputed independently before being asserted.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "refind/confusion.hpp"
#include "refind/corpus.hpp"

namespace refind::testdata {

struct WordCountRow {
    std::size_t word_count;
    std::size_t found;
    std::size_t not_found;
};

/// Found/not-found split per title word count over the full 7157-title
/// study corpus.
inline const std::vector<WordCountRow>& word_count_rows() {
    static const std::vector<WordCountRow> rows = {
        {1, 197, 127},  {2, 363, 166},  {3, 665, 249},  {4, 596, 210},
        {5, 546, 199},  {6, 476, 175},  {7, 368, 136},  {8, 357, 129},
        {9, 249, 127},  {10, 216, 89},  {11, 175, 86},  {12, 130, 65},
        {13, 90, 53},   {14, 75, 31},   {15, 67, 31},   {16, 42, 23},
        {17, 29, 18},   {18, 27, 27},   {19, 21, 11},   {20, 10, 13},
        {21, 5, 9},     {22, 8, 5},     {23, 6, 4},     {24, 4, 8},
        {25, 3, 6},     {26, 3, 3},     {27, 2, 2},     {28, 2, 3},
        {29, 4, 3},     {30, 1, 4},     {31, 2, 3},     {32, 1, 0},
        {33, 2, 0},     {34, 1, 0},     {35, 2, 2},     {36, 1, 0},
        {37, 1, 1},     {38, 0, 1},     {39, 0, 1},     {40, 1, 1},
        {42, 0, 1},     {45, 1, 2},     {47, 1, 3},     {48, 1, 0},
        {52, 0, 1},     {53, 1, 0},     {59, 0, 1},     {63, 0, 1},
        {70, 0, 1},     {73, 0, 1},     {78, 0, 1},     {82, 0, 1},
        {94, 0, 1},     {101, 0, 1},    {113, 1, 0},
    };
    return rows;
}

/// Synthesizes a labeled corpus whose word-count distribution matches
/// word_count_rows(): each record's title is word_count repetitions of
/// "w". Sufficient for any statistic that depends only on word counts
/// and labels.
inline std::vector<TitleRecord> word_count_corpus() {
    std::vector<TitleRecord> corpus;
    std::size_t serial = 0;
    for (const auto& row : word_count_rows()) {
        std::string title;
        for (std::size_t i = 0; i < row.word_count; ++i) {
            if (!title.empty()) title += ' ';
            title += 'w';
        }
        for (std::size_t i = 0; i < row.found + row.not_found; ++i) {
            TitleRecord r;
            r.uri = "http://example.test/" + std::to_string(serial++);
            r.title = title;
            r.status = i < row.found ? Status::Found : Status::NotFound;
            corpus.push_back(std::move(r));
        }
    }
    return corpus;
}

struct FrequencyRow {
    std::size_t frequency;
    std::size_t value;
};

/// Character-count frequencies (first-standard-deviation band of the
/// study's character histogram).
inline const std::vector<FrequencyRow>& char_count_rows() {
    static const std::vector<FrequencyRow> rows = {
        {130, 18}, {128, 19}, {131, 20}, {99, 21},  {159, 22}, {149, 23},
        {133, 24}, {175, 25}, {130, 26}, {118, 27}, {124, 28}, {131, 29},
        {111, 30}, {143, 31}, {125, 32}, {132, 33}, {129, 34}, {119, 35},
        {107, 36}, {106, 37}, {82, 38},  {99, 39},  {95, 40},  {88, 41},
        {86, 42},  {99, 43},  {71, 44},
    };
    return rows;
}

/// Word-count frequencies from the same band.
inline const std::vector<FrequencyRow>& word_band_rows() {
    static const std::vector<FrequencyRow> rows = {
        {930, 3}, {836, 4}, {752, 5}, {651, 6},
        {504, 7}, {486, 8}, {376, 9}, {305, 10},
    };
    return rows;
}

/// The study's 101-word example title (reflowed to one line; the word
/// list and punctuation are verbatim).
inline const std::string& long_title() {
    static const std::string title =
        "focustribe studios --- building brand innovation --- 949 258 "
        "0118 --- creative branding, web development, online marketing "
        "--- web design, web applications, web strategy, user interface, "
        "flash application, content management, enterprise ecommerce, "
        "portal application, intranet portal, extranet portal, database "
        "design, database development, business intelligence, e-learning, "
        "product simulation, configurator, web application, ci, corporate "
        "identity, logo design, corporate collateral, graphic design, "
        "event marketing, tradeshow marketing and design, direct mail "
        "campaigns, promotional cd-roms, copywriting services, email "
        "marketing, search engine optimization, banner development, "
        "advertising, online advertising, pay-per-click consulting, "
        "focustribe studios, focustribe, focus121, focusone2one, "
        "focusbrand, focussolutions, martina juchli, roland "
        "schertenleib, juchli, schertenleib, newport beach, aliso "
        "viejo,";
    return title;
}

// Published confusion matrices as {tp, fp, fn, tn} with "predicted
// found" as the positive class. The source prints each table with the
// axes flipped relative to its own header (the row sums 4756/2401 can
// only be the corpus's actual found/not-found split; no four distinct
// classifiers would predict identical totals), so the printed rows are
// actual status and the printed columns are predictions.
inline ConfusionMatrix adverb_rule_matrix() {      // match 4759, 66%
    return {4746, 2388, 10, 13};
}
inline ConfusionMatrix stopword_rule_matrix() {    // match 4301, 60%
    return {3574, 1674, 1182, 727};
}
inline ConfusionMatrix stop_title_word_matrix() {  // match 5118, 72%
    return {4753, 2036, 3, 365};
}
inline ConfusionMatrix stop_title_char_matrix() {  // match 5119, 72%
    return {4748, 2030, 8, 371};
}
inline ConfusionMatrix baseline_matrix() {         // match 4756, 66%
    return {4756, 2401, 0, 0};
}

/// Actual outcome margins shared by every published matrix.
inline constexpr std::size_t kActualFound = 4756;
inline constexpr std::size_t kActualNotFound = 2401;
inline constexpr std::size_t kCorpusTotal = 7157;

}  // namespace refind::testdata
