// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "refind/errors.hpp"
#include "refind/tokenize.hpp"
#include "refind/utf8.hpp"

namespace refind {

/// A named set of lowercase, whitespace-free terms.
class Lexicon {
public:
    Lexicon() = default;
    Lexicon(std::string name, const std::vector<std::string>& terms)
        : name_(std::move(name)) {
        for (const auto& t : terms) add(t, 0);
    }

    const std::string& name() const { return name_; }
    std::size_t size() const { return terms_.size(); }
    bool contains(std::string_view folded_term) const {
        return terms_.count(std::string(folded_term)) > 0;
    }

private:
    friend Lexicon load_lexicon(const std::filesystem::path&, std::string);

    void add(std::string_view term, std::size_t line) {
        std::string folded = utf8::fold_case(term);
        for (char c : folded) {
            if (utf8::is_space(c)) {
                throw ParseError("lexicon term contains whitespace: '" +
                                     std::string(term) + "'",
                                 line);
            }
        }
        if (!terms_.insert(folded).second) {
            throw ParseError("duplicate lexicon term: '" + folded + "'", line);
        }
    }

    std::string name_;
    std::unordered_set<std::string> terms_;
};

namespace detail {

/// Shared line reader for lexicon and stop-title files: UTF-8 text, one
/// entry per line, blank lines and lines starting with '#' skipped.
template <typename Fn>
void for_each_entry_line(const std::filesystem::path& path, Fn&& fn) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string_view entry = trim(line);
        if (entry.empty() || entry.front() == '#') continue;
        fn(entry, lineno);
    }
}

}  // namespace detail

/// Loads a lexicon file. Duplicate terms (after case folding) are an
/// error naming the offending line. Name defaults to the file stem.
inline Lexicon load_lexicon(const std::filesystem::path& path,
                            std::string name = "") {
    Lexicon lex;
    lex.name_ = name.empty() ? path.stem().string() : std::move(name);
    detail::for_each_entry_line(path, [&](std::string_view entry,
                                          std::size_t lineno) {
        lex.add(entry, lineno);
    });
    return lex;
}

/// A named set of stop-title phrases, each stored as its lowercase token
/// list. Lookup is organized by first word so the coverage matcher can
/// try only candidate phrases at each position.
class StopTitleSet {
public:
    StopTitleSet() = default;
    StopTitleSet(std::string name, const std::vector<std::string>& phrases)
        : name_(std::move(name)) {
        for (const auto& p : phrases) add(p, 0);
    }

    const std::string& name() const { return name_; }
    std::size_t size() const { return phrases_.size(); }
    bool empty() const { return phrases_.empty(); }

    const std::vector<std::vector<std::string>>& phrases() const {
        return phrases_;
    }

    /// Phrase indices starting with `first_word`, longest phrase first.
    const std::vector<std::size_t>* candidates(
        std::string_view first_word) const {
        auto it = by_first_word_.find(std::string(first_word));
        return it == by_first_word_.end() ? nullptr : &it->second;
    }

    /// True iff the joined token list is itself a phrase in the set.
    bool contains_exact(const std::vector<std::string>& folded_words) const {
        if (folded_words.empty()) return false;
        return joined_.count(join(folded_words)) > 0;
    }

private:
    friend StopTitleSet load_stop_titles(const std::filesystem::path&,
                                         std::string);

    static std::string join(const std::vector<std::string>& words) {
        std::string out;
        for (const auto& w : words) {
            if (!out.empty()) out.push_back(' ');
            out += w;
        }
        return out;
    }

    void add(std::string_view phrase, std::size_t line) {
        const TokenizedTitle toks = tokenize(utf8::fold_case(phrase));
        if (toks.empty()) {
            throw ParseError("empty stop-title phrase", line);
        }
        if (!joined_.insert(join(toks.folded)).second) {
            throw ParseError(
                "duplicate stop-title phrase: '" + join(toks.folded) + "'",
                line);
        }
        phrases_.push_back(toks.folded);
        auto& bucket = by_first_word_[toks.folded.front()];
        // Keep buckets sorted longest-first for greedy longest-match.
        auto pos = bucket.begin();
        while (pos != bucket.end() &&
               phrases_[*pos].size() >= toks.folded.size()) {
            ++pos;
        }
        bucket.insert(pos, phrases_.size() - 1);
    }

    std::string name_;
    std::vector<std::vector<std::string>> phrases_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_first_word_;
    std::unordered_set<std::string> joined_;
};

inline StopTitleSet load_stop_titles(const std::filesystem::path& path,
                                     std::string name = "") {
    StopTitleSet set;
    set.name_ = name.empty() ? path.stem().string() : std::move(name);
    detail::for_each_entry_line(path, [&](std::string_view entry,
                                          std::size_t lineno) {
        set.add(entry, lineno);
    });
    return set;
}

}  // namespace refind
