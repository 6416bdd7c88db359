// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "refind/confusion.hpp"
#include "refind/corpus.hpp"
#include "refind/errors.hpp"
#include "refind/features.hpp"
#include "refind/tokenize.hpp"

namespace refind {

enum class Comparator { GreaterThan, LessThan };

/// Single-feature threshold rule. The comparison is strict; equality
/// falls to the opposite label.
struct ThresholdRule {
    std::string feature_id;
    Comparator comparator = Comparator::GreaterThan;
    double threshold = 0.0;
    Status label_when_true = Status::NotFound;
};

struct Prediction {
    std::string uri;
    Status predicted = Status::Found;  // never Unknown

    bool operator==(const Prediction&) const = default;
};

inline Status opposite_label(Status s) {
    return s == Status::Found ? Status::NotFound : Status::Found;
}

inline Status threshold_label(const ThresholdRule& rule,
                              const FeatureVector& fv) {
    const double v = feature_value(fv, rule.feature_id);
    const bool holds = rule.comparator == Comparator::GreaterThan
                           ? v > rule.threshold
                           : v < rule.threshold;
    return holds ? rule.label_when_true : opposite_label(rule.label_when_true);
}

inline Prediction threshold_predict(const ThresholdRule& rule,
                                    const TitleRecord& record,
                                    const FeatureVector& fv) {
    return {record.uri, threshold_label(rule, fv)};
}

/// The paper's baseline: call every title a good query.
inline std::vector<Prediction> baseline_predict(
    const std::vector<TitleRecord>& records) {
    std::vector<Prediction> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back({r.uri, Status::Found});
    return out;
}

inline std::vector<Prediction> threshold_predict_corpus(
    const ThresholdRule& rule, const std::vector<TitleRecord>& records,
    const std::vector<FeatureVector>& features) {
    if (records.size() != features.size())
        throw DataError("records and features differ in length");
    std::vector<Prediction> out;
    out.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i)
        out.push_back(threshold_predict(rule, records[i], features[i]));
    return out;
}

/// Predicted-vs-actual counts with Found as the positive class.
inline ConfusionMatrix tally(const std::vector<Prediction>& predictions,
                             const std::vector<TitleRecord>& records) {
    if (predictions.size() != records.size())
        throw DataError("predictions and records differ in length");
    ConfusionMatrix m;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].status == Status::Unknown)
            throw UnlabeledRecord("record has no ground truth: " +
                                  records[i].uri);
        const bool pred_found = predictions[i].predicted == Status::Found;
        const bool actual_found = records[i].status == Status::Found;
        if (pred_found && actual_found) ++m.tp;
        else if (pred_found && !actual_found) ++m.fp;
        else if (!pred_found && actual_found) ++m.fn;
        else ++m.tn;
    }
    return m;
}

inline ConfusionMatrix evaluate_rule(
    const ThresholdRule& rule, const std::vector<TitleRecord>& records,
    const std::vector<FeatureVector>& features) {
    return tally(threshold_predict_corpus(rule, records, features), records);
}

/// One matrix per threshold, in input order. Thresholds must ascend —
/// that is what makes the monotone sweep property meaningful.
inline std::vector<std::pair<double, ConfusionMatrix>> sweep(
    const ThresholdRule& rule_template, const std::vector<double>& thresholds,
    const std::vector<TitleRecord>& records,
    const std::vector<FeatureVector>& features) {
    for (std::size_t i = 1; i < thresholds.size(); ++i) {
        if (!(thresholds[i - 1] < thresholds[i]))
            throw ConfigError("sweep thresholds must be strictly ascending");
    }
    std::vector<std::pair<double, ConfusionMatrix>> out;
    out.reserve(thresholds.size());
    ThresholdRule rule = rule_template;
    for (double t : thresholds) {
        rule.threshold = t;
        out.emplace_back(t, evaluate_rule(rule, records, features));
    }
    return out;
}

/// Word-count bucket [lo, hi] (hi == npos marks the open-ended overflow
/// bucket). percent_found is a fraction in [0,1], absent for empty buckets.
struct BucketRate {
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::size_t lo = 0;
    std::size_t hi = 0;
    std::size_t found = 0;
    std::size_t not_found = 0;
    std::optional<double> percent_found;

    std::size_t total() const { return found + not_found; }
};

struct BucketSpec {
    std::vector<std::size_t> boundaries;  // ascending upper edges
};

/// Success rate by title length: buckets are [0..b1], (b1..b2], ...; any
/// record beyond the last edge lands in one open-ended overflow bucket,
/// appended only when occupied.
inline std::vector<BucketRate> bucket_success_rates(
    const std::vector<TitleRecord>& records, const BucketSpec& spec) {
    if (spec.boundaries.empty())
        throw ConfigError("bucket spec needs at least one boundary");
    for (std::size_t i = 1; i < spec.boundaries.size(); ++i) {
        if (!(spec.boundaries[i - 1] < spec.boundaries[i]))
            throw ConfigError("bucket boundaries must be strictly ascending");
    }
    std::vector<BucketRate> buckets;
    buckets.reserve(spec.boundaries.size() + 1);
    std::size_t lo = 0;
    for (const std::size_t edge : spec.boundaries) {
        BucketRate b;
        b.lo = lo;
        b.hi = edge;
        buckets.push_back(b);
        lo = edge + 1;
    }
    BucketRate overflow;
    overflow.lo = lo;
    overflow.hi = BucketRate::npos;
    bool overflow_used = false;

    for (const auto& r : records) {
        if (r.status == Status::Unknown)
            throw UnlabeledRecord("record has no ground truth: " + r.uri);
        const std::size_t wc = tokenize(r.title).word_count();
        BucketRate* target = &overflow;
        for (auto& b : buckets) {
            if (wc <= b.hi) {
                target = &b;
                break;
            }
        }
        if (target == &overflow) overflow_used = true;
        if (r.status == Status::Found) ++target->found;
        else ++target->not_found;
    }
    if (overflow_used) buckets.push_back(overflow);
    for (auto& b : buckets) {
        if (b.total() > 0)
            b.percent_found = static_cast<double>(b.found) /
                              static_cast<double>(b.total());
    }
    return buckets;
}

/// Parses the CLI rule text, e.g.
/// `feature=stop_title_word op=gt threshold=0.7 label=not_found`.
inline ThresholdRule parse_rule_spec(std::string_view spec) {
    ThresholdRule rule;
    bool have_feature = false, have_op = false, have_threshold = false,
         have_label = false;
    std::size_t i = 0;
    while (i < spec.size()) {
        while (i < spec.size() && spec[i] == ' ') ++i;
        std::size_t end = spec.find(' ', i);
        if (end == std::string_view::npos) end = spec.size();
        const std::string_view part = spec.substr(i, end - i);
        i = end;
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("bad rule clause (want key=value): " +
                              std::string(part));
        const std::string_view key = part.substr(0, eq);
        const std::string_view value = part.substr(eq + 1);
        if (key == "feature") {
            rule.feature_id = std::string(value);
            have_feature = !value.empty();
        } else if (key == "op") {
            if (value == "gt" || value == "greater_than")
                rule.comparator = Comparator::GreaterThan;
            else if (value == "lt" || value == "less_than")
                rule.comparator = Comparator::LessThan;
            else
                throw ConfigError("bad rule op (want gt|lt): " +
                                  std::string(value));
            have_op = true;
        } else if (key == "threshold") {
            try {
                rule.threshold = std::stod(std::string(value));
            } catch (const std::exception&) {
                throw ConfigError("bad rule threshold: " + std::string(value));
            }
            if (!std::isfinite(rule.threshold))
                throw ConfigError("rule threshold must be finite");
            have_threshold = true;
        } else if (key == "label") {
            if (value == "found") rule.label_when_true = Status::Found;
            else if (value == "not_found")
                rule.label_when_true = Status::NotFound;
            else
                throw ConfigError("bad rule label (want found|not_found): " +
                                  std::string(value));
            have_label = true;
        } else {
            throw ConfigError("unknown rule key: " + std::string(key));
        }
    }
    if (!have_feature || !have_op || !have_threshold || !have_label)
        throw ConfigError(
            "rule needs feature=, op=, threshold= and label= clauses");
    return rule;
}

}  // namespace refind
