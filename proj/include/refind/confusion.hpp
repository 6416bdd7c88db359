// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <cmath>
#include <cstdint>

#include "refind/errors.hpp"

namespace refind {

/// 2x2 predicted-vs-actual counts with found as the positive class:
/// tp = predicted found / actually found, fp = predicted found / actually
/// not found, fn and tn the predicted-not-found row.
struct ConfusionMatrix {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;

    std::uint64_t total() const { return tp + fp + fn + tn; }
    std::uint64_t match() const { return tp + tn; }
    std::uint64_t mismatch() const { return fp + fn; }

    ConfusionMatrix& operator+=(const ConfusionMatrix& o) {
        tp += o.tp;
        fp += o.fp;
        fn += o.fn;
        tn += o.tn;
        return *this;
    }
    friend ConfusionMatrix operator+(ConfusionMatrix a,
                                     const ConfusionMatrix& b) {
        return a += b;
    }
    bool operator==(const ConfusionMatrix&) const = default;
};

/// Integer percent, rounding half away from zero.
inline int round_percent(double fraction) {
    return static_cast<int>(std::llround(fraction * 100.0));
}

/// Integer percent, truncating toward zero.
inline int floor_percent(double fraction) {
    return static_cast<int>(fraction * 100.0);
}

struct MatrixStats {
    std::uint64_t match = 0;
    std::uint64_t mismatch = 0;
    int percent_match = 0;    // rounded for display
    int percent_mismatch = 0;
    double match_fraction = 0.0;  // exact values
    double mismatch_fraction = 0.0;
};

inline MatrixStats matrix_stats(const ConfusionMatrix& m) {
    if (m.total() == 0) throw EmptyMatrix("confusion matrix has no counts");
    MatrixStats s;
    s.match = m.match();
    s.mismatch = m.mismatch();
    const double total = static_cast<double>(m.total());
    s.match_fraction = static_cast<double>(s.match) / total;
    s.mismatch_fraction = static_cast<double>(s.mismatch) / total;
    s.percent_match = round_percent(s.match_fraction);
    s.percent_mismatch = round_percent(s.mismatch_fraction);
    return s;
}

}  // namespace refind
