// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "refind/errors.hpp"

namespace refind {

struct DescriptiveStats {
    std::size_t n = 0;
    double mean = 0.0;
    double std_dev = 0.0;  // population definition
    double min = 0.0;
    double max = 0.0;
};

inline DescriptiveStats descriptive(std::span<const double> values) {
    if (values.empty()) throw EmptyInput("descriptive stats need >= 1 value");
    DescriptiveStats s;
    s.n = values.size();
    s.min = values.front();
    s.max = values.front();
    double sum = 0.0;
    for (double v : values) {
        sum += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    s.mean = sum / static_cast<double>(s.n);
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.std_dev = std::sqrt(sq / static_cast<double>(s.n));
    return s;
}

/// Fixed-width bins: a value v lands in bin floor(v / width). Bins between
/// the smallest and largest occupied one are present even when empty; the
/// pair's first element is the bin's lower edge.
inline std::vector<std::pair<double, std::size_t>> histogram(
    std::span<const double> values, double bin_width) {
    if (!(bin_width > 0.0)) throw DataError("bin width must be positive");
    std::vector<std::pair<double, std::size_t>> bins;
    if (values.empty()) return bins;
    long long lo = 0, hi = 0;
    bool first = true;
    std::vector<long long> idx;
    idx.reserve(values.size());
    for (double v : values) {
        const long long k =
            static_cast<long long>(std::floor(v / bin_width));
        idx.push_back(k);
        if (first) {
            lo = hi = k;
            first = false;
        } else {
            lo = std::min(lo, k);
            hi = std::max(hi, k);
        }
    }
    bins.resize(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < bins.size(); ++i) {
        bins[i] = {(static_cast<double>(lo) + static_cast<double>(i)) *
                       bin_width,
                   0};
    }
    for (long long k : idx) ++bins[static_cast<std::size_t>(k - lo)].second;
    return bins;
}

inline std::vector<double> to_doubles(std::span<const std::size_t> values) {
    return {values.begin(), values.end()};
}

}  // namespace refind
