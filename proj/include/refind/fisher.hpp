// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "refind/confusion.hpp"
#include "refind/errors.hpp"

namespace refind {

/// A 2x2 contingency table: row1 = (a, b), row2 = (c, d).
struct TwoByTwo {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = 0;
    std::uint64_t d = 0;

    std::uint64_t total() const { return a + b + c + d; }
};

namespace detail {

/// Tables whose hypergeometric probability is within this relative factor
/// of the observed table's still count as "as extreme". Guards the
/// qualifying-set decision against floating-point ties.
inline constexpr double kFisherTieTolerance = 1e-7;

/// The two-sided p-value is invariant under transposition and row/column
/// swaps, so we compute on a canonical representative: the
/// lexicographically smallest of the eight symmetric images. This makes
/// the invariance hold bit-for-bit, not just to rounding.
inline std::array<std::uint64_t, 4> canonical_cells(const TwoByTwo& t) {
    using Cells = std::array<std::uint64_t, 4>;
    const Cells base{t.a, t.b, t.c, t.d};
    Cells best = base;
    const auto consider = [&](const Cells& v) {
        if (v < best) best = v;
    };
    const auto row_swap = [](const Cells& v) {
        return Cells{v[2], v[3], v[0], v[1]};
    };
    const auto col_swap = [](const Cells& v) {
        return Cells{v[1], v[0], v[3], v[2]};
    };
    const auto transpose = [](const Cells& v) {
        return Cells{v[0], v[2], v[1], v[3]};
    };
    for (const Cells& t0 : {base, transpose(base)}) {
        consider(t0);
        consider(row_swap(t0));
        consider(col_swap(t0));
        consider(row_swap(col_swap(t0)));
    }
    return best;
}

}  // namespace detail

/// Exact two-sided Fisher test, "sum of small p" definition: with the
/// margins fixed, sum the hypergeometric probabilities of every table
/// whose probability is <= the observed table's.
///
/// Works in log space over a per-call log-factorial table, so counts in
/// the thousands neither overflow nor underflow. The common normalizing
/// constant cancels in the final ratio, which also guarantees p == 1.0
/// exactly whenever every table on the margins qualifies.
inline double fisher_exact_two_sided(const TwoByTwo& table) {
    const auto cells = detail::canonical_cells(table);
    const std::uint64_t a = cells[0], b = cells[1], c = cells[2],
                        d = cells[3];
    const std::uint64_t row1 = a + b;
    const std::uint64_t row2 = c + d;
    const std::uint64_t col1 = a + c;
    const std::uint64_t col2 = b + d;
    if (row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0) {
        throw DegenerateTable("fisher test needs all four margins positive");
    }
    const std::uint64_t n = row1 + row2;

    std::vector<double> log_fact(n + 1, 0.0);
    for (std::uint64_t k = 1; k <= n; ++k) {
        log_fact[k] = std::lgamma(static_cast<double>(k) + 1.0);
    }
    // log of C(row1, x) * C(row2, col1 - x); the 1/C(n, col1) factor is
    // common to every table and cancels below.
    const auto log_weight = [&](std::uint64_t x) {
        const std::uint64_t y = col1 - x;
        return log_fact[row1] - log_fact[x] - log_fact[row1 - x] +
               log_fact[row2] - log_fact[y] - log_fact[row2 - y];
    };

    const std::uint64_t x_min = col1 > row2 ? col1 - row2 : 0;
    const std::uint64_t x_max = std::min(row1, col1);
    const double observed = log_weight(a);
    const double cutoff = observed + std::log1p(detail::kFisherTieTolerance);

    double log_max = observed;
    for (std::uint64_t x = x_min; x <= x_max; ++x) {
        log_max = std::max(log_max, log_weight(x));
    }

    double qualifying = 0.0;
    double total = 0.0;
    for (std::uint64_t x = x_min; x <= x_max; ++x) {
        const double lw = log_weight(x);
        const double w = std::exp(lw - log_max);
        total += w;
        if (lw <= cutoff) qualifying += w;
    }
    const double p = qualifying / total;
    return std::min(p, 1.0);
}

/// Compares a classifier's match/mismatch split against the baseline's:
/// rows are (match, mismatch) for the test and for the baseline.
inline double compare_to_baseline(const ConfusionMatrix& test,
                                  const ConfusionMatrix& baseline) {
    if (test.total() != baseline.total()) {
        throw MismatchedTotals("test and baseline cover different corpora");
    }
    return fisher_exact_two_sided(TwoByTwo{test.match(), test.mismatch(),
                                           baseline.match(),
                                           baseline.mismatch()});
}

}  // namespace refind
