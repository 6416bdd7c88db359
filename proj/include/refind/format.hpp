// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <array>
#include <charconv>
#include <string>
#include <system_error>

namespace refind {

/// Shortest round-trip decimal form of a double ("0.75", "3.395e-15").
/// Reports and CSVs use this so repeated runs are byte-identical and no
/// precision is lost to fixed-width printf formatting.
inline std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return ec == std::errc() ? std::string(buf.data(), ptr) : std::string("nan");
}

}  // namespace refind
