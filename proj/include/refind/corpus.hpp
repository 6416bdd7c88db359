// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "refind/errors.hpp"
#include "refind/io.hpp"
#include "refind/uri.hpp"

namespace refind {

enum class Status { Found, NotFound, Unknown };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::Found: return "found";
        case Status::NotFound: return "not_found";
        default: return "unknown";
    }
}

inline Status status_from_string(std::string_view s) {
    if (s == "found") return Status::Found;
    if (s == "not_found") return Status::NotFound;
    if (s == "unknown") return Status::Unknown;
    throw DataError("unrecognized status: " + std::string(s));
}

/// One corpus row. `extra` carries any fields this tool does not interpret
/// so corpora annotated by other programs survive a round trip.
struct TitleRecord {
    std::string uri;
    std::string title;
    Status status = Status::Unknown;
    nlohmann::json extra = nlohmann::json::object();

    bool operator==(const TitleRecord&) const = default;
};

struct PageSnapshot {
    std::string uri;
    std::string html;  // decoded document text
    std::int64_t fetched_at = 0;
};

inline nlohmann::json to_json(const TitleRecord& r) {
    nlohmann::json j = r.extra;
    j["uri"] = r.uri;
    j["title"] = r.title;
    j["status"] = to_string(r.status);
    return j;
}

inline TitleRecord record_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw DataError("corpus row is not a JSON object");
    TitleRecord r;
    for (const auto& key : {"uri", "title", "status"}) {
        const auto it = j.find(key);
        if (it == j.end() || !it->is_string())
            throw DataError(std::string("missing or non-string field: ") +
                            key);
    }
    r.uri = j.at("uri").get<std::string>();
    r.title = j.at("title").get<std::string>();
    r.status = status_from_string(j.at("status").get<std::string>());
    normalize_uri(r.uri);  // validation only; the stored form is untouched
    r.extra = j;
    r.extra.erase("uri");
    r.extra.erase("title");
    r.extra.erase("status");
    return r;
}

/// Reads a JSON-lines corpus. Blank lines are ignored; any malformed line
/// is reported with its 1-based line number.
inline std::vector<TitleRecord> load_corpus(
    const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    std::vector<TitleRecord> records;
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        auto end = text.find('\n', begin);
        if (end == std::string::npos) end = text.size();
        ++line_no;
        std::string_view line(text.data() + begin, end - begin);
        begin = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) {
            if (begin > text.size()) break;
            continue;
        }
        try {
            records.push_back(
                record_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad JSON: ") + e.what(), line_no);
        } catch (const DataError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return records;
}

inline void save_corpus(const std::vector<TitleRecord>& records,
                        const std::filesystem::path& path) {
    std::string out;
    for (const auto& r : records) {
        out += to_json(r).dump();
        out += '\n';
    }
    write_text_file(path, out);
}

}  // namespace refind
