// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "refind/corpus.hpp"
#include "refind/errors.hpp"
#include "refind/hash.hpp"
#include "refind/html.hpp"
#include "refind/io.hpp"

namespace refind {

/// On-disk page store: one `<digest>.html` per URI plus `index.json`
/// mapping digest to URI. Bytes go in and out untouched; decoding happens
/// in snapshot() so callers control how decode failures are handled.
class SnapshotStore {
public:
    explicit SnapshotStore(std::filesystem::path dir) : dir_(std::move(dir)) {
        const auto index_path = dir_ / "index.json";
        if (!std::filesystem::exists(index_path)) return;
        nlohmann::json index;
        try {
            index = nlohmann::json::parse(read_text_file(index_path));
        } catch (const nlohmann::json::exception& e) {
            throw DataError("corrupt snapshot index " + index_path.string() +
                            ": " + e.what());
        }
        if (!index.is_object())
            throw DataError("snapshot index is not a JSON object");
        for (const auto& [digest, uri] : index.items()) {
            if (!uri.is_string())
                throw DataError("snapshot index value for " + digest +
                                " is not a string");
            index_.emplace(digest, uri.get<std::string>());
        }
    }

    const std::filesystem::path& dir() const { return dir_; }
    std::size_t size() const { return index_.size(); }

    static std::string digest(std::string_view uri) {
        return hex_digest(uri);
    }

    bool has(std::string_view uri) const {
        const auto it = index_.find(digest(uri));
        return it != index_.end() && it->second == uri;
    }

    /// URIs in the store, sorted, so iteration order is reproducible.
    std::vector<std::string> uris() const {
        std::vector<std::string> out;
        out.reserve(index_.size());
        for (const auto& [_, uri] : index_) out.push_back(uri);
        std::sort(out.begin(), out.end());
        return out;
    }

    void put(std::string_view uri, std::string_view bytes) {
        const std::string d = digest(uri);
        const auto it = index_.find(d);
        if (it != index_.end() && it->second != uri) {
            // 64-bit FNV collisions are vanishingly rare but must not
            // silently cross-wire two URIs' pages.
            throw DataError("snapshot digest collision: '" + it->second +
                            "' vs '" + std::string(uri) + "'");
        }
        write_text_file(dir_ / (d + ".html"), bytes);
        index_[d] = std::string(uri);
        save_index();
    }

    std::string raw(std::string_view uri) const {
        if (!has(uri))
            throw IoError("no snapshot for " + std::string(uri));
        return read_text_file(dir_ / (digest(uri) + ".html"));
    }

    /// Decoded snapshot; throws MalformedHtml when the page bytes cannot
    /// be decoded. fetched_at is fixed at 0: stores are offline fixtures
    /// and outputs derived from them must not embed wall-clock time.
    PageSnapshot snapshot(std::string_view uri) const {
        PageSnapshot snap;
        snap.uri = std::string(uri);
        snap.html = html::decode_page(raw(uri));
        snap.fetched_at = 0;
        return snap;
    }

private:
    void save_index() const {
        nlohmann::json index = nlohmann::json::object();
        for (const auto& [d, uri] : index_) index[d] = uri;
        write_text_file(dir_ / "index.json", index.dump(2) + "\n");
    }

    std::filesystem::path dir_;
    std::map<std::string, std::string> index_;  // digest -> uri, sorted
};

}  // namespace refind
