// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "refind/errors.hpp"
#include "refind/hash.hpp"
#include "refind/io.hpp"
#include "refind/query.hpp"

namespace refind {

/// A provider's raw answer, before normalization and truncation.
struct ProviderResult {
    std::uint64_t total_results = 0;
    std::vector<std::string> results;
};

class SearchProvider {
public:
    virtual ~SearchProvider() = default;
    virtual std::string name() const = 0;
    /// Deterministic providers (fixtures) get retrieved_at pinned to 0 so
    /// downstream files never embed wall-clock time.
    virtual bool deterministic() const { return false; }
    virtual ProviderResult search(const std::string& rendered_query,
                                  std::size_t k) = 0;
};

/// Canned responses from a directory of JSON files, each
/// {"query": ..., "total_results": N, "results": [...]}, keyed by the
/// rendered query string. Used by all tests and for offline runs.
class FixtureProvider : public SearchProvider {
public:
    explicit FixtureProvider(const std::filesystem::path& dir,
                             std::string name = "fixture")
        : name_(std::move(name)) {
        if (!std::filesystem::is_directory(dir))
            throw ConfigError("fixture provider needs a directory: " +
                              dir.string());
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            if (entry.path().extension() == ".json")
                files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(read_text_file(file));
                ProviderResult r;
                r.total_results = j.at("total_results").get<std::uint64_t>();
                for (const auto& u : j.at("results"))
                    r.results.push_back(u.get<std::string>());
                canned_[j.at("query").get<std::string>()] = std::move(r);
            } catch (const nlohmann::json::exception& e) {
                throw ConfigError("bad fixture file " + file.string() + ": " +
                                  e.what());
            }
        }
    }

    std::string name() const override { return name_; }
    bool deterministic() const override { return true; }
    std::size_t size() const { return canned_.size(); }

    ProviderResult search(const std::string& rendered_query,
                          std::size_t) override {
        const auto it = canned_.find(rendered_query);
        if (it == canned_.end())
            throw ProviderError("no fixture response for query: " +
                                rendered_query);
        return it->second;
    }

private:
    std::string name_;
    std::map<std::string, ProviderResult> canned_;
};

/// Minimum-interval limiter (a token bucket of capacity one): acquire()
/// blocks until a full interval has passed since the previous grant.
/// Rates ≤ 0 disable limiting.
class RateLimiter {
public:
    explicit RateLimiter(double per_second) {
        if (per_second > 0.0)
            interval_ = std::chrono::duration_cast<
                std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(1.0 / per_second));
    }

    void acquire() {
        if (interval_.count() == 0) return;
        std::chrono::steady_clock::time_point wake;
        {
            std::lock_guard lock(mutex_);
            const auto now = std::chrono::steady_clock::now();
            next_ = std::max(next_, now);
            wake = next_;
            next_ += interval_;
        }
        std::this_thread::sleep_until(wake);
    }

private:
    std::chrono::steady_clock::duration interval_{0};
    std::chrono::steady_clock::time_point next_{};
    std::mutex mutex_;
};

/// Disk cache keyed by (provider, rendered query, k). Safe for concurrent
/// readers with exclusive writers within one process; cross-process
/// exclusion is the CLI lock file's job.
class ResponseCache {
public:
    explicit ResponseCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    static std::string key(std::string_view provider,
                           std::string_view rendered, std::size_t k) {
        std::string material(provider);
        material += '\n';
        material += rendered;
        material += '\n';
        material += std::to_string(k);
        return hex_digest(material);
    }

    std::optional<SearchResponse> find(std::string_view provider,
                                       const QuerySpec& query,
                                       std::size_t k) const {
        const auto path = entry_path(provider, query.rendered, k);
        std::shared_lock lock(mutex_);
        if (!std::filesystem::exists(path)) return std::nullopt;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_text_file(path));
        } catch (const nlohmann::json::exception& e) {
            throw DataError("corrupt cache entry " + path.string() + ": " +
                            e.what());
        }
        if (j.value("provider", "") != provider ||
            j.value("query", "") != query.rendered ||
            j.value("k", std::size_t{0}) != k) {
            throw DataError("cache digest collision at " + path.string());
        }
        SearchResponse resp;
        resp.query = query;
        resp.provider = std::string(provider);
        resp.total_results = j.at("total_results").get<std::uint64_t>();
        for (const auto& u : j.at("results"))
            resp.top_results.push_back(u.get<std::string>());
        resp.retrieved_at = j.at("retrieved_at").get<std::int64_t>();
        return resp;
    }

    void store(const SearchResponse& resp, std::size_t k) {
        nlohmann::json j;
        j["provider"] = resp.provider;
        j["query"] = resp.query.rendered;
        j["k"] = k;
        j["total_results"] = resp.total_results;
        j["results"] = resp.top_results;
        j["retrieved_at"] = resp.retrieved_at;
        const auto path = entry_path(resp.provider, resp.query.rendered, k);
        std::unique_lock lock(mutex_);
        write_text_file(path, j.dump(2) + "\n");
    }

private:
    std::filesystem::path entry_path(std::string_view provider,
                                     std::string_view rendered,
                                     std::size_t k) const {
        return dir_ / (key(provider, rendered, k) + ".json");
    }

    std::filesystem::path dir_;
    mutable std::shared_mutex mutex_;
};

/// Front door for query execution: consults the cache, rate-limits actual
/// provider calls, and normalizes what comes back (URI canonicalization,
/// de-duplication, truncation to k).
class SearchClient {
public:
    explicit SearchClient(std::shared_ptr<SearchProvider> provider,
                          std::optional<std::filesystem::path> cache_dir = {},
                          double requests_per_second = 1.0)
        : provider_(std::move(provider)), limiter_(requests_per_second) {
        if (cache_dir) cache_.emplace(*cache_dir);
    }

    SearchResponse execute(const QuerySpec& query, std::size_t k = 10) {
        if (k < 1) throw ConfigError("k must be >= 1");
        if (cache_) {
            if (auto hit = cache_->find(provider_->name(), query, k))
                return *hit;
        }
        limiter_.acquire();
        const ProviderResult raw = provider_->search(query.rendered, k);
        ++calls_;

        SearchResponse resp;
        resp.query = query;
        resp.provider = provider_->name();
        resp.total_results = raw.total_results;
        std::unordered_set<std::string> seen;
        for (const auto& u : raw.results) {
            if (resp.top_results.size() >= k) break;
            std::string norm = normalize_or_keep(u);
            if (seen.insert(norm).second)
                resp.top_results.push_back(std::move(norm));
        }
        resp.retrieved_at =
            provider_->deterministic()
                ? 0
                : static_cast<std::int64_t>(std::time(nullptr));
        if (cache_) cache_->store(resp, k);
        return resp;
    }

    /// Actual provider round trips (cache hits excluded).
    std::size_t provider_calls() const { return calls_; }

private:
    std::shared_ptr<SearchProvider> provider_;
    std::optional<ResponseCache> cache_;
    RateLimiter limiter_;
    std::size_t calls_ = 0;
};

}  // namespace refind
