// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#include "refind/corpus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "refind/errors.hpp"
#include "refind/ingest.hpp"
#include "refind/io.hpp"
#include "refind/lexicon.hpp"
#include "refind/snapshot_store.hpp"

namespace refind {
namespace {

class TempDir {
  public:
    explicit TempDir(const std::string& tag)
        : path_(std::filesystem::temp_directory_path() /
                ("refind_corpus_test_" + tag)) {
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
};

Lexicon english() {
    return Lexicon("english", {"the", "and", "of", "to", "a", "in", "is",
                               "it", "you", "that"});
}

std::string page(const std::string& title, std::size_t body_words,
                 const std::string& body_word = "the") {
    std::string body;
    for (std::size_t i = 0; i < body_words; ++i) {
        if (!body.empty()) body += ' ';
        body += body_word == "the" ? std::string("the")
                                   : body_word + std::to_string(i);
    }
    return "<html><head><title>" + title + "</title></head><body><p>" +
           body + "</p></body></html>";
}

TEST(StatusTest, StringRoundTrip) {
    EXPECT_EQ(to_string(Status::Found), "found");
    EXPECT_EQ(to_string(Status::NotFound), "not_found");
    EXPECT_EQ(to_string(Status::Unknown), "unknown");
    EXPECT_EQ(status_from_string("found"), Status::Found);
    EXPECT_EQ(status_from_string("not_found"), Status::NotFound);
    EXPECT_EQ(status_from_string("unknown"), Status::Unknown);
    EXPECT_THROW(status_from_string("FOUND"), DataError);
    EXPECT_THROW(status_from_string(""), DataError);
}

TEST(RecordJsonTest, RoundTripPreservesExtras) {
    TitleRecord r;
    r.uri = "http://example.test/page";
    r.title = "My Home Page";
    r.status = Status::Found;
    r.extra = {{"rank", 2}, {"note", "fixture"}};
    const TitleRecord back = record_from_json(to_json(r));
    EXPECT_EQ(back, r);
    EXPECT_EQ(back.extra.at("rank"), 2);
}

TEST(RecordJsonTest, RequiredFieldsAreValidated) {
    nlohmann::json ok = {{"uri", "http://example.test/"},
                         {"title", "t"},
                         {"status", "unknown"}};
    EXPECT_NO_THROW(record_from_json(ok));

    nlohmann::json no_uri = ok;
    no_uri.erase("uri");
    EXPECT_THROW(record_from_json(no_uri), DataError);

    nlohmann::json bad_title = ok;
    bad_title["title"] = 7;
    EXPECT_THROW(record_from_json(bad_title), DataError);

    nlohmann::json no_status = ok;
    no_status.erase("status");
    EXPECT_THROW(record_from_json(no_status), DataError);

    nlohmann::json bad_uri = ok;
    bad_uri["uri"] = "not a uri";
    EXPECT_THROW(record_from_json(bad_uri), InvalidUri);
}

TEST(CorpusFileTest, SaveThenLoadIsIdentity) {
    TempDir dir("roundtrip");
    std::vector<TitleRecord> corpus(2);
    corpus[0].uri = "http://a.example/x";
    corpus[0].title = "first";
    corpus[0].status = Status::Found;
    corpus[1].uri = "http://b.example/y";
    corpus[1].title = "";
    corpus[1].status = Status::Unknown;
    corpus[1].extra = {{"source", "desk"}};
    const auto path = dir.path() / "corpus.jsonl";
    save_corpus(corpus, path);
    EXPECT_EQ(load_corpus(path), corpus);
}

TEST(CorpusFileTest, BlankLinesAreSkipped) {
    TempDir dir("blank");
    const auto path = dir.path() / "corpus.jsonl";
    write_text_file(path,
                    "\n{\"uri\":\"http://a.example/\",\"title\":\"t\","
                    "\"status\":\"found\"}\n\n"
                    "{\"uri\":\"http://b.example/\",\"title\":\"u\","
                    "\"status\":\"unknown\"}\n\n");
    EXPECT_EQ(load_corpus(path).size(), 2u);
}

TEST(CorpusFileTest, ParseErrorsCarryLineNumbers) {
    TempDir dir("parse");
    const auto path = dir.path() / "corpus.jsonl";
    write_text_file(path,
                    "{\"uri\":\"http://a.example/\",\"title\":\"t\","
                    "\"status\":\"found\"}\n"
                    "{ not json\n");
    try {
        load_corpus(path);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }

    write_text_file(path,
                    "{\"uri\":\"http://a.example/\",\"title\":\"t\","
                    "\"status\":\"found\"}\n"
                    "\n"
                    "{\"title\":\"missing uri\",\"status\":\"found\"}\n");
    try {
        load_corpus(path);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(CorpusFileTest, MissingFileIsIoError) {
    EXPECT_THROW(load_corpus("/nonexistent/corpus.jsonl"), IoError);
}

TEST(SnapshotStoreTest, PutThenReadBack) {
    TempDir dir("store");
    SnapshotStore store(dir.path());
    EXPECT_FALSE(store.has("http://a.example/"));
    store.put("http://a.example/", page("Alpha", 5));
    store.put("http://b.example/", page("Beta", 5));
    EXPECT_TRUE(store.has("http://a.example/"));
    const std::vector<std::string> expected{"http://a.example/",
                                            "http://b.example/"};
    EXPECT_EQ(store.uris(), expected);
    EXPECT_EQ(store.raw("http://a.example/"), page("Alpha", 5));
    const PageSnapshot snap = store.snapshot("http://b.example/");
    EXPECT_EQ(snap.uri, "http://b.example/");
    EXPECT_EQ(snap.fetched_at, 0);
    EXPECT_NE(snap.html.find("Beta"), std::string::npos);
}

TEST(SnapshotStoreTest, IndexPersistsAcrossReopen) {
    TempDir dir("reopen");
    {
        SnapshotStore store(dir.path());
        store.put("http://a.example/", page("Alpha", 5));
    }
    SnapshotStore reopened(dir.path());
    EXPECT_TRUE(reopened.has("http://a.example/"));
    EXPECT_EQ(reopened.uris().size(), 1u);
}

TEST(SnapshotStoreTest, OverwriteReplacesBytes) {
    TempDir dir("overwrite");
    SnapshotStore store(dir.path());
    store.put("http://a.example/", "old");
    store.put("http://a.example/", "new");
    EXPECT_EQ(store.raw("http://a.example/"), "new");
    EXPECT_EQ(store.uris().size(), 1u);
}

TEST(SnapshotStoreTest, MissingUriIsIoError) {
    TempDir dir("missing");
    SnapshotStore store(dir.path());
    EXPECT_THROW(store.raw("http://a.example/"), IoError);
}

TEST(SnapshotStoreTest, CorruptIndexIsDataError) {
    TempDir dir("corrupt");
    write_text_file(dir.path() / "index.json", "{ not json");
    EXPECT_THROW(SnapshotStore store(dir.path()), DataError);
}

std::pair<TitleRecord, PageSnapshot> entry(const std::string& uri,
                                           std::string html) {
    TitleRecord r;
    r.uri = uri;
    PageSnapshot s;
    s.uri = uri;
    s.html = std::move(html);
    return {std::move(r), std::move(s)};
}

TEST(ApplyFiltersTest, FortyNineWordsRejectedFiftyKept) {
    const FilterConfig config;
    ASSERT_EQ(config.min_content_words, 50u);
    std::vector<std::pair<TitleRecord, PageSnapshot>> input;
    input.push_back(entry("http://short.example/", page("", 49)));
    input.push_back(entry("http://exact.example/", page("", 50)));
    const FilterOutcome out = apply_filters(input, config, english());
    ASSERT_EQ(out.kept.size(), 1u);
    EXPECT_EQ(out.kept[0].uri, "http://exact.example/");
    ASSERT_EQ(out.rejected.size(), 1u);
    EXPECT_EQ(out.rejected[0].record.uri, "http://short.example/");
    EXPECT_EQ(out.rejected[0].reason, RejectReason::TooFewWords);
}

TEST(ApplyFiltersTest, NonEnglishContentIsRejected) {
    const FilterConfig config;
    std::vector<std::pair<TitleRecord, PageSnapshot>> input;
    input.push_back(entry("http://de.example/", page("", 60, "zug")));
    const FilterOutcome rejected = apply_filters(input, config, english());
    ASSERT_EQ(rejected.rejected.size(), 1u);
    EXPECT_EQ(rejected.rejected[0].reason, RejectReason::NonEnglish);

    FilterConfig lax;
    lax.require_english = false;
    const FilterOutcome kept = apply_filters(input, lax, english());
    EXPECT_EQ(kept.kept.size(), 1u);
    EXPECT_TRUE(kept.rejected.empty());
}

TEST(ApplyFiltersTest, HitFractionBoundaryIsInclusive) {
    const FilterConfig config;
    ASSERT_DOUBLE_EQ(config.english_stopword_hit_threshold, 0.02);
    // Exactly 1 stopword among 50 content words: fraction == threshold.
    std::string body = "the";
    for (int i = 0; i < 49; ++i) body += " zug" + std::to_string(i);
    const std::string at_boundary =
        "<html><head><title></title></head><body><p>" + body +
        "</p></body></html>";
    std::vector<std::pair<TitleRecord, PageSnapshot>> input;
    input.push_back(entry("http://edge.example/", at_boundary));
    EXPECT_EQ(apply_filters(input, config, english()).kept.size(), 1u);

    // 1 of 51 drops below the threshold.
    const std::string below =
        "<html><head><title></title></head><body><p>" + body +
        " zug49</p></body></html>";
    input.clear();
    input.push_back(entry("http://edge.example/", below));
    const FilterOutcome out = apply_filters(input, config, english());
    ASSERT_EQ(out.rejected.size(), 1u);
    EXPECT_EQ(out.rejected[0].reason, RejectReason::NonEnglish);
}

TEST(ApplyFiltersTest, PartitionsInputAndIsOrderIndependent) {
    const FilterConfig config;
    std::vector<std::pair<TitleRecord, PageSnapshot>> input;
    input.push_back(entry("http://a.example/", page("A", 60)));
    input.push_back(entry("http://b.example/", page("B", 10)));
    input.push_back(entry("http://c.example/", page("C", 55, "blork")));
    input.push_back(entry("http://d.example/", page("D", 70)));

    const FilterOutcome out = apply_filters(input, config, english());
    EXPECT_EQ(out.kept.size() + out.rejected.size(), input.size());

    std::vector<std::pair<TitleRecord, PageSnapshot>> reversed(input.rbegin(),
                                                               input.rend());
    const FilterOutcome rev = apply_filters(reversed, config, english());
    EXPECT_EQ(rev.kept.size(), out.kept.size());
    EXPECT_EQ(rev.rejected.size(), out.rejected.size());
    auto uris = [](const std::vector<TitleRecord>& v) {
        std::vector<std::string> u;
        for (const auto& r : v) u.push_back(r.uri);
        std::sort(u.begin(), u.end());
        return u;
    };
    EXPECT_EQ(uris(rev.kept), uris(out.kept));
}

TEST(LoadLabelsTest, ReadsStatusPerUri) {
    TempDir dir("labels");
    const auto path = dir.path() / "labels.jsonl";
    write_text_file(path,
                    "{\"uri\":\"http://a.example/\",\"status\":\"found\"}\n"
                    "{\"uri\":\"http://b.example/\",\"status\":"
                    "\"not_found\"}\n");
    const auto labels = load_labels(path);
    ASSERT_EQ(labels.size(), 2u);
    EXPECT_EQ(labels.at("http://a.example/"), Status::Found);
    EXPECT_EQ(labels.at("http://b.example/"), Status::NotFound);
}

TEST(IngestStoreTest, ExtractsLabelsAndRejectsPerPage) {
    TempDir dir("ingest");
    SnapshotStore store(dir.path());
    store.put("http://good.example/", page("Good Page", 60));
    store.put("http://short.example/", page("Short", 5));
    store.put("http://broken.example/", std::string(40, '\xFF'));
    const std::map<std::string, Status> labels{
        {"http://good.example/", Status::Found}};

    const IngestResult result =
        ingest_store(store, labels, FilterConfig{}, english());
    ASSERT_EQ(result.kept.size(), 1u);
    EXPECT_EQ(result.kept[0].uri, "http://good.example/");
    EXPECT_EQ(result.kept[0].title, "Good Page");
    EXPECT_EQ(result.kept[0].status, Status::Found);

    ASSERT_EQ(result.rejected.size(), 2u);
    std::map<std::string, RejectReason> reasons;
    for (const auto& r : result.rejected)
        reasons[r.record.uri] = r.reason;
    EXPECT_EQ(reasons.at("http://short.example/"),
              RejectReason::TooFewWords);
    EXPECT_EQ(reasons.at("http://broken.example/"),
              RejectReason::UndecodableHtml);
}

}  // namespace
}  // namespace refind
