// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
//
// refind — is a web page's title a viable search query?
//
// Subcommands: ingest, featurize, classify, evaluate, sweep, report, query.
// Exit codes: 0 success, 2 configuration, 3 I/O, 4 data, 5 provider.

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "refind/http_provider.hpp"
#include "refind/refind.hpp"

namespace fs = std::filesystem;

namespace {

struct GlobalOpts {
    std::string corpus;
    std::vector<std::string> lexicon_specs;  // name=path
    std::string stop_titles_path;
    std::string out_dir = "out";
    std::uint64_t seed = 20260815;
    std::string provider_config;
};

/// Guards an output directory against concurrent invocations.
class LockFile {
public:
    explicit LockFile(const fs::path& dir) : path_(dir / ".refind.lock") {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec)
            throw refind::IoError("cannot create output directory " +
                                  dir.string() + ": " + ec.message());
        const int fd =
            ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
        if (fd < 0) {
            if (errno == EEXIST)
                throw refind::ConfigError(
                    "output directory is in use (lock file " + path_.string() +
                    " exists; remove it if no other run is active)");
            throw refind::IoError("cannot create lock file " + path_.string());
        }
        ::close(fd);
    }
    ~LockFile() {
        std::error_code ec;
        fs::remove(path_, ec);
    }
    LockFile(const LockFile&) = delete;
    LockFile& operator=(const LockFile&) = delete;

private:
    fs::path path_;
};

/// Wall-clock timestamps live only here, never in data outputs, so data
/// files stay byte-identical across runs.
void write_run_meta(const fs::path& out_dir, const std::string& command,
                    std::int64_t started_at, std::size_t warnings) {
    nlohmann::json j;
    j["command"] = command;
    j["started_at"] = started_at;
    j["finished_at"] = static_cast<std::int64_t>(std::time(nullptr));
    j["warnings"] = warnings;
    refind::write_text_file(out_dir / "run_meta.json", j.dump(2) + "\n");
}

std::vector<refind::Lexicon> load_lexicons(const GlobalOpts& g) {
    std::vector<refind::Lexicon> out;
    for (const auto& spec : g.lexicon_specs) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
            throw refind::ConfigError("--lexicon wants name=path, got: " +
                                      spec);
        out.push_back(
            refind::load_lexicon(spec.substr(eq + 1), spec.substr(0, eq)));
    }
    return out;
}

refind::StopTitleSet load_stop_title_set(const GlobalOpts& g) {
    if (g.stop_titles_path.empty()) return {};
    return refind::load_stop_titles(g.stop_titles_path);
}

std::vector<refind::TitleRecord> load_input_corpus(const GlobalOpts& g) {
    if (g.corpus.empty())
        throw refind::ConfigError("this command needs --corpus <file>");
    return refind::load_corpus(g.corpus);
}

std::vector<double> parse_threshold_list(const std::string& csv) {
    std::vector<double> out;
    std::size_t begin = 0;
    while (begin <= csv.size()) {
        auto end = csv.find(',', begin);
        if (end == std::string::npos) end = csv.size();
        const std::string item = csv.substr(begin, end - begin);
        begin = end + 1;
        if (item.empty()) continue;
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw refind::ConfigError("bad threshold value: " + item);
        }
    }
    if (out.empty())
        throw refind::ConfigError("--thresholds list is empty");
    return out;
}

std::vector<std::size_t> parse_edge_list(const std::string& csv) {
    std::vector<std::size_t> out;
    std::size_t begin = 0;
    while (begin <= csv.size()) {
        auto end = csv.find(',', begin);
        if (end == std::string::npos) end = csv.size();
        const std::string item = csv.substr(begin, end - begin);
        begin = end + 1;
        if (item.empty()) continue;
        try {
            out.push_back(static_cast<std::size_t>(std::stoull(item)));
        } catch (const std::exception&) {
            throw refind::ConfigError("bad bucket edge: " + item);
        }
    }
    return out;
}

std::vector<refind::QueryMode> parse_modes(const std::string& csv) {
    std::vector<refind::QueryMode> out;
    std::size_t begin = 0;
    while (begin <= csv.size()) {
        auto end = csv.find(',', begin);
        if (end == std::string::npos) end = csv.size();
        const std::string item = csv.substr(begin, end - begin);
        begin = end + 1;
        if (!item.empty()) out.push_back(refind::query_mode_from_string(item));
    }
    if (out.empty()) throw refind::ConfigError("--modes list is empty");
    return out;
}

// ---------------------------------------------------------------- ingest

int cmd_ingest(const GlobalOpts& g, const std::string& snapshots_dir,
               const std::string& labels_path,
               const refind::FilterConfig& config,
               const std::string& english_name) {
    const std::int64_t started = std::time(nullptr);
    LockFile lock(g.out_dir);

    refind::SnapshotStore store{fs::path(snapshots_dir)};
    std::map<std::string, refind::Status> labels;
    if (!labels_path.empty()) labels = refind::load_labels(labels_path);

    refind::Lexicon english;
    if (config.require_english) {
        bool found = false;
        for (auto& lex : load_lexicons(g)) {
            if (lex.name() == english_name) {
                english = std::move(lex);
                found = true;
                break;
            }
        }
        if (!found)
            throw refind::ConfigError(
                "the English filter needs --lexicon " + english_name +
                "=<path> (or pass --no-english-filter)");
    }

    const refind::IngestResult result =
        refind::ingest_store(store, labels, config, english);

    const fs::path corpus_path =
        g.corpus.empty() ? fs::path(g.out_dir) / "corpus.jsonl"
                         : fs::path(g.corpus);
    refind::save_corpus(result.kept, corpus_path);

    std::string rejects;
    std::map<std::string, std::size_t> reason_counts;
    for (const auto& r : result.rejected) {
        nlohmann::json j;
        j["uri"] = r.record.uri;
        j["reason"] = refind::to_string(r.reason);
        j["detail"] = r.detail;
        rejects += j.dump();
        rejects += '\n';
        ++reason_counts[std::string(refind::to_string(r.reason))];
    }
    refind::write_text_file(fs::path(g.out_dir) / "rejected.jsonl", rejects);

    std::cout << "kept " << result.kept.size() << "\n";
    std::cout << "rejected " << result.rejected.size() << "\n";
    for (const auto& [reason, n] : reason_counts)
        std::cout << "rejected_" << reason << " " << n << "\n";
    std::cout << "corpus " << corpus_path.string() << "\n";

    write_run_meta(g.out_dir, "ingest", started, 0);
    return 0;
}

// ------------------------------------------------------------- featurize

std::string features_csv(const std::vector<refind::TitleRecord>& records,
                         const std::vector<refind::FeatureVector>& features) {
    std::vector<std::string> ratio_ids;
    if (!features.empty()) {
        for (const auto& [id, _] : features.front().ratios)
            ratio_ids.push_back(id);
    } else {
        ratio_ids = {std::string(refind::kStopTitleCharFeature),
                     std::string(refind::kStopTitleWordFeature)};
    }
    std::string out = "uri,word_count,char_count,longest_word,exact_stop_title";
    for (const auto& id : ratio_ids) out += "," + id;
    out += '\n';
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& fv = features[i];
        out += records[i].uri;
        out += ',' + std::to_string(fv.word_count);
        out += ',' + std::to_string(fv.char_count);
        out += ',' + std::to_string(fv.longest_word);
        out += ',';
        out += fv.exact_stop_title ? '1' : '0';
        for (const auto& id : ratio_ids)
            out += ',' + refind::format_double(fv.ratios.at(id));
        out += '\n';
    }
    return out;
}

int cmd_featurize(const GlobalOpts& g) {
    const std::int64_t started = std::time(nullptr);
    LockFile lock(g.out_dir);
    const auto records = load_input_corpus(g);
    const auto features = refind::featurize_corpus(records, load_lexicons(g),
                                                   load_stop_title_set(g));
    const fs::path out = fs::path(g.out_dir) / "features.csv";
    refind::write_text_file(out, features_csv(records, features));
    std::cout << "featurized " << records.size() << "\n";
    std::cout << "features " << out.string() << "\n";
    write_run_meta(g.out_dir, "featurize", started, 0);
    return 0;
}

// -------------------------------------------------------------- classify

int cmd_classify(const GlobalOpts& g, const std::string& rule_text,
                 bool baseline) {
    const std::int64_t started = std::time(nullptr);
    LockFile lock(g.out_dir);
    const auto records = load_input_corpus(g);
    std::vector<refind::Prediction> predictions;
    if (baseline) {
        predictions = refind::baseline_predict(records);
    } else {
        const auto rule = refind::parse_rule_spec(rule_text);
        const auto features = refind::featurize_corpus(
            records, load_lexicons(g), load_stop_title_set(g));
        predictions =
            refind::threshold_predict_corpus(rule, records, features);
    }
    std::string out = "uri,predicted\n";
    std::size_t found = 0;
    for (const auto& p : predictions) {
        if (p.predicted == refind::Status::Found) ++found;
        out += p.uri;
        out += ',';
        out += refind::to_string(p.predicted);
        out += '\n';
    }
    const fs::path path = fs::path(g.out_dir) / "predictions.csv";
    refind::write_text_file(path, out);
    std::cout << "predicted_found " << found << "\n";
    std::cout << "predicted_not_found " << predictions.size() - found << "\n";
    std::cout << "predictions " << path.string() << "\n";
    write_run_meta(g.out_dir, "classify", started, 0);
    return 0;
}

// -------------------------------------------------------------- evaluate

int cmd_evaluate(const GlobalOpts& g, const std::string& rule_text,
                 bool baseline) {
    const std::int64_t started = std::time(nullptr);
    LockFile lock(g.out_dir);
    const auto records = load_input_corpus(g);

    const auto baseline_matrix =
        refind::tally(refind::baseline_predict(records), records);
    refind::ConfusionMatrix matrix;
    std::string title;
    if (baseline) {
        matrix = baseline_matrix;
        title = "rule: baseline (all found)";
    } else {
        const auto rule = refind::parse_rule_spec(rule_text);
        const auto features = refind::featurize_corpus(
            records, load_lexicons(g), load_stop_title_set(g));
        matrix = refind::evaluate_rule(rule, records, features);
        title = "rule: " + rule_text;
    }
    std::string report = refind::render_confusion_table(title, matrix);
    report += refind::render_significance(matrix, baseline_matrix);

    const fs::path path = fs::path(g.out_dir) / "evaluation.txt";
    refind::write_text_file(path, report);
    std::cout << report;
    write_run_meta(g.out_dir, "evaluate", started, 0);
    return 0;
}

// ----------------------------------------------------------------- sweep

int cmd_sweep(const GlobalOpts& g, const std::string& rule_text,
              const std::string& thresholds_csv, bool render_tables) {
    const std::int64_t started = std::time(nullptr);
    LockFile lock(g.out_dir);
    const auto records = load_input_corpus(g);
    const auto rule = refind::parse_rule_spec(rule_text);
    const auto thresholds = parse_threshold_list(thresholds_csv);
    const auto features = refind::featurize_corpus(records, load_lexicons(g),
                                                   load_stop_title_set(g));
    const auto rows = refind::sweep(rule, thresholds, records, features);

    const fs::path csv_path = fs::path(g.out_dir) / "sweep.csv";
    refind::write_text_file(csv_path, refind::sweep_csv(rows));
    std::cout << "sweep_rows " << rows.size() << "\n";
    std::cout << "sweep " << csv_path.string() << "\n";

    if (render_tables) {
        std::string tables;
        for (const auto& [threshold, m] : rows) {
            tables += refind::render_confusion_table(
                "threshold=" + refind::format_double(threshold), m);
            tables += '\n';
        }
        const fs::path tables_path = fs::path(g.out_dir) / "sweep_tables.txt";
        refind::write_text_file(tables_path, tables);
        std::cout << "tables " << tables_path.string() << "\n";
    }
    write_run_meta(g.out_dir, "sweep", started, 0);
    return 0;
}

// ---------------------------------------------------------------- report

refind::ExperimentResult parse_experiment_jsonl(const fs::path& path) {
    refind::ExperimentResult result;
    const std::string text = refind::read_text_file(path);
    std::size_t begin = 0;
    std::size_t line_no = 0;
    while (begin < text.size()) {
        auto end = text.find('\n', begin);
        if (end == std::string::npos) end = text.size();
        ++line_no;
        const std::string line = text.substr(begin, end - begin);
        begin = end + 1;
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            refind::ExperimentEntry e;
            e.uri = j.at("uri").get<std::string>();
            e.mode = refind::query_mode_from_string(
                j.at("mode").get<std::string>());
            e.response.total_results =
                j.at("total_results").get<std::uint64_t>();
            e.judgment.target_uri = e.uri;
            e.judgment.status = refind::status_from_string(
                j.at("judgment").at("status").get<std::string>());
            if (j.at("judgment").contains("rank"))
                e.judgment.rank =
                    j.at("judgment").at("rank").get<std::size_t>();
            result.entries.push_back(std::move(e));
        } catch (const nlohmann::json::exception& ex) {
            throw refind::ParseError(
                std::string("bad experiment line: ") + ex.what(), line_no);
        }
    }
    return result;
}

int cmd_report(const GlobalOpts& g, const std::string& edges_csv,
               std::size_t top_duplicates, std::size_t sample) {
    const std::int64_t started = std::time(nullptr);
    LockFile lock(g.out_dir);
    auto records = load_input_corpus(g);
    if (sample > 0 && sample < records.size()) {
        std::mt19937_64 rng(g.seed);
        std::vector<refind::TitleRecord> picked;
        std::sample(records.begin(), records.end(),
                    std::back_inserter(picked), sample, rng);
        records = std::move(picked);
    }

    std::vector<double> word_counts;
    std::vector<double> char_counts;
    word_counts.reserve(records.size());
    char_counts.reserve(records.size());
    for (const auto& r : records) {
        const auto toks = refind::tokenize(r.title);
        word_counts.push_back(static_cast<double>(toks.word_count()));
        char_counts.push_back(static_cast<double>(toks.char_count));
    }
    if (records.empty())
        throw refind::EmptyInput("report needs a non-empty corpus");

    const fs::path out(g.out_dir);
    std::string stats;
    stats += refind::render_stats_block("word_count",
                                        refind::descriptive(word_counts));
    stats += '\n';
    stats += refind::render_stats_block("char_count",
                                        refind::descriptive(char_counts));
    refind::write_text_file(out / "stats.txt", stats);

    refind::write_text_file(
        out / "hist_words.csv",
        refind::histogram_csv(refind::histogram(word_counts, 1.0)));
    refind::write_text_file(
        out / "hist_chars.csv",
        refind::histogram_csv(refind::histogram(char_counts, 1.0)));

    refind::BucketSpec spec;
    spec.boundaries = parse_edge_list(edges_csv);
    refind::write_text_file(
        out / "buckets.txt",
        refind::render_bucket_table(
            refind::bucket_success_rates(records, spec)));
    refind::write_text_file(out / "per_count.csv",
                            refind::per_count_success_csv(records));
    refind::write_text_file(
        out / "duplicates.csv",
        refind::duplicate_words_csv(records, top_duplicates));

    const fs::path experiment_path = out / "experiment.jsonl";
    if (fs::exists(experiment_path)) {
        const auto experiment = parse_experiment_jsonl(experiment_path);
        refind::write_text_file(
            out / "scatter.csv", refind::experiment_csv(records, experiment));
        std::cout << "scatter " << (out / "scatter.csv").string() << "\n";
    }

    std::cout << "reported " << records.size() << "\n";
    std::cout << "stats " << (out / "stats.txt").string() << "\n";
    write_run_meta(g.out_dir, "report", started, 0);
    return 0;
}

// ----------------------------------------------------------------- query

std::shared_ptr<refind::SearchProvider> make_provider(
    const std::string& config) {
    if (config.empty())
        throw refind::ConfigError(
            "query needs --provider <fixture dir | config.json>");
    const fs::path path(config);
    if (fs::is_directory(path))
        return std::make_shared<refind::FixtureProvider>(path);
    return std::make_shared<refind::HttpProvider>(path);
}

int cmd_query(const GlobalOpts& g, const std::string& modes_csv,
              std::size_t k, double rate, const std::string& cache_dir,
              bool no_cache) {
    const std::int64_t started = std::time(nullptr);
    LockFile lock(g.out_dir);
    const auto records = load_input_corpus(g);
    const auto modes = parse_modes(modes_csv);

    auto provider = make_provider(g.provider_config);
    if (rate < 0.0 && provider->deterministic()) rate = 0.0;  // fixtures: no pacing
    if (rate < 0.0) rate = 1.0;  // live providers default to 1 req/s
    std::optional<fs::path> cache;
    if (!no_cache)
        cache = cache_dir.empty() ? fs::path(g.out_dir) / "cache"
                                  : fs::path(cache_dir);
    refind::SearchClient client(provider, cache, rate);

    const auto result = refind::run_experiment(records, client, modes, k);

    const fs::path out(g.out_dir);
    refind::write_text_file(out / "experiment.jsonl",
                            refind::experiment_jsonl(result));
    refind::write_text_file(out / "scatter.csv",
                            refind::experiment_csv(records, result));

    const bool has_or = std::find(modes.begin(), modes.end(),
                                  refind::QueryMode::Or) != modes.end();
    if (has_or) {
        refind::save_corpus(refind::apply_judgments(records, result),
                            out / "corpus_labeled.jsonl");
        std::cout << "labeled " << (out / "corpus_labeled.jsonl").string()
                  << "\n";
    }

    for (const auto& f : result.failures)
        std::cerr << "warning: " << f.uri << " [" << refind::to_string(f.mode)
                  << "]: " << f.error << "\n";
    std::cout << "entries " << result.entries.size() << "\n";
    std::cout << "failures " << result.failures.size() << "\n";
    std::cout << "provider_calls " << client.provider_calls() << "\n";
    write_run_meta(g.out_dir, "query", started, result.failures.size());

    if (result.entries.empty() && !result.failures.empty())
        throw refind::ProviderError("all queries failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"refind: decide whether web page titles work as search "
                 "queries, and measure how well"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--corpus", g.corpus, "Corpus JSONL file");
    app.add_option("--lexicon", g.lexicon_specs,
                   "Lexicon as name=path (repeatable)");
    app.add_option("--stop-titles", g.stop_titles_path,
                   "Stop-title phrase file");
    app.add_option("--out", g.out_dir, "Output directory (default: out)");
    app.add_option("--seed", g.seed, "Seed for any sampling (fixed default)");
    app.add_option("--provider", g.provider_config,
                   "Search provider: fixture directory or HTTP config JSON");

    // ingest
    auto* ingest = app.add_subcommand(
        "ingest", "Build a filtered corpus from a snapshot directory");
    std::string snapshots_dir;
    std::string labels_path;
    std::string english_name = "english";
    refind::FilterConfig filter;
    ingest->add_option("--snapshots", snapshots_dir, "Snapshot store directory")
        ->required();
    ingest->add_option("--labels", labels_path,
                       "Ground-truth labels JSONL (uri, status)");
    ingest->add_option("--min-content-words", filter.min_content_words,
                       "Reject pages with fewer visible words (default 50)");
    ingest->add_flag_callback(
        "--no-english-filter",
        [&filter]() { filter.require_english = false; },
        "Skip the English-content check");
    ingest->add_option("--english-threshold",
                       filter.english_stopword_hit_threshold,
                       "Minimum stopword hit fraction (default 0.02)");
    ingest->add_option("--english-lexicon", english_name,
                       "Name of the lexicon used as the English stopword "
                       "list (default: english)");

    // featurize
    app.add_subcommand("featurize",
                       "Write the per-title feature matrix as CSV");

    // classify
    auto* classify =
        app.add_subcommand("classify", "Predict found/not-found per title");
    std::string rule_text;
    bool use_baseline = false;
    classify->add_option(
        "--rule", rule_text,
        "feature=<id> op=<gt|lt> threshold=<x> label=<found|not_found>");
    classify->add_flag("--baseline", use_baseline,
                       "Use the all-found baseline instead of a rule");

    // evaluate
    auto* evaluate = app.add_subcommand(
        "evaluate", "Confusion table plus significance against the baseline");
    evaluate->add_option(
        "--rule", rule_text,
        "feature=<id> op=<gt|lt> threshold=<x> label=<found|not_found>");
    evaluate->add_flag("--baseline", use_baseline,
                       "Evaluate the all-found baseline");

    // sweep
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Evaluate a rule across a ladder of thresholds");
    std::string thresholds_csv;
    bool render_tables = false;
    sweep_cmd->add_option(
        "--rule", rule_text,
        "Rule template; its threshold field is overridden per step")
        ->required();
    sweep_cmd->add_option("--thresholds", thresholds_csv,
                          "Comma-separated ascending thresholds")
        ->required();
    sweep_cmd->add_flag("--tables", render_tables,
                        "Also render one confusion table per threshold");

    // report
    auto* report = app.add_subcommand(
        "report", "Descriptive stats, histograms, buckets, duplicates");
    std::string edges_csv = "10,20,30,40,50,60";
    std::size_t top_duplicates = 10;
    std::size_t sample = 0;
    report->add_option("--bucket-edges", edges_csv,
                       "Word-count bucket upper edges (default 10,...,60)");
    report->add_option("--top-duplicates", top_duplicates,
                       "Rows in the duplicate-word list (default 10)");
    report->add_option("--sample", sample,
                       "Report on a seeded random subsample of this size");

    // query
    auto* query = app.add_subcommand(
        "query", "Run title queries against a provider and judge top-k");
    std::string modes_csv = "or,and,quoted";
    std::size_t k = 10;
    double rate = -1.0;
    std::string cache_dir;
    bool no_cache = false;
    query->add_option("--modes", modes_csv,
                      "Query modes to run (default or,and,quoted)");
    query->add_option("--k", k, "Top-k cutoff (default 10)");
    query->add_option("--rate", rate,
                      "Provider requests per second (default: 1 for HTTP, "
                      "unlimited for fixtures)");
    query->add_option("--cache", cache_dir,
                      "Response cache directory (default <out>/cache)");
    query->add_flag("--no-cache", no_cache, "Disable the response cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (ingest->parsed())
            return cmd_ingest(g, snapshots_dir, labels_path, filter,
                              english_name);
        if (app.get_subcommand("featurize")->parsed()) return cmd_featurize(g);
        if (classify->parsed()) {
            if (use_baseline != rule_text.empty())
                throw refind::ConfigError(
                    "pass exactly one of --rule or --baseline");
            return cmd_classify(g, rule_text, use_baseline);
        }
        if (evaluate->parsed()) {
            if (use_baseline != rule_text.empty())
                throw refind::ConfigError(
                    "pass exactly one of --rule or --baseline");
            return cmd_evaluate(g, rule_text, use_baseline);
        }
        if (sweep_cmd->parsed())
            return cmd_sweep(g, rule_text, thresholds_csv, render_tables);
        if (report->parsed())
            return cmd_report(g, edges_csv, top_duplicates, sample);
        if (query->parsed())
            return cmd_query(g, modes_csv, k, rate, cache_dir, no_cache);
        throw refind::ConfigError("no subcommand selected");
    } catch (const refind::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const refind::ProviderError& e) {
        std::cerr << "provider error: " << e.what() << "\n";
        return 5;
    } catch (const refind::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const refind::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
