#include "pipeline/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

#include "checklist/evaluate.hpp"
#include "checklist/suite.hpp"
#include "common/errors.hpp"
#include "common/fsio.hpp"
#include "common/hash.hpp"
#include "data/corpus.hpp"
#include "data/lexicons.hpp"
#include "data/names.hpp"
#include "data/sst2.hpp"
#include "data/synthetic.hpp"
#include "stability/report.hpp"
#include "swa/swa.hpp"
#include "textmodel/train.hpp"
#include "textmodel/vocab.hpp"
#include "textmodel/weights_io.hpp"

namespace seedstab::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

Layout::Layout(const std::string& out_dir) : out(out_dir) {
    if (out_dir.empty())
        throw ConfigError(
            "out_dir: not set (use --out, out_dir in the config, or SEEDSTAB_OUT)");
}

fs::path Layout::weights_file(int seed, const std::string& variant,
                              const std::string& epoch) const {
    const std::string tail = epoch == "final" ? "final" : "epoch" + epoch;
    return models() / ("weights_seed" + std::to_string(seed) + "_" + variant + "_" + tail +
                       ".bin");
}

fs::path Layout::train_log_json(int seed, const std::string& variant) const {
    return models() / ("log_seed" + std::to_string(seed) + "_" + variant + ".json");
}

fs::path Layout::eval_jsonl(int seed, const std::string& variant) const {
    return evals() / ("eval_seed" + std::to_string(seed) + "_" + variant + ".jsonl");
}

namespace {

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("out_dir: cannot create " + dir.string() + ": " + ec.message());
}

std::string fingerprint_hash(const RunConfig& config) {
    return hex64(fnv1a64(config.prepare_fingerprint()));
}

// Ordered (seed asc, vanilla before swa); all multi-run loops share it so
// job indices, log files and summaries line up.
std::vector<std::pair<int, std::string>> run_grid(const RunConfig& config) {
    std::vector<int> seeds = config.seeds;
    std::sort(seeds.begin(), seeds.end());
    std::vector<std::string> variants;
    for (const char* v : {"vanilla", "swa"})
        if (std::find(config.variants.begin(), config.variants.end(), v) !=
            config.variants.end())
            variants.emplace_back(v);
    std::vector<std::pair<int, std::string>> grid;
    for (int seed : seeds)
        for (const auto& variant : variants) grid.emplace_back(seed, variant);
    return grid;
}

// Claims job indices off a shared counter; an exception in any job is
// rethrown on the calling thread after all workers drain.
void run_jobs(int parallelism, std::size_t n_jobs,
              const std::function<void(std::size_t)>& body) {
    if (n_jobs == 0) return;
    const int workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(std::max(parallelism, 1)), n_jobs));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n_jobs; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::exception_ptr first_error;
    auto loop = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_jobs) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(loop);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

data::LexiconSet load_lexicons(const RunConfig& config) {
    if (config.lexicon_dir.empty()) return data::LexiconSet::builtin();
    return data::LexiconSet::load_dir(config.lexicon_dir);
}

// Every lexicon the suite builder will pull, attributed to the capability
// that needs it so a missing list is reported in the operator's terms.
void check_suite_lexicons(const data::LexiconSet& lex, const std::string& lexicon_dir) {
    const std::string source =
        lexicon_dir.empty() ? "the built-in lexicon set" : lexicon_dir;
    const std::vector<std::pair<std::string, std::vector<std::string>>> needed = {
        {"Single Positive Words", {"positive_words"}},
        {"Single Negative Words", {"negative_words"}},
        {"Sentiment-laden Words in Context",
         {"positive_adjectives", "negative_adjectives", "positive_verbs_present",
          "negative_verbs_present", "movie_nouns"}},
        {"Temporal Sentiment Change", {"positive_verbs_past", "negative_verbs_past"}},
        {"Negation of Positive with Neutral in the Middle", {"hedges"}},
        {"Movie Genre Specific Sentiments", {"genres"}},
        {"Movie Industries Sentiments", {"industries"}},
        {"Change Neutral Words", {"neutral_words"}},
        {"Change Names", {"first_names"}},
        {"Add Positive Phrases", {"positive_phrases"}},
        {"Add Negative Phrases", {"negative_phrases"}},
    };
    auto require = [&](const std::string& capability, const std::string& list) {
        if (!lex.has(list))
            throw ConfigError("capability \"" + capability + "\": lexicon \"" + list +
                              "\" not found in " + source);
    };
    for (const auto& [capability, lists] : needed)
        for (const auto& list : lists) require(capability, list);
    if (lex.has("genres"))
        for (const auto& g : lex.get("genres")) {
            require("Movie Genre Specific Sentiments", "genre_fit_" + g);
            require("Movie Genre Specific Sentiments", "genre_misfit_" + g);
        }
}

struct CorpusBundle {
    std::vector<data::LabeledInstance> train;
    std::vector<data::LabeledInstance> dev;
    std::vector<data::LabeledInstance> test;
    int dropped_band = 0;
    int unmatched = 0;
};

CorpusBundle acquire_corpus(const RunConfig& config, const data::LexiconSet& lex) {
    CorpusBundle bundle;
    if (config.data.source == "synthetic") {
        const auto& s = config.data.synthetic;
        auto corpus = data::gen_synthetic_corpus(s.seed, s.n_train, s.n_dev, s.n_test, lex);
        bundle.train = std::move(corpus.train);
        bundle.dev = std::move(corpus.dev);
        bundle.test = std::move(corpus.test);
        return bundle;
    }
    const auto& paths = config.data.sst2;
    bundle.train = data::load_tsv(paths.train_tsv);
    bundle.dev = data::load_tsv(paths.dev_tsv);
    auto sentences = data::load_unlabeled_tsv(paths.test_tsv);
    auto dict = data::PhraseDictionary::load(paths.dictionary, paths.sentiment_labels);
    auto match = data::match_test_labels(sentences, dict);
    if (match.matched.empty())
        throw DataError("data.sst2.test_tsv: no test sentence matched the phrase dictionary");
    bundle.test = std::move(match.matched);
    bundle.dropped_band = static_cast<int>(match.dropped_band.size());
    bundle.unmatched = static_cast<int>(match.unmatched.size());
    return bundle;
}

std::vector<std::string> texts_of(const std::vector<data::LabeledInstance>& instances) {
    std::vector<std::string> texts;
    texts.reserve(instances.size());
    for (const auto& inst : instances) texts.push_back(inst.text);
    return texts;
}

textmodel::Vocab load_vocab_file(const fs::path& path) {
    auto lines = read_lines(path);
    if (lines.size() < 2 || lines[0] != "<pad>" || lines[1] != "<unk>")
        throw DataError("vocab file corrupt (expected <pad>, <unk> first): " + path.string());
    textmodel::Vocab vocab;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        if (lines[i].empty())
            throw DataError("vocab file has an empty token line: " + path.string());
        vocab.add(lines[i]);
    }
    return vocab;
}

void require_prepared(const Layout& lay) {
    for (const fs::path& p :
         {lay.train_jsonl(), lay.dev_jsonl(), lay.vocab_txt(), lay.suite_instances_jsonl(),
          lay.suite_manifest_json(), lay.prepare_info_json()}) {
        if (!fs::exists(p))
            throw DataError("prepared data missing: " + p.string() + " (run prepare first)");
    }
}

void check_fingerprint(const RunConfig& config, const Layout& lay) {
    json info;
    try {
        info = json::parse(read_file(lay.prepare_info_json()));
    } catch (const json::parse_error& e) {
        throw DataError("prepare_info.json corrupt: " + std::string(e.what()));
    }
    if (!info.is_object() || !info.contains("fingerprint") || !info["fingerprint"].is_string())
        throw DataError("prepare_info.json corrupt: missing fingerprint");
    if (info["fingerprint"].get<std::string>() != fingerprint_hash(config))
        throw ConfigError(
            "config: data/suite settings differ from the prepared artifacts (run prepare again)");
}

std::vector<textmodel::Example> encode_corpus(const std::vector<data::LabeledInstance>& instances,
                                              const textmodel::Vocab& vocab) {
    std::vector<textmodel::Example> examples;
    examples.reserve(instances.size());
    for (const auto& inst : instances)
        examples.push_back({textmodel::encode(inst.text, vocab), inst.label});
    return examples;
}

std::string grid_to_string(const std::vector<std::pair<int, std::string>>& pairs) {
    std::string s;
    for (const auto& [seed, variant] : pairs) {
        if (!s.empty()) s += ", ";
        s += "(seed " + std::to_string(seed) + ", " + variant + ")";
    }
    return s;
}

}  // namespace

PrepareSummary cmd_prepare(const RunConfig& config) {
    config.validate();
    Layout lay(config.out_dir);
    ensure_dir(lay.prepared());

    auto lex = load_lexicons(config);
    check_suite_lexicons(lex, config.lexicon_dir);

    auto bundle = acquire_corpus(config, lex);
    data::save_jsonl(lay.train_jsonl(), bundle.train);
    data::save_jsonl(lay.dev_jsonl(), bundle.dev);
    data::save_jsonl(lay.test_jsonl(), bundle.test);

    if (fs::exists(lay.lexicons_dir())) fs::remove_all(lay.lexicons_dir());
    lex.save_dir(lay.lexicons_dir());

    auto vocab = textmodel::build_vocab(texts_of(bundle.train), config.data.min_freq);
    write_lines(lay.vocab_txt(), vocab.tokens());

    auto mined = data::extract_name_polarity(bundle.train, lex.get("first_names"),
                                             config.data.name_min_count,
                                             config.data.name_exclude);
    write_lines(lay.names_positive_txt(), mined.positive_names);
    write_lines(lay.names_negative_txt(), mined.negative_names);
    {
        std::string csv = "name,count,mean_label\n";
        for (const auto& np : mined.all)
            csv += np.name + "," + std::to_string(np.count) + "," + format_double(np.mean_label) +
                   "\n";
        atomic_write_file(lay.name_polarity_csv(), csv);
    }

    auto suite = checklist::build_suite(config.suite, bundle.test, mined, lex);
    atomic_write_file(lay.suite_instances_jsonl(),
                      checklist::suite_instances_to_jsonl(suite.instances));
    atomic_write_file(lay.suite_manifest_json(), checklist::suite_manifest_json(suite, config.suite));

    atomic_write_file(lay.config_snapshot_json(), config.canonical_json());

    PrepareSummary summary;
    summary.n_train = static_cast<int>(bundle.train.size());
    summary.n_dev = static_cast<int>(bundle.dev.size());
    summary.n_test = static_cast<int>(bundle.test.size());
    summary.vocab_size = vocab.size();
    summary.positive_names = static_cast<int>(mined.positive_names.size());
    summary.negative_names = static_cast<int>(mined.negative_names.size());
    summary.capabilities = static_cast<int>(suite.capabilities.size());
    summary.suite_instances = suite.instances.size();
    summary.dropped_band = bundle.dropped_band;
    summary.unmatched = bundle.unmatched;

    json info;
    info["fingerprint"] = fingerprint_hash(config);
    info["n_train"] = summary.n_train;
    info["n_dev"] = summary.n_dev;
    info["n_test"] = summary.n_test;
    info["vocab_size"] = summary.vocab_size;
    info["vocab_hash"] = hex64(vocab.content_hash());
    info["positive_names"] = summary.positive_names;
    info["negative_names"] = summary.negative_names;
    info["capabilities"] = summary.capabilities;
    info["suite_instances"] = summary.suite_instances;
    if (config.data.source == "sst2") {
        info["sst2"] = json{{"matched", summary.n_test},
                            {"dropped_band", summary.dropped_band},
                            {"unmatched", summary.unmatched}};
    }
    atomic_write_file(lay.prepare_info_json(), info.dump(2) + "\n");
    return summary;
}

namespace {

struct TrainedRun {
    textmodel::ModelWeights final_weights;
    const textmodel::TrainResult* run = nullptr;
    double final_dev_accuracy = 0.0;
    json swa_block;  // null for vanilla
};

json train_log_body(const textmodel::TrainConfig& cfg, const TrainedRun& trained, int seed,
                    const std::string& variant, const std::string& vocab_hash,
                    std::size_t n_train) {
    const auto& run = *trained.run;
    json log;
    log["seed"] = seed;
    log["variant"] = variant;
    log["epochs"] = cfg.epochs;
    log["steps_per_epoch"] = textmodel::steps_per_epoch(n_train, cfg.batch_size);
    log["dev_accuracy"] = run.dev_accuracy;
    log["lr_trace"] = run.lr_trace;
    std::vector<std::string> hashes;
    for (const auto& snap : run.snapshots) hashes.push_back(textmodel::weights_digest(snap));
    log["snapshot_hashes"] = hashes;
    log["final_dev_accuracy"] = trained.final_dev_accuracy;
    log["final_weights_hash"] = textmodel::weights_digest(trained.final_weights);
    log["config_hash"] = hex64(cfg.content_hash());
    log["vocab_hash"] = vocab_hash;
    log["warmup_steps"] = cfg.warmup_steps;
    log["total_steps"] = cfg.total_steps;
    if (!trained.swa_block.is_null()) log["swa"] = trained.swa_block;
    return log;
}

}  // namespace

TrainSummary cmd_train(const RunConfig& config) {
    config.validate();
    Layout lay(config.out_dir);
    require_prepared(lay);
    check_fingerprint(config, lay);
    ensure_dir(lay.models());

    const auto train_corpus = data::load_jsonl(lay.train_jsonl());
    const auto dev_corpus = data::load_jsonl(lay.dev_jsonl());
    const auto vocab = load_vocab_file(lay.vocab_txt());
    const std::string vocab_hash = hex64(vocab.content_hash());
    const auto train_ex = encode_corpus(train_corpus, vocab);
    const auto dev_ex = encode_corpus(dev_corpus, vocab);

    const auto grid = run_grid(config);
    std::vector<RunOutcome> outcomes(grid.size());

    run_jobs(config.parallelism, grid.size(), [&](std::size_t i) {
        const auto& [seed, variant] = grid[i];
        RunOutcome& outcome = outcomes[i];
        outcome.seed = seed;
        outcome.variant = variant;
        try {
            const auto cfg = config.train_config(static_cast<std::uint64_t>(seed),
                                                 train_ex.size());
            const auto base = textmodel::LrSchedule::warmup_linear(cfg.warmup_steps,
                                                                   cfg.total_steps, cfg.peak_lr);
            TrainedRun trained;
            textmodel::TrainResult vanilla_result;
            swa::SwaResult swa_result;
            if (variant == "vanilla") {
                vanilla_result = textmodel::train(cfg, base, train_ex, dev_ex);
                trained.final_weights = vanilla_result.final_weights;
                trained.run = &vanilla_result;
                trained.final_dev_accuracy = vanilla_result.dev_accuracy.empty()
                                                 ? 0.0
                                                 : vanilla_result.dev_accuracy.back();
            } else {
                auto swa_cfg = config.swa_config();
                json candidates = json::object();
                if (config.swa.select_lr && !config.swa.candidate_lrs.empty()) {
                    std::map<double, double> acc_by_lr;
                    std::map<double, swa::SwaResult> result_by_lr;
                    for (double lr : std::set<double>(config.swa.candidate_lrs.begin(),
                                                      config.swa.candidate_lrs.end())) {
                        swa_cfg.constant_lr = lr;
                        auto res = swa::train_swa(cfg, swa_cfg, base, train_ex, dev_ex);
                        acc_by_lr[lr] = res.swa_dev_accuracy;
                        result_by_lr[lr] = std::move(res);
                        candidates[format_double(lr)] = acc_by_lr[lr];
                    }
                    swa_cfg.constant_lr = swa::select_swa_lr(acc_by_lr);
                    swa_result = std::move(result_by_lr[swa_cfg.constant_lr]);
                } else {
                    swa_result = swa::train_swa(cfg, swa_cfg, base, train_ex, dev_ex);
                }
                trained.final_weights = swa_result.swa_weights;
                trained.run = &swa_result.run;
                trained.final_dev_accuracy = swa_result.swa_dev_accuracy;
                trained.swa_block = json{
                    {"chosen_constant_lr", swa_cfg.constant_lr},
                    {"n_averaged",
                     static_cast<long long>(swa_result.contributing_snapshots.size())},
                    {"swa_dev_accuracy", swa_result.swa_dev_accuracy}};
                if (!candidates.empty()) trained.swa_block["candidate_dev_accuracy"] = candidates;
            }

            textmodel::WeightsHeader header;
            header.dims = trained.final_weights.dims;
            header.vocab_hash = vocab_hash;
            header.config_hash = hex64(cfg.content_hash());
            header.seed = static_cast<std::uint64_t>(seed);
            header.variant = variant;
            const auto& run = *trained.run;
            for (std::size_t e = 0; e < run.snapshots.size(); ++e) {
                header.epoch = std::to_string(e + 1);
                textmodel::save_weights(lay.weights_file(seed, variant, header.epoch),
                                        run.snapshots[e], header);
            }
            header.epoch = "final";
            header.dims = trained.final_weights.dims;
            textmodel::save_weights(lay.weights_file(seed, variant, "final"),
                                    trained.final_weights, header);

            json log = train_log_body(cfg, trained, seed, variant, vocab_hash, train_ex.size());
            atomic_write_file(lay.train_log_json(seed, variant), log.dump(2) + "\n");

            outcome.ok = true;
            outcome.final_dev_accuracy = trained.final_dev_accuracy;
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.error = e.what();
        }
    });

    TrainSummary summary;
    summary.runs = outcomes;
    for (const auto& o : outcomes)
        if (!o.ok) ++summary.n_failed;

    if (summary.n_failed == static_cast<int>(outcomes.size())) {
        throw Error(ErrorKind::training, "all " + std::to_string(outcomes.size()) +
                                             " training runs failed; first error: " +
                                             (outcomes.empty() ? "none" : outcomes[0].error));
    }
    if (summary.n_failed > 0) {
        json failures = json::array();
        for (const auto& o : outcomes) {
            if (o.ok) continue;
            failures.push_back(
                json{{"seed", o.seed}, {"variant", o.variant}, {"error", o.error}});
        }
        atomic_write_file(lay.failures_json(), failures.dump(2) + "\n");
    } else if (fs::exists(lay.failures_json())) {
        fs::remove(lay.failures_json());
    }
    return summary;
}

EvalSummary cmd_eval(const RunConfig& config) {
    config.validate();
    Layout lay(config.out_dir);
    require_prepared(lay);
    check_fingerprint(config, lay);
    ensure_dir(lay.evals());

    const auto grid = run_grid(config);
    std::vector<std::pair<int, std::string>> missing;
    for (const auto& [seed, variant] : grid)
        if (!fs::exists(lay.weights_file(seed, variant, "final")))
            missing.emplace_back(seed, variant);
    if (!missing.empty())
        throw EvalError("missing model files for " + grid_to_string(missing) +
                        " (run train first)");

    const auto vocab = load_vocab_file(lay.vocab_txt());
    const std::string vocab_hash = hex64(vocab.content_hash());
    const auto dev_corpus = data::load_jsonl(lay.dev_jsonl());
    const auto instances =
        checklist::suite_instances_from_jsonl(read_file(lay.suite_instances_jsonl()));
    const auto capabilities =
        checklist::capabilities_from_manifest_json(read_file(lay.suite_manifest_json()));

    const std::size_t per_model = dev_corpus.size() + instances.size();

    run_jobs(config.parallelism, grid.size(), [&](std::size_t i) {
        const auto& [seed, variant] = grid[i];
        const auto loaded = textmodel::load_weights(lay.weights_file(seed, variant, "final"));
        if (loaded.header.vocab_hash != vocab_hash)
            throw DataError("model for (seed " + std::to_string(seed) + ", " + variant +
                            ") was trained against a different vocab (run train again)");
        const auto& weights = loaded.weights;
        checklist::ForwardFn forward = [&](const std::string& text) {
            auto probs = textmodel::forward(weights, textmodel::encode(text, vocab));
            return std::make_pair(textmodel::predicted_label(probs), probs[1]);
        };

        std::vector<checklist::EvalRecord> records;
        records.reserve(per_model);
        for (const auto& inst : dev_corpus) {
            auto [pred, confidence] = forward(inst.text);
            checklist::EvalRecord rec;
            rec.instance_id = inst.id;
            rec.case_id = inst.id;
            rec.capability = "dev";
            rec.pred = pred;
            rec.confidence = confidence;
            rec.has_mft_failed = true;
            rec.mft_failed = pred != inst.label;
            records.push_back(std::move(rec));
        }
        auto output = checklist::evaluate_model(forward, capabilities, instances,
                                                config.suite.dir_tolerance);
        records.insert(records.end(), output.records.begin(), output.records.end());
        atomic_write_file(lay.eval_jsonl(seed, variant),
                          checklist::eval_records_to_jsonl(records, seed, variant));
    });

    EvalSummary summary;
    summary.n_models = static_cast<int>(grid.size());
    summary.records_per_model = per_model;
    return summary;
}

namespace {

void write_report_files(const fs::path& dir, const stability::ComposedReport& report) {
    ensure_dir(dir);
    atomic_write_file(dir / "report.json", report.report_json);
    atomic_write_file(dir / "error_rates.csv", report.error_rates_csv);
    atomic_write_file(dir / "overlap_pairs.csv", report.overlap_pairs_csv);
    atomic_write_file(dir / "kappa.csv", report.kappa_csv);
    atomic_write_file(dir / "summary.txt", report.summary_txt);
}

}  // namespace

ReportSummary cmd_report(const RunConfig& config) {
    config.validate();
    if (config.seeds.size() < 2)
        throw ConfigError("config: seeds: stability report needs at least 2 seeds");
    Layout lay(config.out_dir);
    require_prepared(lay);
    check_fingerprint(config, lay);

    const auto grid = run_grid(config);
    std::vector<std::pair<int, std::string>> missing;
    for (const auto& [seed, variant] : grid)
        if (!fs::exists(lay.eval_jsonl(seed, variant))) missing.emplace_back(seed, variant);
    if (!missing.empty())
        throw EvalError("evaluation incomplete; missing " + grid_to_string(missing) +
                        " (run eval first)");

    stability::ReportInputs inputs;
    inputs.seeds = config.seeds;
    inputs.variants = config.variants;
    inputs.capabilities =
        checklist::capabilities_from_manifest_json(read_file(lay.suite_manifest_json()));
    inputs.misclassified_only = config.stability.misclassified_only;
    inputs.dir_categories = config.stability.dir_categories;
    for (const auto& [seed, variant] : grid) {
        auto records = checklist::eval_records_from_jsonl(read_file(lay.eval_jsonl(seed, variant)));
        auto& dev_bucket = inputs.dev_records[variant][seed];
        auto& suite_bucket = inputs.suite_records[variant][seed];
        for (auto& rec : records) {
            if (rec.capability == "dev")
                dev_bucket.push_back(std::move(rec));
            else
                suite_bucket.push_back(std::move(rec));
        }
    }

    auto full = stability::compose_report(inputs);
    write_report_files(lay.report_full(), full);

    ReportSummary summary;
    summary.flagged_seeds = full.flagged_seeds;
    summary.notices = full.notices;
    if (!full.flagged_seeds.empty()) {
        auto filtered = stability::compose_report(inputs, full.flagged_seeds);
        write_report_files(lay.report_filtered(), filtered);
        summary.wrote_filtered = true;
        std::string flagged;
        for (int s : full.flagged_seeds)
            flagged += (flagged.empty() ? "" : ", ") + std::to_string(s);
        summary.notices.push_back("outlier seeds flagged by the dev-accuracy rule: " + flagged +
                                  "; filtered report written alongside the full one");
    } else {
        if (fs::exists(lay.report_filtered())) fs::remove_all(lay.report_filtered());
        summary.notices.push_back("no outlier seeds flagged; single report written");
    }
    return summary;
}

AllSummary cmd_all(const RunConfig& config) {
    AllSummary summary;
    summary.prepare = cmd_prepare(config);
    summary.train = cmd_train(config);
    summary.eval = cmd_eval(config);
    summary.report = cmd_report(config);
    return summary;
}

}  // namespace seedstab::pipeline
