#include "pipeline/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>

#include <nlohmann/json.hpp>

#include "common/errors.hpp"
#include "common/fsio.hpp"

namespace seedstab::pipeline {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError("config: " + path + ": " + what);
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

std::uint64_t get_u64(const json& j, const std::string& path) {
    if (!j.is_number_integer() || (j.is_number_integer() && j.get<long long>() < 0))
        fail(path, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) fail(path, "expected a boolean");
    return j.get<bool>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> get_string_list(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) fail(path, "expected an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<double> get_number_list(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& item : j) {
        if (!item.is_number()) fail(path, "expected an array of numbers");
        out.push_back(item.get<double>());
    }
    return out;
}

std::vector<int> get_seed_array(const json& j, const std::string& path) {
    if (j.is_string()) return parse_seed_list(j.get<std::string>());
    if (!j.is_array()) fail(path, "expected an array of integers or a range string");
    std::vector<int> seeds;
    for (const auto& item : j) {
        if (!item.is_number_integer()) fail(path, "expected an array of integers");
        seeds.push_back(item.get<int>());
    }
    return seeds;
}

void parse_synthetic(const json& j, SyntheticSpec& out) {
    for (const auto& [key, value] : j.items()) {
        const std::string path = "data.synthetic." + key;
        if (key == "seed") out.seed = get_u64(value, path);
        else if (key == "n_train") out.n_train = get_int(value, path);
        else if (key == "n_dev") out.n_dev = get_int(value, path);
        else if (key == "n_test") out.n_test = get_int(value, path);
        else fail(path, "unknown field");
    }
}

void parse_sst2(const json& j, Sst2Spec& out) {
    for (const auto& [key, value] : j.items()) {
        const std::string path = "data.sst2." + key;
        if (key == "train_tsv") out.train_tsv = get_string(value, path);
        else if (key == "dev_tsv") out.dev_tsv = get_string(value, path);
        else if (key == "test_tsv") out.test_tsv = get_string(value, path);
        else if (key == "dictionary") out.dictionary = get_string(value, path);
        else if (key == "sentiment_labels") out.sentiment_labels = get_string(value, path);
        else fail(path, "unknown field");
    }
}

void parse_data(const json& j, DataConfig& out) {
    for (const auto& [key, value] : j.items()) {
        const std::string path = "data." + key;
        if (key == "source") out.source = get_string(value, path);
        else if (key == "synthetic") {
            if (!value.is_object()) fail(path, "expected an object");
            parse_synthetic(value, out.synthetic);
        } else if (key == "sst2") {
            if (!value.is_object()) fail(path, "expected an object");
            parse_sst2(value, out.sst2);
        } else if (key == "min_freq") out.min_freq = get_int(value, path);
        else if (key == "name_min_count") out.name_min_count = get_int(value, path);
        else if (key == "name_exclude") out.name_exclude = get_string_list(value, path);
        else fail(path, "unknown field");
    }
}

void parse_train(const json& j, TrainSection& out) {
    for (const auto& [key, value] : j.items()) {
        const std::string path = "train." + key;
        if (key == "epochs") out.epochs = get_int(value, path);
        else if (key == "batch_size") out.batch_size = get_int(value, path);
        else if (key == "peak_lr") out.peak_lr = get_number(value, path);
        else if (key == "warmup_frac") out.warmup_frac = get_number(value, path);
        else if (key == "embedding_dim") out.embedding_dim = get_int(value, path);
        else if (key == "hidden_dim") out.hidden_dim = get_int(value, path);
        else if (key == "adam_beta1") out.adam_beta1 = get_number(value, path);
        else if (key == "adam_beta2") out.adam_beta2 = get_number(value, path);
        else if (key == "adam_eps") out.adam_eps = get_number(value, path);
        else fail(path, "unknown field");
    }
}

void parse_swa(const json& j, SwaSection& out) {
    for (const auto& [key, value] : j.items()) {
        const std::string path = "swa." + key;
        if (key == "cutoff_epoch") out.cutoff_epoch = get_int(value, path);
        else if (key == "constant_lr") out.constant_lr = get_number(value, path);
        else if (key == "candidate_lrs") out.candidate_lrs = get_number_list(value, path);
        else if (key == "select_lr") out.select_lr = get_bool(value, path);
        else fail(path, "unknown field");
    }
}

void parse_suite(const json& j, checklist::SuiteConfig& out) {
    for (const auto& [key, value] : j.items()) {
        const std::string path = "suite." + key;
        if (key == "seed") out.seed = get_u64(value, path);
        else if (key == "scale") out.scale = get_number(value, path);
        else if (key == "dir_tolerance") out.dir_tolerance = get_number(value, path);
        else if (key == "include_unvalidated") out.include_unvalidated = get_bool(value, path);
        else if (key == "k_change_names") out.k_change_names = get_int(value, path);
        else if (key == "k_polarizing") out.k_polarizing = get_int(value, path);
        else if (key == "k_change_neutral") out.k_change_neutral = get_int(value, path);
        else if (key == "k_change_industries") out.k_change_industries = get_int(value, path);
        else fail(path, "unknown field");
    }
}

void parse_stability(const json& j, StabilitySection& out) {
    for (const auto& [key, value] : j.items()) {
        const std::string path = "stability." + key;
        if (key == "misclassified_only") out.misclassified_only = get_bool(value, path);
        else if (key == "dir_categories") out.dir_categories = get_int(value, path);
        else fail(path, "unknown field");
    }
}

json synthetic_json(const SyntheticSpec& s) {
    return json{{"seed", s.seed},
                {"n_train", s.n_train},
                {"n_dev", s.n_dev},
                {"n_test", s.n_test}};
}

json sst2_json(const Sst2Spec& s) {
    return json{{"train_tsv", s.train_tsv},
                {"dev_tsv", s.dev_tsv},
                {"test_tsv", s.test_tsv},
                {"dictionary", s.dictionary},
                {"sentiment_labels", s.sentiment_labels}};
}

json data_json(const DataConfig& d) {
    return json{{"source", d.source},
                {"synthetic", synthetic_json(d.synthetic)},
                {"sst2", sst2_json(d.sst2)},
                {"min_freq", d.min_freq},
                {"name_min_count", d.name_min_count},
                {"name_exclude", d.name_exclude}};
}

json suite_json(const checklist::SuiteConfig& s) {
    return json{{"seed", s.seed},
                {"scale", s.scale},
                {"dir_tolerance", s.dir_tolerance},
                {"include_unvalidated", s.include_unvalidated},
                {"k_change_names", s.k_change_names},
                {"k_polarizing", s.k_polarizing},
                {"k_change_neutral", s.k_change_neutral},
                {"k_change_industries", s.k_change_industries}};
}

}  // namespace

void RunConfig::validate() const {
    if (seeds.empty()) fail("seeds", "must list at least one seed");
    {
        std::set<int> seen;
        for (int s : seeds) {
            if (s < 0) fail("seeds", "seed " + std::to_string(s) + " is negative");
            if (!seen.insert(s).second) fail("seeds", "duplicate seed " + std::to_string(s));
        }
    }
    if (variants.empty()) fail("variants", "must list at least one variant");
    {
        std::set<std::string> seen;
        for (const auto& v : variants) {
            if (v != "vanilla" && v != "swa")
                fail("variants", "\"" + v + "\" is not one of vanilla, swa");
            if (!seen.insert(v).second) fail("variants", "duplicate variant \"" + v + "\"");
        }
    }
    if (parallelism < 1) fail("parallelism", "must be >= 1");

    if (data.source != "synthetic" && data.source != "sst2")
        fail("data.source", "\"" + data.source + "\" is not one of synthetic, sst2");
    if (data.source == "synthetic") {
        if (data.synthetic.n_train < 1) fail("data.synthetic.n_train", "must be >= 1");
        if (data.synthetic.n_dev < 1) fail("data.synthetic.n_dev", "must be >= 1");
        if (data.synthetic.n_test < 1) fail("data.synthetic.n_test", "must be >= 1");
    } else {
        if (data.sst2.train_tsv.empty()) fail("data.sst2.train_tsv", "path required");
        if (data.sst2.dev_tsv.empty()) fail("data.sst2.dev_tsv", "path required");
        if (data.sst2.test_tsv.empty()) fail("data.sst2.test_tsv", "path required");
        if (data.sst2.dictionary.empty()) fail("data.sst2.dictionary", "path required");
        if (data.sst2.sentiment_labels.empty()) fail("data.sst2.sentiment_labels", "path required");
    }
    if (data.min_freq < 1) fail("data.min_freq", "must be >= 1");
    if (data.name_min_count < 1) fail("data.name_min_count", "must be >= 1");

    if (train.epochs < 1) fail("train.epochs", "must be >= 1");
    if (train.batch_size < 1) fail("train.batch_size", "must be >= 1");
    if (!(train.peak_lr > 0.0)) fail("train.peak_lr", "must be > 0");
    if (train.warmup_frac < 0.0 || train.warmup_frac >= 1.0)
        fail("train.warmup_frac", "must be in [0, 1)");
    if (train.embedding_dim < 1) fail("train.embedding_dim", "must be >= 1");
    if (train.hidden_dim < 1) fail("train.hidden_dim", "must be >= 1");
    if (train.adam_beta1 < 0.0 || train.adam_beta1 >= 1.0)
        fail("train.adam_beta1", "must be in [0, 1)");
    if (train.adam_beta2 < 0.0 || train.adam_beta2 >= 1.0)
        fail("train.adam_beta2", "must be in [0, 1)");
    if (!(train.adam_eps > 0.0)) fail("train.adam_eps", "must be > 0");

    swa_config().validate(train.epochs);
    if (!(swa.constant_lr > 0.0)) fail("swa.constant_lr", "must be > 0");
    if (swa.select_lr) {
        if (swa.candidate_lrs.empty())
            fail("swa.candidate_lrs", "must be non-empty when swa.select_lr is true");
        for (double lr : swa.candidate_lrs)
            if (!(lr > 0.0)) fail("swa.candidate_lrs", "every candidate must be > 0");
    }

    suite.validate();

    if (stability.dir_categories != 2 && stability.dir_categories != 3)
        fail("stability.dir_categories", "must be 2 or 3");
}

std::string RunConfig::canonical_json() const {
    json root;
    root["seeds"] = seeds;
    root["variants"] = variants;
    root["parallelism"] = parallelism;
    root["out_dir"] = out_dir;
    root["lexicon_dir"] = lexicon_dir;
    root["data"] = data_json(data);
    root["train"] = json{{"epochs", train.epochs},
                         {"batch_size", train.batch_size},
                         {"peak_lr", train.peak_lr},
                         {"warmup_frac", train.warmup_frac},
                         {"embedding_dim", train.embedding_dim},
                         {"hidden_dim", train.hidden_dim},
                         {"adam_beta1", train.adam_beta1},
                         {"adam_beta2", train.adam_beta2},
                         {"adam_eps", train.adam_eps}};
    root["swa"] = json{{"cutoff_epoch", swa.cutoff_epoch},
                       {"constant_lr", swa.constant_lr},
                       {"candidate_lrs", swa.candidate_lrs},
                       {"select_lr", swa.select_lr}};
    root["suite"] = suite_json(suite);
    root["stability"] = json{{"misclassified_only", stability.misclassified_only},
                             {"dir_categories", stability.dir_categories}};
    return root.dump(2) + "\n";
}

std::string RunConfig::prepare_fingerprint() const {
    json root;
    root["lexicon_dir"] = lexicon_dir;
    root["data"] = data_json(data);
    root["suite"] = suite_json(suite);
    root["min_freq"] = data.min_freq;
    return root.dump();
}

textmodel::TrainConfig RunConfig::train_config(std::uint64_t seed, std::size_t n_train) const {
    textmodel::TrainConfig cfg;
    cfg.seed = seed;
    cfg.epochs = train.epochs;
    cfg.batch_size = train.batch_size;
    cfg.peak_lr = train.peak_lr;
    cfg.adam_beta1 = train.adam_beta1;
    cfg.adam_beta2 = train.adam_beta2;
    cfg.adam_eps = train.adam_eps;
    cfg.embedding_dim = train.embedding_dim;
    cfg.hidden_dim = train.hidden_dim;
    return textmodel::resolve_steps(cfg, n_train, train.warmup_frac);
}

swa::SwaConfig RunConfig::swa_config() const {
    swa::SwaConfig cfg;
    cfg.cutoff_epoch = swa.cutoff_epoch;
    cfg.constant_lr = swa.constant_lr;
    cfg.candidate_lrs = swa.candidate_lrs;
    return cfg;
}

RunConfig parse_run_config_json(const std::string& body) {
    json root;
    try {
        root = json::parse(body);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config: top level must be an object");

    RunConfig config;
    for (const auto& [key, value] : root.items()) {
        if (key == "seeds") config.seeds = get_seed_array(value, "seeds");
        else if (key == "variants") config.variants = get_string_list(value, "variants");
        else if (key == "parallelism") config.parallelism = get_int(value, "parallelism");
        else if (key == "out_dir") config.out_dir = get_string(value, "out_dir");
        else if (key == "lexicon_dir") config.lexicon_dir = get_string(value, "lexicon_dir");
        else if (key == "data") {
            if (!value.is_object()) fail("data", "expected an object");
            parse_data(value, config.data);
        } else if (key == "train") {
            if (!value.is_object()) fail("train", "expected an object");
            parse_train(value, config.train);
        } else if (key == "swa") {
            if (!value.is_object()) fail("swa", "expected an object");
            parse_swa(value, config.swa);
        } else if (key == "suite") {
            if (!value.is_object()) fail("suite", "expected an object");
            parse_suite(value, config.suite);
        } else if (key == "stability") {
            if (!value.is_object()) fail("stability", "expected an object");
            parse_stability(value, config.stability);
        } else {
            fail(key, "unknown field");
        }
    }
    return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::string body;
    try {
        body = read_file(path);
    } catch (const Error& e) {
        throw ConfigError("config: " + std::string(e.what()));
    }
    return parse_run_config_json(body);
}

std::vector<int> parse_seed_list(const std::string& spec) {
    std::vector<int> seeds;
    std::size_t start = 0;
    auto parse_int = [&](std::string_view part) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size())
            fail("seeds", "\"" + std::string(part) + "\" is not an integer");
        if (value < 0) fail("seeds", "seed " + std::string(part) + " is negative");
        return value;
    };
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        if (comma == std::string::npos) comma = spec.size();
        std::string_view part(spec.data() + start, comma - start);
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
        if (part.empty()) fail("seeds", "empty entry in seed list");
        std::size_t dots = part.find("..");
        if (dots != std::string_view::npos) {
            int lo = parse_int(part.substr(0, dots));
            int hi = parse_int(part.substr(dots + 2));
            if (lo > hi)
                fail("seeds", "range " + std::string(part) + " runs backwards");
            if (hi - lo >= 10000) fail("seeds", "range " + std::string(part) + " is too large");
            for (int s = lo; s <= hi; ++s) seeds.push_back(s);
        } else {
            seeds.push_back(parse_int(part));
        }
        start = comma + 1;
    }
    std::sort(seeds.begin(), seeds.end());
    for (std::size_t i = 1; i < seeds.size(); ++i)
        if (seeds[i] == seeds[i - 1])
            fail("seeds", "duplicate seed " + std::to_string(seeds[i]));
    return seeds;
}

RunConfig apply_overrides(RunConfig config, const CliOverrides& overrides) {
    if (overrides.seeds) config.seeds = parse_seed_list(*overrides.seeds);
    if (overrides.variant) {
        const std::string& v = *overrides.variant;
        if (v == "both") config.variants = {"vanilla", "swa"};
        else if (v == "vanilla" || v == "swa") config.variants = {v};
        else fail("variant", "\"" + v + "\" is not one of vanilla, swa, both");
    }
    if (overrides.parallelism) config.parallelism = *overrides.parallelism;
    if (overrides.out_dir) config.out_dir = *overrides.out_dir;
    if (config.out_dir.empty()) {
        if (const char* env = std::getenv("SEEDSTAB_OUT"); env != nullptr && *env != '\0')
            config.out_dir = env;
    }
    return config;
}

}  // namespace seedstab::pipeline
