#ifndef SEEDSTAB_PIPELINE_RUN_CONFIG_HPP
#define SEEDSTAB_PIPELINE_RUN_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "checklist/suite.hpp"
#include "swa/swa.hpp"
#include "textmodel/train.hpp"

namespace seedstab::pipeline {

struct SyntheticSpec {
    std::uint64_t seed = 2024;
    int n_train = 2000;
    int n_dev = 400;
    int n_test = 400;
};

struct Sst2Spec {
    std::string train_tsv;
    std::string dev_tsv;
    std::string test_tsv;
    std::string dictionary;
    std::string sentiment_labels;
};

struct DataConfig {
    std::string source = "synthetic";  // synthetic | sst2
    SyntheticSpec synthetic;
    Sst2Spec sst2;
    int min_freq = 1;
    int name_min_count = 2;
    std::vector<std::string> name_exclude;
};

struct TrainSection {
    int epochs = 5;
    int batch_size = 32;
    double peak_lr = 1e-2;
    double warmup_frac = 0.06;
    int embedding_dim = 16;
    int hidden_dim = 32;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
};

struct SwaSection {
    int cutoff_epoch = 2;
    double constant_lr = 6e-3;
    std::vector<double> candidate_lrs = {6e-3, 7.5e-3};
    bool select_lr = true;  // per-seed dev selection over candidate_lrs
};

struct StabilitySection {
    bool misclassified_only = false;
    int dir_categories = 3;
};

struct RunConfig {
    std::vector<int> seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<std::string> variants = {"vanilla", "swa"};
    int parallelism = 1;
    std::string out_dir;      // empty -> SEEDSTAB_OUT env fallback
    std::string lexicon_dir;  // empty -> built-in lexicons
    DataConfig data;
    TrainSection train;
    SwaSection swa;
    checklist::SuiteConfig suite;
    StabilitySection stability;

    void validate() const;  // throws ConfigError naming the offending field

    // Stable serialization (sorted keys) of the whole config.
    std::string canonical_json() const;
    // Same, restricted to the fields that shape the prepared/ directory.
    std::string prepare_fingerprint() const;

    textmodel::TrainConfig train_config(std::uint64_t seed, std::size_t n_train) const;
    swa::SwaConfig swa_config() const;
};

RunConfig parse_run_config_json(const std::string& body);
RunConfig load_run_config(const std::filesystem::path& path);

// "0,1,5", "0..9" and mixes of both; duplicates are rejected, output sorted.
std::vector<int> parse_seed_list(const std::string& spec);

struct CliOverrides {
    std::optional<std::string> seeds;    // raw --seeds value
    std::optional<std::string> variant;  // vanilla | swa | both
    std::optional<int> parallelism;
    std::optional<std::string> out_dir;  // --out
};

// Applies flag overrides, then falls back to SEEDSTAB_OUT for a still-unset
// output directory. Does not validate.
RunConfig apply_overrides(RunConfig config, const CliOverrides& overrides);

}  // namespace seedstab::pipeline

#endif
