#ifndef SEEDSTAB_PIPELINE_PIPELINE_HPP
#define SEEDSTAB_PIPELINE_PIPELINE_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "pipeline/run_config.hpp"

namespace seedstab::pipeline {

// Filesystem layout under the run's output directory.
struct Layout {
    std::filesystem::path out;

    explicit Layout(const std::string& out_dir);  // ConfigError when unset

    std::filesystem::path prepared() const { return out / "prepared"; }
    std::filesystem::path train_jsonl() const { return prepared() / "train.jsonl"; }
    std::filesystem::path dev_jsonl() const { return prepared() / "dev.jsonl"; }
    std::filesystem::path test_jsonl() const { return prepared() / "test.jsonl"; }
    std::filesystem::path lexicons_dir() const { return prepared() / "lexicons"; }
    std::filesystem::path vocab_txt() const { return prepared() / "vocab.txt"; }
    std::filesystem::path names_positive_txt() const { return prepared() / "names_positive.txt"; }
    std::filesystem::path names_negative_txt() const { return prepared() / "names_negative.txt"; }
    std::filesystem::path name_polarity_csv() const { return prepared() / "name_polarity.csv"; }
    std::filesystem::path suite_instances_jsonl() const {
        return prepared() / "suite_instances.jsonl";
    }
    std::filesystem::path suite_manifest_json() const { return prepared() / "suite_manifest.json"; }
    std::filesystem::path prepare_info_json() const { return prepared() / "prepare_info.json"; }
    std::filesystem::path config_snapshot_json() const { return prepared() / "config.json"; }

    std::filesystem::path models() const { return out / "models"; }
    std::filesystem::path weights_file(int seed, const std::string& variant,
                                       const std::string& epoch) const;
    std::filesystem::path train_log_json(int seed, const std::string& variant) const;
    std::filesystem::path failures_json() const { return models() / "failures.json"; }

    std::filesystem::path evals() const { return out / "evals"; }
    std::filesystem::path eval_jsonl(int seed, const std::string& variant) const;

    std::filesystem::path report_root() const { return out / "report"; }
    std::filesystem::path report_full() const { return report_root() / "full"; }
    std::filesystem::path report_filtered() const { return report_root() / "filtered"; }
};

struct PrepareSummary {
    int n_train = 0;
    int n_dev = 0;
    int n_test = 0;
    int vocab_size = 0;
    int positive_names = 0;
    int negative_names = 0;
    int capabilities = 0;
    std::size_t suite_instances = 0;
    int dropped_band = 0;  // SST-2 source only
    int unmatched = 0;     // SST-2 source only
};

struct RunOutcome {
    int seed = 0;
    std::string variant;
    bool ok = false;
    double final_dev_accuracy = 0.0;
    std::string error;  // set when !ok
};

struct TrainSummary {
    std::vector<RunOutcome> runs;  // (seed asc, vanilla before swa)
    int n_failed = 0;
};

struct EvalSummary {
    int n_models = 0;
    std::size_t records_per_model = 0;  // dev + suite instances
};

struct ReportSummary {
    std::vector<int> flagged_seeds;
    bool wrote_filtered = false;
    std::vector<std::string> notices;
};

struct AllSummary {
    PrepareSummary prepare;
    TrainSummary train;
    EvalSummary eval;
    ReportSummary report;
};

// Materializes corpus splits, lexicons, vocab, mined name lists and the
// behavioral suite under <out>/prepared. Idempotent for a fixed config.
PrepareSummary cmd_prepare(const RunConfig& config);

// Trains every (seed, variant) pair, writing per-epoch snapshot files, final
// weights and a JSON training log per run. Individual run failures are
// isolated and recorded; only a sweep with zero survivors throws.
TrainSummary cmd_train(const RunConfig& config);

// Scores every trained model on the dev set plus the full suite, one JSONL
// file per (seed, variant).
EvalSummary cmd_eval(const RunConfig& config);

// Composes the stability report (JSON + CSVs + summary) under
// <out>/report/full, plus <out>/report/filtered with outlier seeds dropped
// whenever the dev-accuracy rule flags any.
ReportSummary cmd_report(const RunConfig& config);

AllSummary cmd_all(const RunConfig& config);

}  // namespace seedstab::pipeline

#endif
