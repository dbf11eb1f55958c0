#include "seedstab/seedstab.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "common/errors.hpp"
#include "pipeline/pipeline.hpp"
#include "pipeline/run_config.hpp"
#include "stability/agreement.hpp"
#include "textmodel/schedule.hpp"

using seedstab::Error;
using seedstab::ErrorKind;

struct seedstab_run {
    seedstab::pipeline::RunConfig config;
    std::string error;
    std::string summary;
};

namespace {

seedstab_status status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::config: return SEEDSTAB_ERR_CONFIG;
        case ErrorKind::data: return SEEDSTAB_ERR_DATA;
        case ErrorKind::training: return SEEDSTAB_ERR_TRAINING;
        case ErrorKind::evaluation: return SEEDSTAB_ERR_EVAL;
        case ErrorKind::internal: return SEEDSTAB_ERR_INTERNAL;
    }
    return SEEDSTAB_ERR_INTERNAL;
}

template <typename F>
seedstab_status guarded(seedstab_run* run, F&& body) {
    if (run == nullptr) return SEEDSTAB_ERR_CONFIG;
    try {
        body();
        run->error.clear();
        return SEEDSTAB_OK;
    } catch (const Error& e) {
        run->error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        run->error = e.what();
        return SEEDSTAB_ERR_INTERNAL;
    } catch (...) {
        run->error = "unknown error";
        return SEEDSTAB_ERR_INTERNAL;
    }
}

// The env fallback for out_dir lives in apply_overrides; commands always go
// through here so the C and CLI surfaces resolve configs identically.
seedstab::pipeline::RunConfig resolved(const seedstab_run* run) {
    return seedstab::pipeline::apply_overrides(run->config, {});
}

nlohmann::json summary_json(const seedstab::pipeline::PrepareSummary& s) {
    nlohmann::json j{{"n_train", s.n_train},
                     {"n_dev", s.n_dev},
                     {"n_test", s.n_test},
                     {"vocab_size", s.vocab_size},
                     {"positive_names", s.positive_names},
                     {"negative_names", s.negative_names},
                     {"capabilities", s.capabilities},
                     {"suite_instances", s.suite_instances}};
    if (s.dropped_band > 0 || s.unmatched > 0) {
        j["dropped_band"] = s.dropped_band;
        j["unmatched"] = s.unmatched;
    }
    return j;
}

nlohmann::json summary_json(const seedstab::pipeline::TrainSummary& s) {
    nlohmann::json j{{"runs", s.runs.size()}, {"failed", s.n_failed}};
    if (s.n_failed > 0) {
        auto failed = nlohmann::json::array();
        for (const auto& r : s.runs)
            if (!r.ok)
                failed.push_back(nlohmann::json{
                    {"seed", r.seed}, {"variant", r.variant}, {"error", r.error}});
        j["failures"] = failed;
    }
    return j;
}

nlohmann::json summary_json(const seedstab::pipeline::EvalSummary& s) {
    return {{"models", s.n_models}, {"records_per_model", s.records_per_model}};
}

nlohmann::json summary_json(const seedstab::pipeline::ReportSummary& s) {
    return {{"flagged_seeds", s.flagged_seeds},
            {"filtered_report", s.wrote_filtered},
            {"notices", s.notices}};
}

nlohmann::json summary_json(const seedstab::pipeline::AllSummary& s) {
    return {{"prepare", summary_json(s.prepare)},
            {"train", summary_json(s.train)},
            {"eval", summary_json(s.eval)},
            {"report", summary_json(s.report)}};
}

void copy_error(const std::string& msg, char* err, size_t err_len) {
    if (err == nullptr || err_len == 0) return;
    const size_t n = std::min(err_len - 1, msg.size());
    std::memcpy(err, msg.data(), n);
    err[n] = '\0';
}

}  // namespace

extern "C" {

const char* seedstab_version(void) { return "0.1.0"; }

seedstab_run* seedstab_run_new(void) { return new (std::nothrow) seedstab_run(); }

seedstab_run* seedstab_run_new_from_json(const char* config_json, char* err, size_t err_len) {
    if (config_json == nullptr) {
        copy_error("config_json is NULL", err, err_len);
        return nullptr;
    }
    try {
        auto config = seedstab::pipeline::parse_run_config_json(config_json);
        config.validate();
        auto* run = new seedstab_run();
        run->config = std::move(config);
        return run;
    } catch (const std::exception& e) {
        copy_error(e.what(), err, err_len);
        return nullptr;
    }
}

void seedstab_run_free(seedstab_run* run) { delete run; }

seedstab_status seedstab_run_set(seedstab_run* run, const char* field, const char* value) {
    return guarded(run, [&] {
        if (field == nullptr || value == nullptr)
            throw seedstab::ConfigError("seedstab_run_set: field and value must be non-NULL");
        const std::string name(field);
        seedstab::pipeline::CliOverrides overrides;
        if (name == "out_dir") {
            run->config.out_dir = value;
        } else if (name == "lexicon_dir") {
            run->config.lexicon_dir = value;
        } else if (name == "parallelism") {
            try {
                run->config.parallelism = std::stoi(value);
            } catch (const std::exception&) {
                throw seedstab::ConfigError("seedstab_run_set: parallelism must be an integer");
            }
        } else if (name == "seeds") {
            overrides.seeds = value;
            run->config = seedstab::pipeline::apply_overrides(run->config, overrides);
        } else if (name == "variant") {
            overrides.variant = value;
            run->config = seedstab::pipeline::apply_overrides(run->config, overrides);
        } else {
            throw seedstab::ConfigError("seedstab_run_set: unknown field \"" + name + "\"");
        }
    });
}

const char* seedstab_run_error(const seedstab_run* run) {
    return run == nullptr ? "run handle is NULL" : run->error.c_str();
}

const char* seedstab_run_last_summary(const seedstab_run* run) {
    return run == nullptr ? "" : run->summary.c_str();
}

seedstab_status seedstab_run_prepare(seedstab_run* run) {
    return guarded(run, [&] {
        run->summary = summary_json(seedstab::pipeline::cmd_prepare(resolved(run))).dump();
    });
}

seedstab_status seedstab_run_train(seedstab_run* run) {
    return guarded(run, [&] {
        run->summary = summary_json(seedstab::pipeline::cmd_train(resolved(run))).dump();
    });
}

seedstab_status seedstab_run_eval(seedstab_run* run) {
    return guarded(run, [&] {
        run->summary = summary_json(seedstab::pipeline::cmd_eval(resolved(run))).dump();
    });
}

seedstab_status seedstab_run_report(seedstab_run* run) {
    return guarded(run, [&] {
        run->summary = summary_json(seedstab::pipeline::cmd_report(resolved(run))).dump();
    });
}

seedstab_status seedstab_run_all(seedstab_run* run) {
    return guarded(run, [&] {
        run->summary = summary_json(seedstab::pipeline::cmd_all(resolved(run))).dump();
    });
}

seedstab_status seedstab_fleiss_kappa(const int32_t* counts, size_t n_items, size_t n_categories,
                                      int32_t n_raters, double* kappa, double* raw,
                                      int* raw_defined) {
    if (counts == nullptr || kappa == nullptr) return SEEDSTAB_ERR_CONFIG;
    if (n_items < 1 || n_categories < 2 || n_raters < 2) return SEEDSTAB_ERR_CONFIG;
    try {
        seedstab::stability::RatingMatrix m;
        m.n_raters = n_raters;
        m.item_ids.reserve(n_items);
        m.counts.reserve(n_items);
        for (size_t j = 0; j < n_categories; ++j) m.categories.push_back(std::to_string(j));
        for (size_t i = 0; i < n_items; ++i) {
            m.item_ids.push_back(std::to_string(i));
            std::vector<int> row(n_categories);
            for (size_t j = 0; j < n_categories; ++j)
                row[j] = counts[i * n_categories + j];
            m.counts.push_back(std::move(row));
        }
        const auto result = seedstab::stability::fleiss_kappa(m);
        if (!result.adjusted) return SEEDSTAB_ERR_INTERNAL;
        *kappa = *result.adjusted;
        if (raw_defined != nullptr) *raw_defined = result.raw.has_value() ? 1 : 0;
        if (raw != nullptr && result.raw) *raw = *result.raw;
        return SEEDSTAB_OK;
    } catch (const Error& e) {
        return status_of(e.kind());
    } catch (...) {
        return SEEDSTAB_ERR_INTERNAL;
    }
}

seedstab_status seedstab_overlap_ratio(const char* const* ids_a, size_t n_a,
                                       const char* const* ids_b, size_t n_b, double* ratio,
                                       int* defined) {
    if (ratio == nullptr || defined == nullptr) return SEEDSTAB_ERR_CONFIG;
    if ((ids_a == nullptr && n_a > 0) || (ids_b == nullptr && n_b > 0))
        return SEEDSTAB_ERR_CONFIG;
    try {
        seedstab::stability::FailureSet a, b;
        b.seed = 1;
        for (size_t i = 0; i < n_a; ++i) {
            if (ids_a[i] == nullptr) return SEEDSTAB_ERR_CONFIG;
            a.failing.insert(ids_a[i]);
        }
        for (size_t i = 0; i < n_b; ++i) {
            if (ids_b[i] == nullptr) return SEEDSTAB_ERR_CONFIG;
            b.failing.insert(ids_b[i]);
        }
        const auto value = seedstab::stability::overlap_ratio(a, b);
        *defined = value.has_value() ? 1 : 0;
        if (value) *ratio = *value;
        return SEEDSTAB_OK;
    } catch (const Error& e) {
        return status_of(e.kind());
    } catch (...) {
        return SEEDSTAB_ERR_INTERNAL;
    }
}

double seedstab_lr_warmup_linear_decay(long step, long warmup_steps, long total_steps,
                                       double peak_lr) {
    try {
        const auto schedule =
            seedstab::textmodel::LrSchedule::warmup_linear(warmup_steps, total_steps, peak_lr);
        return seedstab::textmodel::lr_at(schedule, step);
    } catch (...) {
        return std::nan("");
    }
}

double seedstab_lr_warmup_then_constant(long step, long warmup_steps, long total_steps,
                                        double peak_lr, long cutoff_step, double constant_lr) {
    try {
        const auto schedule = seedstab::textmodel::LrSchedule::warmup_constant(
            warmup_steps, total_steps, peak_lr, cutoff_step, constant_lr);
        return seedstab::textmodel::lr_at(schedule, step);
    } catch (...) {
        return std::nan("");
    }
}

}  // extern "C"
