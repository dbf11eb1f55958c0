#include "stability/report.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "common/errors.hpp"
#include "common/fsio.hpp"

namespace seedstab::stability {

namespace {

using nlohmann::json;

json to_json(const FleissResult& r) {
    json j;
    j["n_items"] = r.n_items;
    j["n_raters"] = r.n_raters;
    j["n_categories"] = r.n_categories;
    j["p_bar"] = r.p_bar;
    j["p_e_bar"] = r.p_e_bar;
    j["kappa"] = r.adjusted ? json(*r.adjusted) : json(nullptr);
    j["kappa_raw"] = r.raw ? json(*r.raw) : json(nullptr);
    return j;
}

json to_json(const DistributionSummary& s) {
    json j;
    j["defined"] = s.defined;
    j["min"] = s.min ? json(*s.min) : json(nullptr);
    j["q1"] = s.q1 ? json(*s.q1) : json(nullptr);
    j["median"] = s.median ? json(*s.median) : json(nullptr);
    j["q3"] = s.q3 ? json(*s.q3) : json(nullptr);
    j["max"] = s.max ? json(*s.max) : json(nullptr);
    return j;
}

std::string csv_opt(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string{};
}

struct DevStats {
    std::map<int, double> accuracy;            // seed -> dev accuracy
    FleissResult kappa_all;
    FleissResult kappa_misclassified;
    DistributionSummary accuracy_summary;
    std::vector<int> flagged;                  // > 3 IQRs below median
};

}  // namespace

ComposedReport compose_report(const ReportInputs& inputs,
                              const std::vector<int>& exclude_seeds) {
    std::vector<int> seeds;
    for (int s : inputs.seeds)
        if (std::find(exclude_seeds.begin(), exclude_seeds.end(), s) == exclude_seeds.end())
            seeds.push_back(s);
    std::sort(seeds.begin(), seeds.end());
    if (seeds.size() < 2) throw DataError("report: needs >= 2 seeds after exclusions");

    std::vector<std::string> variants;
    for (const char* v : {"vanilla", "swa"})
        if (std::find(inputs.variants.begin(), inputs.variants.end(), v) !=
            inputs.variants.end())
            variants.push_back(v);
    if (variants.empty()) throw ConfigError("report: no variants selected");
    bool both = variants.size() == 2;

    for (const auto& variant : variants) {
        auto sv = inputs.suite_records.find(variant);
        auto dv = inputs.dev_records.find(variant);
        for (int seed : seeds) {
            if (sv == inputs.suite_records.end() || !sv->second.count(seed))
                throw DataError("report: missing suite eval records for variant " + variant +
                                ", seed " + std::to_string(seed));
            if (dv == inputs.dev_records.end() || !dv->second.count(seed))
                throw DataError("report: missing dev eval records for variant " + variant +
                                ", seed " + std::to_string(seed));
        }
    }

    ComposedReport out;
    json root;
    root["schema_version"] = 1;
    root["seeds"] = seeds;
    root["variants"] = variants;
    root["excluded_seeds"] = exclude_seeds;
    root["config"]["misclassified_only"] = inputs.misclassified_only;
    root["config"]["dir_categories"] = inputs.dir_categories;

    // ---- Dev set: accuracy, outlier flags, kappa per variant. ----
    std::map<std::string, DevStats> dev_stats;
    std::set<int> flagged_union;
    for (const auto& variant : variants) {
        DevStats stats;
        const auto& per_seed = inputs.dev_records.at(variant);

        // Instance order and labels come from the first seed's records.
        const auto& first = per_seed.at(seeds.front());
        std::vector<data::LabeledInstance> dev;
        dev.reserve(first.size());
        for (const auto& rec : first) {
            if (!rec.has_mft_failed)
                throw DataError("report: dev record " + rec.instance_id + " lacks a verdict");
            dev.push_back({rec.instance_id, "", rec.mft_failed ? 1 - rec.pred : rec.pred});
        }

        std::vector<std::pair<int, std::vector<int>>> preds_by_seed;
        for (int seed : seeds) {
            const auto& records = per_seed.at(seed);
            if (records.size() != dev.size())
                throw DataError("report: variant " + variant + " seed " + std::to_string(seed) +
                                " has " + std::to_string(records.size()) + " dev records, expected " +
                                std::to_string(dev.size()));
            std::vector<int> preds(records.size());
            std::size_t correct = 0;
            for (std::size_t i = 0; i < records.size(); ++i) {
                if (records[i].instance_id != dev[i].id)
                    throw DataError("report: variant " + variant + " seed " +
                                    std::to_string(seed) + " dev records out of order at " +
                                    records[i].instance_id);
                preds[i] = records[i].pred;
                correct += records[i].mft_failed ? 0 : 1;
            }
            stats.accuracy[seed] =
                static_cast<double>(correct) / static_cast<double>(records.size());
            preds_by_seed.emplace_back(seed, std::move(preds));
        }

        std::vector<double> accs;
        for (const auto& [seed, acc] : stats.accuracy) accs.push_back(acc);
        stats.accuracy_summary = summarize_distribution(accs);
        double median = *stats.accuracy_summary.median;
        double iqr = *stats.accuracy_summary.q3 - *stats.accuracy_summary.q1;
        for (const auto& [seed, acc] : stats.accuracy)
            if (acc < median - 3.0 * iqr) {
                stats.flagged.push_back(seed);
                flagged_union.insert(seed);
            }

        stats.kappa_all = fleiss_kappa(build_dev_matrix(preds_by_seed, dev, false));
        auto misclassified = build_dev_matrix(preds_by_seed, dev, true);
        if (!misclassified.item_ids.empty())
            stats.kappa_misclassified = fleiss_kappa(misclassified);
        dev_stats.emplace(variant, std::move(stats));
    }
    out.flagged_seeds.assign(flagged_union.begin(), flagged_union.end());

    {
        json dev_json;
        for (const auto& variant : variants) {
            const auto& stats = dev_stats.at(variant);
            json acc;
            for (const auto& [seed, a] : stats.accuracy) acc[std::to_string(seed)] = a;
            dev_json["accuracy"][variant] = std::move(acc);
            dev_json["accuracy_summary"][variant] = to_json(stats.accuracy_summary);
            dev_json["kappa"][variant]["all_instances"] = to_json(stats.kappa_all);
            dev_json["kappa"][variant]["misclassified_only"] = to_json(stats.kappa_misclassified);
            dev_json["outliers"][variant] = stats.flagged;
        }
        if (both) {
            auto diff = [&](const FleissResult& a, const FleissResult& b) -> json {
                if (a.adjusted && b.adjusted) return json(*b.adjusted - *a.adjusted);
                return json(nullptr);
            };
            dev_json["kappa"]["difference"]["all_instances"] =
                diff(dev_stats.at("vanilla").kappa_all, dev_stats.at("swa").kappa_all);
            dev_json["kappa"]["difference"]["misclassified_only"] =
                diff(dev_stats.at("vanilla").kappa_misclassified,
                     dev_stats.at("swa").kappa_misclassified);
        }
        root["dev"] = std::move(dev_json);
        root["outlier_rule"] = "dev accuracy more than 3 interquartile ranges below the seed median";
        root["flagged_seeds"] = out.flagged_seeds;
    }

    // ---- Per-capability statistics. ----
    std::string error_csv = "capability,variant,seed,error_rate\n";
    std::string overlap_csv = "capability,variant,seed_a,seed_b,overlap\n";
    std::string kappa_csv =
        "capability,test_type,vanilla_kappa,swa_kappa,difference,vanilla_kappa_raw,swa_kappa_raw\n";

    {
        auto dev_kappa_of = [&](const std::string& variant) -> const FleissResult& {
            const auto& stats = dev_stats.at(variant);
            return inputs.misclassified_only ? stats.kappa_misclassified : stats.kappa_all;
        };
        std::string vk, sk, vkr, skr, dk;
        if (std::find(variants.begin(), variants.end(), "vanilla") != variants.end()) {
            vk = csv_opt(dev_kappa_of("vanilla").adjusted);
            vkr = csv_opt(dev_kappa_of("vanilla").raw);
        }
        if (std::find(variants.begin(), variants.end(), "swa") != variants.end()) {
            sk = csv_opt(dev_kappa_of("swa").adjusted);
            skr = csv_opt(dev_kappa_of("swa").raw);
        }
        if (both && dev_kappa_of("vanilla").adjusted && dev_kappa_of("swa").adjusted)
            dk = format_double(*dev_kappa_of("swa").adjusted - *dev_kappa_of("vanilla").adjusted);
        kappa_csv += "dev,DEV," + vk + "," + sk + "," + dk + "," + vkr + "," + skr + "\n";
    }

    json caps_json = json::array();
    for (const auto& cap : inputs.capabilities) {
        if (cap.n_cases == 0) {
            out.notices.push_back("capability \"" + cap.name + "\" omitted: no cases materialized");
            continue;
        }

        json cj;
        cj["slug"] = cap.slug;
        cj["name"] = cap.name;
        cj["test_type"] = checklist::to_string(cap.test_type);
        cj["direction"] = checklist::to_string(cap.direction);
        cj["n_cases"] = cap.n_cases;
        cj["m_instances"] = cap.m_instances;
        cj["unvalidated"] = cap.unvalidated;

        std::map<std::string, FleissResult> kappa_by_variant;
        for (const auto& variant : variants) {
            // Filter each seed's records down to this capability once.
            std::vector<std::pair<int, std::vector<checklist::EvalRecord>>> records_by_seed;
            for (int seed : seeds) {
                const auto& all = inputs.suite_records.at(variant).at(seed);
                std::vector<checklist::EvalRecord> filtered;
                for (const auto& rec : all)
                    if (rec.capability == cap.slug) filtered.push_back(rec);
                records_by_seed.emplace_back(seed, std::move(filtered));
            }

            json rates_json;
            std::vector<double> rates;
            std::vector<FailureSet> failure_sets;
            long long dir_up = 0, dir_down = 0, dir_within = 0;
            for (const auto& [seed, records] : records_by_seed) {
                auto cases = cases_from_records(records, cap.slug);
                if (cases.empty())
                    throw DataError("report: variant " + variant + " seed " +
                                    std::to_string(seed) + " has no cases for \"" + cap.slug +
                                    "\"");
                double rate = case_error_rate(cases);
                rates_json[std::to_string(seed)] = rate;
                rates.push_back(rate);

                FailureSet fs;
                fs.seed = seed;
                fs.variant = variant;
                fs.capability = cap.slug;
                for (const auto& rec : records) {
                    if (rec.failed()) fs.failing.insert(rec.instance_id);
                    if (rec.has_dir) {
                        if (rec.dir_direction == checklist::DirDirection::up) ++dir_up;
                        else if (rec.dir_direction == checklist::DirDirection::down) ++dir_down;
                        else ++dir_within;
                    }
                }
                failure_sets.push_back(std::move(fs));
            }

            cj["error_rates"][variant] = std::move(rates_json);
            cj["error_rate_summary"][variant] = to_json(summarize_distribution(rates));

            auto overlap = pairwise_overlap(failure_sets);
            json pairs = json::array();
            for (const auto& pair : overlap.pairs) {
                json pj;
                pj["seed_a"] = pair.seed_a;
                pj["seed_b"] = pair.seed_b;
                pj["overlap"] = pair.value ? json(*pair.value) : json(nullptr);
                pairs.push_back(std::move(pj));
                overlap_csv += cap.slug + "," + variant + "," + std::to_string(pair.seed_a) +
                               "," + std::to_string(pair.seed_b) + "," + csv_opt(pair.value) +
                               "\n";
            }
            cj["overlap"][variant]["pairs"] = std::move(pairs);
            cj["overlap"][variant]["undefined_pairs"] = overlap.undefined_pairs;
            cj["overlap"][variant]["summary"] = to_json(overlap.summary);

            if (cap.test_type == checklist::TestType::dir) {
                cj["dir_tallies"][variant]["up"] = dir_up;
                cj["dir_tallies"][variant]["down"] = dir_down;
                cj["dir_tallies"][variant]["within_tolerance"] = dir_within;
            }

            auto matrix = build_capability_matrix(records_by_seed, cap, inputs.dir_categories);
            auto fleiss = fleiss_kappa(matrix);
            cj["kappa"][variant] = to_json(fleiss);
            kappa_by_variant.emplace(variant, fleiss);

            for (int seed : seeds)
                error_csv += cap.slug + "," + variant + "," + std::to_string(seed) + "," +
                             format_double(cj["error_rates"][variant][std::to_string(seed)]
                                               .get<double>()) +
                             "\n";
        }

        std::string vk, sk, vkr, skr, dk;
        if (kappa_by_variant.count("vanilla")) {
            vk = csv_opt(kappa_by_variant.at("vanilla").adjusted);
            vkr = csv_opt(kappa_by_variant.at("vanilla").raw);
        }
        if (kappa_by_variant.count("swa")) {
            sk = csv_opt(kappa_by_variant.at("swa").adjusted);
            skr = csv_opt(kappa_by_variant.at("swa").raw);
        }
        if (both) {
            const auto& v = kappa_by_variant.at("vanilla");
            const auto& s = kappa_by_variant.at("swa");
            if (v.adjusted && s.adjusted) {
                cj["kappa"]["difference"] = *s.adjusted - *v.adjusted;
                dk = format_double(*s.adjusted - *v.adjusted);
            } else {
                cj["kappa"]["difference"] = nullptr;
            }
        }
        kappa_csv += cap.slug + "," + checklist::to_string(cap.test_type) + "," + vk + "," +
                     sk + "," + dk + "," + vkr + "," + skr + "\n";
        caps_json.push_back(std::move(cj));
    }
    root["capabilities"] = std::move(caps_json);
    root["notices"] = out.notices;

    // ---- Human summary. ----
    std::ostringstream txt;
    txt << "stability report\n";
    txt << "seeds:";
    for (int s : seeds) txt << " " << s;
    txt << " (n=" << seeds.size() << ")\n";
    txt << "variants:";
    for (const auto& v : variants) txt << " " << v;
    txt << "\n";
    if (!exclude_seeds.empty()) {
        txt << "excluded seeds:";
        for (int s : exclude_seeds) txt << " " << s;
        txt << "\n";
    }
    txt << "flagged outlier seeds:";
    if (out.flagged_seeds.empty()) txt << " none";
    else
        for (int s : out.flagged_seeds) txt << " " << s;
    txt << "\n\n";
    for (const auto& variant : variants) {
        const auto& stats = dev_stats.at(variant);
        txt << "dev accuracy (" << variant << "): median="
            << format_double(*stats.accuracy_summary.median)
            << " min=" << format_double(*stats.accuracy_summary.min)
            << " max=" << format_double(*stats.accuracy_summary.max) << "\n";
    }
    auto kappa_text = [](const FleissResult& r) {
        return r.adjusted ? format_double(*r.adjusted) : std::string("undefined");
    };
    for (const auto& variant : variants) {
        const auto& stats = dev_stats.at(variant);
        txt << "dev kappa (" << variant
            << "): all_instances=" << kappa_text(stats.kappa_all)
            << " misclassified_only=" << kappa_text(stats.kappa_misclassified) << "\n";
    }
    txt << "\nper-capability kappa (vanilla | swa | difference):\n";
    for (const auto& cj : root["capabilities"]) {
        std::string v = "-", s = "-", d = "-";
        if (cj["kappa"].contains("vanilla") && !cj["kappa"]["vanilla"]["kappa"].is_null())
            v = format_double(cj["kappa"]["vanilla"]["kappa"].get<double>());
        if (cj["kappa"].contains("swa") && !cj["kappa"]["swa"]["kappa"].is_null())
            s = format_double(cj["kappa"]["swa"]["kappa"].get<double>());
        if (cj["kappa"].contains("difference") && !cj["kappa"]["difference"].is_null())
            d = format_double(cj["kappa"]["difference"].get<double>());
        txt << "  " << cj["name"].get<std::string>() << ": " << v << " | " << s << " | " << d
            << "\n";
    }
    for (const auto& notice : out.notices) txt << "notice: " << notice << "\n";

    out.report_json = root.dump(2) + "\n";
    out.error_rates_csv = std::move(error_csv);
    out.overlap_pairs_csv = std::move(overlap_csv);
    out.kappa_csv = std::move(kappa_csv);
    out.summary_txt = txt.str();
    return out;
}

}  // namespace seedstab::stability
