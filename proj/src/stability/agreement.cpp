#include "stability/agreement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "common/errors.hpp"

namespace seedstab::stability {

void RatingMatrix::validate() const {
    if (categories.size() < 2) throw DataError("rating matrix needs >= 2 categories");
    if (n_raters < 2) throw DataError("rating matrix needs >= 2 raters");
    if (counts.size() != item_ids.size())
        throw DataError("rating matrix: counts/items length mismatch");
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i].size() != categories.size())
            throw DataError("rating matrix: row " + std::to_string(i) + " has wrong width");
        int sum = 0;
        for (int c : counts[i]) {
            if (c < 0) throw DataError("rating matrix: negative count in row " + std::to_string(i));
            sum += c;
        }
        if (sum != n_raters)
            throw DataError("rating matrix: row " + std::to_string(i) + " sums to " +
                            std::to_string(sum) + ", expected " + std::to_string(n_raters));
    }
}

double case_error_rate(const std::vector<checklist::CaseResult>& cases) {
    if (cases.empty()) throw DataError("case_error_rate: zero cases");
    std::size_t failed = 0;
    for (const auto& c : cases) failed += c.failed ? 1 : 0;
    return static_cast<double>(failed) / static_cast<double>(cases.size());
}

std::optional<double> overlap_ratio(const FailureSet& a, const FailureSet& b) {
    if (a.capability != b.capability)
        throw DataError("overlap_ratio: capability mismatch (" + a.capability + " vs " +
                        b.capability + ")");
    if (a.variant != b.variant)
        throw DataError("overlap_ratio: variant mismatch (" + a.variant + " vs " + b.variant +
                        ")");
    std::size_t intersection = 0;
    for (const auto& id : a.failing) intersection += b.failing.count(id);
    std::size_t unions = a.failing.size() + b.failing.size() - intersection;
    if (unions == 0) return std::nullopt;
    return static_cast<double>(intersection) / static_cast<double>(unions);
}

DistributionSummary summarize_distribution(std::vector<double> values) {
    DistributionSummary s;
    s.defined = static_cast<int>(values.size());
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    auto quantile = [&](double p) {
        double pos = p * static_cast<double>(values.size() - 1);
        std::size_t lo = static_cast<std::size_t>(pos);
        double frac = pos - static_cast<double>(lo);
        if (lo + 1 >= values.size()) return values.back();
        return values[lo] * (1.0 - frac) + values[lo + 1] * frac;
    };
    s.min = values.front();
    s.q1 = quantile(0.25);
    s.median = quantile(0.5);
    s.q3 = quantile(0.75);
    s.max = values.back();
    return s;
}

PairwiseOverlap pairwise_overlap(const std::vector<FailureSet>& sets) {
    if (sets.size() < 2) throw DataError("pairwise_overlap: needs >= 2 seeds");
    PairwiseOverlap out;
    for (const auto& s : sets) out.seeds.push_back(s.seed);
    std::size_t n = sets.size();
    out.matrix.assign(n, std::vector<std::optional<double>>(n));
    std::vector<double> defined;
    for (std::size_t i = 0; i < n; ++i) {
        out.matrix[i][i] = sets[i].failing.empty() ? std::optional<double>{} : 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            auto value = overlap_ratio(sets[i], sets[j]);
            out.matrix[i][j] = value;
            out.matrix[j][i] = value;
            out.pairs.push_back({sets[i].seed, sets[j].seed, value});
            if (value) defined.push_back(*value);
            else out.undefined_pairs += 1;
        }
    }
    out.summary = summarize_distribution(std::move(defined));
    return out;
}

FleissResult fleiss_kappa(const RatingMatrix& m) {
    m.validate();
    FleissResult r;
    r.n_items = m.item_ids.size();
    r.n_raters = m.n_raters;
    r.n_categories = m.categories.size();
    if (r.n_items == 0) return r;  // nothing rated: raw/adjusted stay undefined

    const double N = static_cast<double>(r.n_items);
    const double n = static_cast<double>(m.n_raters);

    std::vector<double> p_j(m.categories.size(), 0.0);
    double p_i_sum = 0.0;
    for (const auto& row : m.counts) {
        double sq = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            p_j[j] += row[j];
            sq += static_cast<double>(row[j]) * row[j];
        }
        p_i_sum += (sq - n) / (n * (n - 1.0));
    }
    for (auto& v : p_j) v /= N * n;

    r.p_bar = p_i_sum / N;
    r.p_e_bar = 0.0;
    for (double v : p_j) r.p_e_bar += v * v;

    if (r.p_e_bar >= 1.0) {
        r.raw = std::nullopt;  // chance agreement saturates the formula
        if (r.p_bar >= 1.0) r.adjusted = 1.0;
        return r;
    }
    double kappa = (r.p_bar - r.p_e_bar) / (1.0 - r.p_e_bar);
    r.raw = kappa;
    r.adjusted = kappa;
    return r;
}

std::vector<checklist::CaseResult> cases_from_records(
    const std::vector<checklist::EvalRecord>& records, const std::string& capability) {
    std::vector<checklist::CaseResult> cases;
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& rec : records) {
        if (rec.capability != capability) continue;
        auto it = index.find(rec.case_id);
        if (it == index.end()) {
            it = index.emplace(rec.case_id, cases.size()).first;
            cases.push_back({rec.case_id, capability, false, {}});
        }
        if (rec.failed()) {
            cases[it->second].failed = true;
            cases[it->second].failing_instance_ids.push_back(rec.instance_id);
        }
    }
    return cases;
}

RatingMatrix build_dev_matrix(
    const std::vector<std::pair<int, std::vector<int>>>& preds_by_seed,
    const std::vector<data::LabeledInstance>& dev, bool misclassified_only) {
    if (preds_by_seed.size() < 2) throw DataError("build_dev_matrix: needs >= 2 seeds");
    for (const auto& [seed, preds] : preds_by_seed)
        if (preds.size() != dev.size())
            throw DataError("build_dev_matrix: seed " + std::to_string(seed) + " has " +
                            std::to_string(preds.size()) + " predictions for " +
                            std::to_string(dev.size()) + " dev instances");

    RatingMatrix m;
    m.categories = {"correct", "incorrect"};
    m.n_raters = static_cast<int>(preds_by_seed.size());
    for (std::size_t i = 0; i < dev.size(); ++i) {
        int incorrect = 0;
        for (const auto& [seed, preds] : preds_by_seed)
            incorrect += preds[i] != dev[i].label ? 1 : 0;
        if (misclassified_only && incorrect == 0) continue;
        m.item_ids.push_back(dev[i].id);
        m.counts.push_back({m.n_raters - incorrect, incorrect});
    }
    return m;
}

RatingMatrix build_capability_matrix(
    const std::vector<std::pair<int, std::vector<checklist::EvalRecord>>>& records_by_seed,
    const checklist::Capability& capability, int dir_categories) {
    if (records_by_seed.size() < 2)
        throw DataError("build_capability_matrix: needs >= 2 seeds");
    if (dir_categories != 2 && dir_categories != 3)
        throw ConfigError("stability.dir_categories must be 2 or 3");

    using checklist::TestType;
    RatingMatrix m;
    m.n_raters = static_cast<int>(records_by_seed.size());
    switch (capability.test_type) {
        case TestType::mft: m.categories = {"correct", "incorrect"}; break;
        case TestType::inv: m.categories = {"flipped", "consistent"}; break;
        case TestType::dir:
            m.categories = dir_categories == 3
                               ? std::vector<std::string>{"up", "down", "within-tolerance"}
                               : std::vector<std::string>{"with-direction", "against-direction"};
            break;
    }

    // Category index per record.
    auto category_of = [&](const checklist::EvalRecord& rec) -> int {
        switch (capability.test_type) {
            case TestType::mft:
                if (!rec.has_mft_failed) return -1;
                return rec.mft_failed ? 1 : 0;
            case TestType::inv:
                if (!rec.has_flipped) return -1;  // original: not an item
                return rec.flipped ? 0 : 1;
            case TestType::dir:
                if (!rec.has_dir) return -1;
                if (dir_categories == 2) return rec.dir_failed ? 1 : 0;
                switch (rec.dir_direction) {
                    case checklist::DirDirection::up: return 0;
                    case checklist::DirDirection::down: return 1;
                    case checklist::DirDirection::within_tolerance: return 2;
                }
        }
        return -1;
    };

    // Item order from the first seed's records.
    std::unordered_map<std::string, std::size_t> item_index;
    for (const auto& rec : records_by_seed.front().second) {
        if (rec.capability != capability.slug)
            throw DataError("build_capability_matrix: record " + rec.instance_id +
                            " is from capability \"" + rec.capability + "\", expected \"" +
                            capability.slug + "\"");
        if (category_of(rec) < 0) continue;
        if (item_index.count(rec.instance_id))
            throw DataError("build_capability_matrix: duplicate instance " + rec.instance_id);
        item_index.emplace(rec.instance_id, m.item_ids.size());
        m.item_ids.push_back(rec.instance_id);
    }
    m.counts.assign(m.item_ids.size(), std::vector<int>(m.categories.size(), 0));

    for (const auto& [seed, records] : records_by_seed) {
        std::size_t rated = 0;
        for (const auto& rec : records) {
            if (rec.capability != capability.slug)
                throw DataError("build_capability_matrix: record " + rec.instance_id +
                                " is from capability \"" + rec.capability + "\", expected \"" +
                                capability.slug + "\"");
            int cat = category_of(rec);
            if (cat < 0) continue;
            auto it = item_index.find(rec.instance_id);
            if (it == item_index.end())
                throw DataError("build_capability_matrix: seed " + std::to_string(seed) +
                                " rated unknown instance " + rec.instance_id);
            m.counts[it->second][static_cast<std::size_t>(cat)] += 1;
            rated += 1;
        }
        if (rated != m.item_ids.size())
            throw DataError("build_capability_matrix: seed " + std::to_string(seed) +
                            " rated " + std::to_string(rated) + " of " +
                            std::to_string(m.item_ids.size()) + " instances of \"" +
                            capability.slug + "\"");
    }
    return m;
}

}  // namespace seedstab::stability
