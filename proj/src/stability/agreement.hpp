#ifndef SEEDSTAB_STABILITY_AGREEMENT_HPP
#define SEEDSTAB_STABILITY_AGREEMENT_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "checklist/evaluate.hpp"
#include "data/corpus.hpp"

namespace seedstab::stability {

struct FailureSet {
    int seed = 0;
    std::string variant;
    std::string capability;  // slug, or "dev"
    std::set<std::string> failing;
};

struct RatingMatrix {
    std::vector<std::string> item_ids;          // N
    std::vector<std::string> categories;        // k
    std::vector<std::vector<int>> counts;       // N x k rater assignments
    int n_raters = 0;

    void validate() const;  // row sums must equal n_raters, k >= 2
};

struct FleissResult {
    std::size_t n_items = 0;
    int n_raters = 0;
    std::size_t n_categories = 0;
    double p_bar = 0.0;
    double p_e_bar = 0.0;
    std::optional<double> raw;       // undefined when chance agreement is 1
    std::optional<double> adjusted;  // degenerate unanimity reported as 1.0
};

struct DistributionSummary {
    int defined = 0;
    std::optional<double> min, q1, median, q3, max;
};

struct PairwiseOverlap {
    std::vector<int> seeds;
    // matrix[i][j]: overlap of seeds[i] vs seeds[j]; null where undefined
    std::vector<std::vector<std::optional<double>>> matrix;
    struct Pair {
        int seed_a = 0, seed_b = 0;
        std::optional<double> value;
    };
    std::vector<Pair> pairs;  // all unordered pairs, i < j in seed order
    int undefined_pairs = 0;
    DistributionSummary summary;  // over defined pairs only
};

// failed cases / total cases for one (seed, variant, capability).
double case_error_rate(const std::vector<checklist::CaseResult>& cases);

// Jaccard overlap of two failure sets; undefined when the union is empty.
std::optional<double> overlap_ratio(const FailureSet& a, const FailureSet& b);

// All unordered seed pairs for one (variant, capability); needs >= 2 sets.
PairwiseOverlap pairwise_overlap(const std::vector<FailureSet>& sets);

FleissResult fleiss_kappa(const RatingMatrix& m);

// Linear-interpolation quartiles (the numpy default) over the given values.
DistributionSummary summarize_distribution(std::vector<double> values);

// Rebuilds per-case verdicts from flat eval records (failure = any failing
// instance in the case).
std::vector<checklist::CaseResult> cases_from_records(
    const std::vector<checklist::EvalRecord>& records, const std::string& capability);

// Items = dev instances, raters = seeds, categories = {correct, incorrect}.
// With misclassified_only, items shrink to those some seed got wrong.
RatingMatrix build_dev_matrix(
    const std::vector<std::pair<int, std::vector<int>>>& preds_by_seed,
    const std::vector<data::LabeledInstance>& dev, bool misclassified_only = false);

// MFT: {correct, incorrect} over all instances. INV: {flipped, consistent}
// over perturbed instances. DIR: {up, down, within-tolerance}, or
// {with-direction, against-direction} when dir_categories = 2.
RatingMatrix build_capability_matrix(
    const std::vector<std::pair<int, std::vector<checklist::EvalRecord>>>& records_by_seed,
    const checklist::Capability& capability, int dir_categories = 3);

}  // namespace seedstab::stability

#endif
