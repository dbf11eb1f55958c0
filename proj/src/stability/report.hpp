#ifndef SEEDSTAB_STABILITY_REPORT_HPP
#define SEEDSTAB_STABILITY_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "checklist/evaluate.hpp"
#include "checklist/suite.hpp"
#include "stability/agreement.hpp"

namespace seedstab::stability {

struct ReportInputs {
    std::vector<int> seeds;
    std::vector<std::string> variants;  // subset of {"vanilla", "swa"}
    std::vector<checklist::Capability> capabilities;
    // variant -> seed -> flat eval records
    std::map<std::string, std::map<int, std::vector<checklist::EvalRecord>>> suite_records;
    // dev-set records: capability "dev", MFT semantics against the true label
    std::map<std::string, std::map<int, std::vector<checklist::EvalRecord>>> dev_records;
    bool misclassified_only = false;  // headline dev-kappa reading
    int dir_categories = 3;
};

struct ComposedReport {
    std::string report_json;
    std::string error_rates_csv;
    std::string overlap_pairs_csv;
    std::string kappa_csv;
    std::string summary_txt;
    std::vector<int> flagged_seeds;  // dev accuracy > 3 IQRs below the median
    std::vector<std::string> notices;
};

// Aggregates one seed-set into the full stability report: per-capability
// error rates, pairwise overlaps, kappa with a vanilla/SWA difference column,
// and dev-set kappa per variant. Seeds listed in exclude_seeds are dropped
// before any statistic is computed.
ComposedReport compose_report(const ReportInputs& inputs,
                              const std::vector<int>& exclude_seeds = {});

}  // namespace seedstab::stability

#endif
