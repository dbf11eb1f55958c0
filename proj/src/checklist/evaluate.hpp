#ifndef SEEDSTAB_CHECKLIST_EVALUATE_HPP
#define SEEDSTAB_CHECKLIST_EVALUATE_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "checklist/suite.hpp"

namespace seedstab::checklist {

enum class DirDirection { up, down, within_tolerance };

std::string to_string(DirDirection d);

struct EvalRecord {
    std::string instance_id;
    std::string case_id;
    std::string capability;  // slug
    int pred = 0;
    double confidence = 0.0;  // positive-class probability
    // Exactly the flags of the instance's test type are meaningful.
    bool has_mft_failed = false;
    bool mft_failed = false;
    bool has_flipped = false;  // INV perturbed instances only
    bool flipped = false;
    bool has_dir = false;  // DIR perturbed instances only
    DirDirection dir_direction = DirDirection::within_tolerance;
    bool dir_failed = false;

    bool failed() const { return (has_mft_failed && mft_failed) ||
                                 (has_flipped && flipped) ||
                                 (has_dir && dir_failed); }
};

struct CaseResult {
    std::string case_id;
    std::string capability;
    bool failed = false;
    std::vector<std::string> failing_instance_ids;
};

// pred, positive-class confidence for one text.
using ForwardFn = std::function<std::pair<int, double>(const std::string&)>;

struct EvalOutput {
    std::vector<EvalRecord> records;      // instance order preserved
    std::vector<CaseResult> cases;        // case order of first appearance
};

// Applies the per-type failure semantics: MFT fails on a wrong label, an INV
// perturbation fails when its label differs from the case original's, a DIR
// perturbation fails when the confidence moves more than dir_tolerance
// against the capability's direction. A case fails iff any instance fails.
EvalOutput evaluate_model(const ForwardFn& forward,
                          const std::vector<Capability>& capabilities,
                          const std::vector<TestInstance>& instances,
                          double dir_tolerance);

std::string eval_records_to_jsonl(const std::vector<EvalRecord>& records,
                                  int seed, const std::string& variant);
std::vector<EvalRecord> eval_records_from_jsonl(const std::string& body);

}  // namespace seedstab::checklist

#endif
