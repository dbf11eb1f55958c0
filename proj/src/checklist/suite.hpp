#ifndef SEEDSTAB_CHECKLIST_SUITE_HPP
#define SEEDSTAB_CHECKLIST_SUITE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "data/corpus.hpp"
#include "data/lexicons.hpp"
#include "data/names.hpp"

namespace seedstab::checklist {

enum class TestType { mft, inv, dir };
enum class Direction { none, positive_up, negative_up };

std::string to_string(TestType type);
std::string to_string(Direction direction);
TestType test_type_from_string(const std::string& s);
Direction direction_from_string(const std::string& s);

struct Capability {
    std::string name;  // display name
    std::string slug;  // stable id used in records and reports
    TestType test_type = TestType::mft;
    Direction direction = Direction::none;
    int n_target = 0;     // requested cases after scaling
    int n_cases = 0;      // materialized cases
    int m_instances = 0;  // originals + perturbations
    int eligible = 0;     // corpus instances that qualified (INV/DIR)
    int ineligible = 0;   // corpus instances that lacked the hook (INV/DIR)
    bool unvalidated = false;
};

struct TestInstance {
    std::string instance_id;
    std::string case_id;
    std::string capability;  // slug
    std::string text;
    bool perturbed = false;
    int expected_label = -1;     // MFT only, else -1
    std::string origin_id;       // source corpus id for INV/DIR cases
};

struct SuiteConfig {
    std::uint64_t seed = 7;
    double scale = 1.0;
    double dir_tolerance = 0.1;
    bool include_unvalidated = false;
    int k_change_names = 10;
    int k_polarizing = 10;
    int k_change_neutral = 7;
    int k_change_industries = 0;  // 0 = swap in every other industry

    void validate() const;  // throws ConfigError naming the field
};

struct Suite {
    std::vector<Capability> capabilities;
    std::vector<TestInstance> instances;
};

// Cartesian expansion of "{slot}" placeholders, deterministically subsampled
// to cap when the product is larger. Unknown slot -> ConfigError.
std::vector<std::string> expand_template(
    const std::string& pattern,
    const std::map<std::string, std::vector<std::string>>& slot_lexicons,
    std::size_t cap, std::uint64_t seed);

// Perturbations return one instance text per replacement; an empty result
// means the hook token was absent and the case should be skipped.
std::vector<std::string> perturb_change_names(const std::string& text,
                                              const std::vector<std::string>& name_lexicon,
                                              const std::vector<std::string>& replacement_pool,
                                              int k, std::uint64_t seed);
std::vector<std::string> perturb_change_neutral(const std::string& text,
                                                const std::vector<std::string>& neutral_lexicon,
                                                int k, std::uint64_t seed);
std::string perturb_add_phrase(const std::string& text, const std::string& phrase);

// Materializes the default capability set (plus the unvalidated pair when
// enabled) against the test corpus. Deterministic per config.seed.
Suite build_suite(const SuiteConfig& config,
                  const std::vector<data::LabeledInstance>& test_corpus,
                  const data::NamePolarityResult& mined_names,
                  const data::LexiconSet& lexicons);

std::string suite_instances_to_jsonl(const std::vector<TestInstance>& instances);
std::vector<TestInstance> suite_instances_from_jsonl(const std::string& body);
std::string suite_manifest_json(const Suite& suite, const SuiteConfig& config);
std::vector<Capability> capabilities_from_manifest_json(const std::string& body);

}  // namespace seedstab::checklist

#endif
