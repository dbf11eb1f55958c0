#ifndef SEEDSTAB_DATA_NAMES_HPP
#define SEEDSTAB_DATA_NAMES_HPP

#include <string>
#include <vector>

#include "data/corpus.hpp"

namespace seedstab::data {

struct NamePolarity {
    std::string name;
    int count = 0;          // instances containing the name, not occurrences
    double mean_label = 0;  // over those instances
};

struct NamePolarityResult {
    std::vector<std::string> positive_names;  // mean 1.0, count >= min_count
    std::vector<std::string> negative_names;  // mean 0.0, count >= min_count
    std::vector<NamePolarity> all;            // every lexicon name that occurred
};

// Scans the training split for whole-token, case-sensitive occurrences of
// capitalized lexicon names and classifies each by the mean label of the
// instances it appears in. Names in `exclude` are ignored entirely.
NamePolarityResult extract_name_polarity(const std::vector<LabeledInstance>& train,
                                         const std::vector<std::string>& name_lexicon,
                                         int min_count,
                                         const std::vector<std::string>& exclude = {});

}  // namespace seedstab::data

#endif
