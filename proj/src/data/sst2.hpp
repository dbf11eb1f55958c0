#ifndef SEEDSTAB_DATA_SST2_HPP
#define SEEDSTAB_DATA_SST2_HPP

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "data/corpus.hpp"

namespace seedstab::data {

// Sentiment-treebank phrase dictionary: normalized phrase -> continuous
// sentiment score in [0, 1].
struct PhraseDictionary {
    std::unordered_map<std::string, double> score_by_phrase;

    // dictionary.txt rows are "phrase|phrase_id"; label file rows are
    // "phrase_id|score" with an optional "phrase ids|sentiment values" header.
    static PhraseDictionary load(const std::filesystem::path& dictionary_path,
                                 const std::filesystem::path& labels_path);
};

struct MatchResult {
    std::vector<LabeledInstance> matched;    // score > 0.6 -> 1, score <= 0.4 -> 0
    std::vector<std::string> dropped_band;   // matched but score in (0.4, 0.6]
    std::vector<std::string> unmatched;      // no dictionary entry
};

// Recovers hard labels for unlabeled test sentences by exact lookup of the
// whitespace/case-normalized sentence in the phrase dictionary. Every input
// sentence lands in exactly one of the three output buckets.
MatchResult match_test_labels(const std::vector<std::string>& sentences,
                              const PhraseDictionary& dict);

}  // namespace seedstab::data

#endif
