#ifndef SEEDSTAB_DATA_SYNTHETIC_HPP
#define SEEDSTAB_DATA_SYNTHETIC_HPP

#include <cstdint>

#include "data/corpus.hpp"
#include "data/lexicons.hpp"

namespace seedstab::data {

struct SyntheticCorpus {
    std::vector<LabeledInstance> train;
    std::vector<LabeledInstance> dev;
    std::vector<LabeledInstance> test;
};

// Template-generated movie reviews with exact labels by construction.
// Deterministic per seed; no text appears in two splits. The name lexicon is
// partitioned so one slice occurs only in positive reviews and one only in
// negative reviews, giving the polarity miner something real to find.
SyntheticCorpus gen_synthetic_corpus(std::uint64_t seed, int n_train, int n_dev, int n_test,
                                     const LexiconSet& lex);

}  // namespace seedstab::data

#endif
