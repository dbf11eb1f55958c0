#include "data/synthetic.hpp"

#include <unordered_set>

#include "common/errors.hpp"
#include "common/rng.hpp"

namespace seedstab::data {

namespace {

using seedstab::Rng;

const std::string& pick(Rng& rng, const std::vector<std::string>& pool) {
    return pool[static_cast<std::size_t>(rng.below(pool.size()))];
}

std::string capitalize_first(std::string text) {
    if (!text.empty() && text[0] >= 'a' && text[0] <= 'z')
        text[0] = static_cast<char>(text[0] - 'a' + 'A');
    return text;
}

struct Pools {
    const std::vector<std::string>& pos_adj;
    const std::vector<std::string>& neg_adj;
    const std::vector<std::string>& pos_vpast;
    const std::vector<std::string>& neg_vpast;
    const std::vector<std::string>& pos_vpres;
    const std::vector<std::string>& neg_vpres;
    const std::vector<std::string>& pos_words;
    const std::vector<std::string>& neg_words;
    const std::vector<std::string>& nouns;
    const std::vector<std::string>& genres;
    const std::vector<std::string>& industries;
    const std::vector<std::string>& hedges;
    std::vector<std::string> dets{"that", "this", "the"};
    std::vector<std::string> pos_names;
    std::vector<std::string> neg_names;
    std::vector<std::string> mixed_names;
    const LexiconSet& lex;
};

const std::string& adj_for(int label, Rng& rng, const Pools& p) {
    return pick(rng, label == 1 ? p.pos_adj : p.neg_adj);
}

// Plain opinion sentences; the corpus backbone.
std::string gen_simple(int label, Rng& rng, const Pools& p) {
    switch (rng.below(5)) {
        case 0: return capitalize_first(pick(rng, p.dets) + " " + pick(rng, p.nouns) + " was " + adj_for(label, rng, p) + ".");
        case 1: return capitalize_first(pick(rng, p.dets) + " " + pick(rng, p.nouns) + " is " + adj_for(label, rng, p) + ".");
        case 2: return "I " + pick(rng, label == 1 ? p.pos_vpast : p.neg_vpast) + " " + pick(rng, p.dets) + " " + pick(rng, p.nouns) + ".";
        case 3: return "We " + pick(rng, label == 1 ? p.pos_vpres : p.neg_vpres) + " " + pick(rng, p.dets) + " " + pick(rng, p.nouns) + ".";
        default: return "I thought " + pick(rng, p.dets) + " " + pick(rng, p.nouns) + " was really " + adj_for(label, rng, p) + ".";
    }
}

// Negated opposite-polarity content.
std::string gen_negation(int label, Rng& rng, const Pools& p) {
    const auto& adj = pick(rng, label == 1 ? p.neg_adj : p.pos_adj);
    switch (rng.below(3)) {
        case 0: return capitalize_first(pick(rng, p.dets) + " " + pick(rng, p.nouns) + " was not " + adj + ".");
        case 1: return capitalize_first(pick(rng, p.dets) + " " + pick(rng, p.nouns) + " is not " + adj + ".");
        default: return "I do not " + pick(rng, label == 1 ? p.neg_vpres : p.pos_vpres) + " " + pick(rng, p.dets) + " " + pick(rng, p.nouns) + ".";
    }
}

// Sentiment flips over time; the final clause carries the label.
std::string gen_temporal(int label, Rng& rng, const Pools& p) {
    const auto& before = adj_for(1 - label, rng, p);
    const auto& after = adj_for(label, rng, p);
    const auto& noun = pick(rng, p.nouns);
    if (rng.below(2) == 0)
        return "I used to think this " + noun + " was " + before + ", but now I find it " + after + ".";
    return capitalize_first(pick(rng, p.dets) + " " + noun + " used to be " + before + ", but now it is " + after + ".");
}

std::string gen_name(int label, Rng& rng, const Pools& p) {
    const auto& polar = label == 1 ? p.pos_names : p.neg_names;
    const auto& name = rng.below(2) == 0 ? pick(rng, polar) : pick(rng, p.mixed_names);
    if (rng.below(2) == 0)
        return name + " said " + pick(rng, p.dets) + " " + pick(rng, p.nouns) + " was " + adj_for(label, rng, p) + ".";
    return name + " " + pick(rng, label == 1 ? p.pos_vpast : p.neg_vpast) + " " + pick(rng, p.dets) + " " + pick(rng, p.nouns) + ".";
}

// Genre-dependent sentiment: fitting adjectives are positive. Only the first
// four entries of each fit/misfit list are used, leaving the tail as
// out-of-vocabulary probes for the behavioral suite.
std::string gen_genre(int label, Rng& rng, const Pools& p) {
    const auto& genre = pick(rng, p.genres);
    const auto& table = p.lex.get((label == 1 ? "genre_fit_" : "genre_misfit_") + genre);
    std::size_t usable = table.size() < 4 ? table.size() : 4;
    const auto& adj = table[static_cast<std::size_t>(rng.below(usable))];
    const auto& noun = rng.below(2) == 0 ? "movie" : "film";
    if (rng.below(2) == 0)
        return capitalize_first(pick(rng, p.dets) + " " + genre + " " + noun + " was " + adj + ".");
    return capitalize_first(pick(rng, p.dets) + " " + genre + " " + noun + " felt " + adj + ".");
}

std::string gen_industry(int label, Rng& rng, const Pools& p) {
    // Pivot-heavy so the industry-swap test has enough originals.
    const auto& ind = rng.below(4) == 0 ? p.industries[0]
                                        : p.industries[1 + rng.below(p.industries.size() - 1)];
    switch (rng.below(3)) {
        case 0: return ind + " makes " + adj_for(label, rng, p) + " movies.";
        case 1: return ind + " keeps making " + adj_for(label, rng, p) + " films.";
        default: return "Another " + adj_for(label, rng, p) + " release from " + ind + ".";
    }
}

std::string gen_hedged(int label, Rng& rng, const Pools& p) {
    return capitalize_first(pick(rng, p.hedges) + ", " + pick(rng, p.dets) + " " +
                            pick(rng, p.nouns) + " is " + adj_for(label, rng, p) + ".");
}

std::string gen_single_word(int label, Rng& rng, const Pools& p) {
    return pick(rng, label == 1 ? p.pos_words : p.neg_words);
}

std::string gen_text(int label, Rng& rng, const Pools& p) {
    // Family shares out of 100: simple 29, negation 10, temporal 8, names 20,
    // genre 10, industry 10, hedged 8, single word 5.
    std::uint64_t roll = rng.below(100);
    if (roll < 29) return gen_simple(label, rng, p);
    if (roll < 39) return gen_negation(label, rng, p);
    if (roll < 47) return gen_temporal(label, rng, p);
    if (roll < 67) return gen_name(label, rng, p);
    if (roll < 77) return gen_genre(label, rng, p);
    if (roll < 87) return gen_industry(label, rng, p);
    if (roll < 95) return gen_hedged(label, rng, p);
    return gen_single_word(label, rng, p);
}

}  // namespace

SyntheticCorpus gen_synthetic_corpus(std::uint64_t seed, int n_train, int n_dev, int n_test,
                                     const LexiconSet& lex) {
    if (n_train < 1 || n_dev < 1 || n_test < 1)
        throw ConfigError("synthetic corpus sizes must be >= 1");

    Pools pools{lex.get("positive_adjectives"), lex.get("negative_adjectives"),
                lex.get("positive_verbs_past"), lex.get("negative_verbs_past"),
                lex.get("positive_verbs_present"), lex.get("negative_verbs_present"),
                lex.get("positive_words"), lex.get("negative_words"),
                lex.get("movie_nouns"), lex.get("genres"),
                lex.get("industries"), lex.get("hedges"),
                {"that", "this", "the"}, {}, {}, {}, lex};

    const auto& names = lex.get("first_names");
    std::size_t slice = names.size() / 5;  // two polarized fifths, mixed rest
    if (slice < 1) slice = 1;
    pools.pos_names.assign(names.begin(), names.begin() + static_cast<long>(slice));
    pools.neg_names.assign(names.begin() + static_cast<long>(slice),
                           names.begin() + static_cast<long>(2 * slice));
    pools.mixed_names.assign(names.begin() + static_cast<long>(2 * slice), names.end());
    if (pools.mixed_names.empty()) pools.mixed_names = pools.pos_names;

    Rng rng(seed);
    std::unordered_set<std::string> seen;
    long long attempts_left = 200LL * (n_train + n_dev + n_test) + 1000;

    auto fill = [&](const char* split, int count) {
        std::vector<LabeledInstance> out;
        out.reserve(static_cast<std::size_t>(count));
        while (static_cast<int>(out.size()) < count) {
            if (--attempts_left < 0)
                throw DataError("synthetic template space exhausted; reduce corpus sizes");
            int label = static_cast<int>(rng.below(2));
            std::string text = gen_text(label, rng, pools);
            if (!seen.insert(text).second) continue;
            out.push_back({std::string(split) + "-" + std::to_string(out.size() + 1),
                           std::move(text), label});
        }
        return out;
    };

    SyntheticCorpus corpus;
    corpus.train = fill("train", n_train);
    corpus.dev = fill("dev", n_dev);
    corpus.test = fill("test", n_test);
    return corpus;
}

}  // namespace seedstab::data
