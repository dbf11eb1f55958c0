#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "common/errors.hpp"
#include "common/fsio.hpp"
#include "data/corpus.hpp"
#include "data/lexicons.hpp"
#include "data/names.hpp"
#include "data/sst2.hpp"
#include "data/synthetic.hpp"

using namespace seedstab;
using namespace seedstab::data;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "seedstab_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("load_tsv parses the sentence/label layout") {
    auto dir = scratch_dir("tsv");
    atomic_write_file(dir / "train.tsv",
                      "sentence\tlabel\n"
                      "a fine movie\t1\n"
                      "a dull movie\t0\n");
    auto rows = load_tsv(dir / "train.tsv");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].id == "1");
    CHECK(rows[0].text == "a fine movie");
    CHECK(rows[0].label == 1);
    CHECK(rows[1].label == 0);

    SUBCASE("bad label errors with the line number") {
        atomic_write_file(dir / "bad.tsv", "sentence\tlabel\nx\t7\n");
        CHECK_THROWS_WITH_AS(static_cast<void>(load_tsv(dir / "bad.tsv")),
                             doctest::Contains(":2: label must be 0 or 1"), DataError);
    }
    SUBCASE("missing header errors") {
        atomic_write_file(dir / "nohdr.tsv", "x\t1\n");
        CHECK_THROWS_AS(static_cast<void>(load_tsv(dir / "nohdr.tsv")), DataError);
    }
    SUBCASE("empty sentence errors") {
        atomic_write_file(dir / "empty.tsv", "sentence\tlabel\n\t1\n");
        CHECK_THROWS_AS(static_cast<void>(load_tsv(dir / "empty.tsv")), DataError);
    }
}

TEST_CASE("jsonl round trip preserves instances") {
    std::vector<LabeledInstance> instances{{"a-1", "That movie was great.", 1},
                                           {"a-2", "We hated it.", 0}};
    auto body = to_jsonl(instances);
    auto back = from_jsonl(body);
    REQUIRE(back.size() == 2);
    CHECK(back[0].id == instances[0].id);
    CHECK(back[0].text == instances[0].text);
    CHECK(back[0].label == instances[0].label);
    CHECK(back[1].label == 0);

    auto dir = scratch_dir("jsonl");
    save_jsonl(dir / "c.jsonl", instances);
    auto loaded = load_jsonl(dir / "c.jsonl");
    CHECK(loaded.size() == 2);
    CHECK(loaded[1].text == "We hated it.");
}

TEST_CASE("phrase dictionary recovers test labels by score band") {
    auto dir = scratch_dir("sst2");
    atomic_write_file(dir / "dictionary.txt",
                      "a great movie|1\n"
                      "a bad movie|2\n"
                      "a so-so movie|3\n"
                      "pipes | in | phrase|4\n");
    atomic_write_file(dir / "sentiment_labels.txt",
                      "phrase ids|sentiment values\n"
                      "1|0.7\n"
                      "2|0.4\n"
                      "3|0.5\n"
                      "4|0.9\n");
    auto dict = PhraseDictionary::load(dir / "dictionary.txt", dir / "sentiment_labels.txt");
    CHECK(dict.score_by_phrase.size() == 4);

    auto match = match_test_labels({"A great movie", "a BAD movie", "a so-so movie",
                                    "pipes | in | phrase", "never seen before"},
                                   dict);
    REQUIRE(match.matched.size() == 3);
    CHECK(match.matched[0].label == 1);  // 0.7 > 0.6
    CHECK(match.matched[1].label == 0);  // 0.4 <= 0.4
    CHECK(match.matched[2].label == 1);  // 0.9, pipes inside the phrase survive
    CHECK(match.dropped_band == std::vector<std::string>{"a so-so movie"});
    CHECK(match.unmatched == std::vector<std::string>{"never seen before"});
}

TEST_CASE("every test sentence lands in exactly one bucket") {
    auto dir = scratch_dir("sst2b");
    atomic_write_file(dir / "dictionary.txt", "alpha|1\nbeta|2\ngamma|3\n");
    atomic_write_file(dir / "sentiment_labels.txt", "1|0.9\n2|0.1\n3|0.55\n");
    auto dict = PhraseDictionary::load(dir / "dictionary.txt", dir / "sentiment_labels.txt");
    std::vector<std::string> sentences{"alpha", "beta", "gamma", "delta", "ALPHA  "};
    auto match = match_test_labels(sentences, dict);
    CHECK(match.matched.size() + match.dropped_band.size() + match.unmatched.size() ==
          sentences.size());
    CHECK(match.matched.size() == 3);  // alpha, beta, normalized ALPHA
    CHECK(match.dropped_band.size() == 1);
    CHECK(match.unmatched.size() == 1);
}

TEST_CASE("phrase dictionary loader rejects malformed rows") {
    auto dir = scratch_dir("sst2c");
    SUBCASE("score out of range") {
        atomic_write_file(dir / "d.txt", "a|1\n");
        atomic_write_file(dir / "l.txt", "1|1.5\n");
        CHECK_THROWS_AS(static_cast<void>(PhraseDictionary::load(dir / "d.txt", dir / "l.txt")),
                        DataError);
    }
    SUBCASE("no usable entries") {
        atomic_write_file(dir / "d.txt", "a|1\n");
        atomic_write_file(dir / "l.txt", "2|0.5\n");
        CHECK_THROWS_AS(static_cast<void>(PhraseDictionary::load(dir / "d.txt", dir / "l.txt")),
                        DataError);
    }
}

TEST_CASE("builtin lexicons cover the suite's needs and survive a disk round trip") {
    auto lex = LexiconSet::builtin();
    for (const char* name :
         {"positive_words", "negative_words", "positive_adjectives", "negative_adjectives",
          "positive_verbs_present", "negative_verbs_present", "positive_verbs_past",
          "negative_verbs_past", "movie_nouns", "neutral_words", "genres", "industries",
          "hedges", "first_names", "positive_phrases", "negative_phrases"}) {
        CAPTURE(name);
        CHECK(lex.has(name));
        CHECK(!lex.get(name).empty());
    }
    for (const auto& g : lex.get("genres")) {
        CHECK(lex.get("genre_fit_" + g).size() >= 4);
        CHECK(lex.get("genre_misfit_" + g).size() >= 4);
    }
    CHECK(lex.get("positive_phrases").size() == 10);
    CHECK(lex.get("negative_phrases").size() == 9);
    CHECK(lex.get("industries").size() == 14);  // pivot + 13 swap targets
    CHECK(lex.get("first_names").size() >= 150);
    CHECK_THROWS_AS(static_cast<void>(lex.get("no_such_list")), ConfigError);

    auto dir = scratch_dir("lex");
    lex.save_dir(dir);
    auto back = LexiconSet::load_dir(dir);
    CHECK(back.lists == lex.lists);
}

TEST_CASE("synthetic corpus is deterministic, split-disjoint and label-balanced") {
    auto lex = LexiconSet::builtin();
    auto a = gen_synthetic_corpus(2024, 800, 200, 200, lex);
    auto b = gen_synthetic_corpus(2024, 800, 200, 200, lex);
    CHECK(a.train.size() == 800);
    CHECK(a.dev.size() == 200);
    CHECK(a.test.size() == 200);
    REQUIRE(a.train.size() == b.train.size());
    for (std::size_t i = 0; i < a.train.size(); ++i) {
        CHECK(a.train[i].text == b.train[i].text);
        CHECK(a.train[i].label == b.train[i].label);
    }
    CHECK(a.train[0].id == "train-1");
    CHECK(a.dev[0].id == "dev-1");
    CHECK(a.test.back().id == "test-200");

    std::set<std::string> seen;
    for (const auto* split : {&a.train, &a.dev, &a.test})
        for (const auto& inst : *split) CHECK(seen.insert(inst.text).second);

    int positives = 0;
    for (const auto& inst : a.train) positives += inst.label;
    const double rate = static_cast<double>(positives) / static_cast<double>(a.train.size());
    CHECK(rate >= 0.45);
    CHECK(rate <= 0.55);

    auto c = gen_synthetic_corpus(2025, 800, 200, 200, lex);
    CHECK(a.train[0].text != c.train[0].text);

    CHECK_THROWS_AS(gen_synthetic_corpus(1, 0, 1, 1, lex), ConfigError);
}

TEST_CASE("name polarity mining classifies by mean label with a count floor") {
    std::vector<LabeledInstance> train{
        {"t1", "Mary loved this movie.", 1},
        {"t2", "Mary said the plot was great.", 1},
        {"t3", "John hated this film.", 0},
        {"t4", "John said the plot was awful.", 0},
        {"t5", "Alex liked the cast.", 1},
        {"t6", "Alex hated the cast.", 0},
        {"t7", "Pat loved the soundtrack.", 1},
        {"t8", "Mary and Mary again.", 1},  // per-instance dedupe: counts once
        {"t9", "mary lowercase is not a name.", 1},
    };
    std::vector<std::string> lexicon{"Mary", "John", "Alex", "Pat", "Sam"};

    auto mined = extract_name_polarity(train, lexicon, 2);
    CHECK(mined.positive_names == std::vector<std::string>{"Mary"});
    CHECK(mined.negative_names == std::vector<std::string>{"John"});
    // Pat occurred once (below the floor), Alex has mean 0.5, Sam never occurs.
    REQUIRE(mined.all.size() == 4);
    for (const auto& np : mined.all) {
        CAPTURE(np.name);
        if (np.name == "Mary") {
            CHECK(np.count == 3);
            CHECK(np.mean_label == 1.0);
        }
        if (np.name == "Alex") CHECK(np.mean_label == 0.5);
        if (np.name == "Pat") CHECK(np.count == 1);
        CHECK(np.name != "Sam");
    }

    SUBCASE("min_count 1 admits single-occurrence names") {
        auto loose = extract_name_polarity(train, lexicon, 1);
        CHECK(loose.positive_names == std::vector<std::string>{"Mary", "Pat"});
    }
    SUBCASE("excluded names are ignored entirely") {
        auto excl = extract_name_polarity(train, lexicon, 2, {"Mary"});
        CHECK(excl.positive_names.empty());
        for (const auto& np : excl.all) CHECK(np.name != "Mary");
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(static_cast<void>(extract_name_polarity(train, {}, 2)), DataError);
        CHECK_THROWS_AS(static_cast<void>(extract_name_polarity(train, lexicon, 0)), ConfigError);
    }
}
