#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "checklist/evaluate.hpp"
#include "checklist/suite.hpp"
#include "common/errors.hpp"
#include "common/text.hpp"
#include "data/lexicons.hpp"
#include "data/names.hpp"
#include "data/synthetic.hpp"

using namespace seedstab;
using namespace seedstab::checklist;
using seedstab::data::LabeledInstance;

namespace {

struct SuiteFixture {
    data::LexiconSet lex = data::LexiconSet::builtin();
    data::SyntheticCorpus corpus;
    data::NamePolarityResult mined;

    SuiteFixture() {
        corpus = data::gen_synthetic_corpus(2024, 600, 150, 300, lex);
        mined = data::extract_name_polarity(corpus.train, lex.get("first_names"), 2);
    }
};

const SuiteFixture& fixture() {
    static SuiteFixture f;
    return f;
}

SuiteConfig small_config() {
    SuiteConfig cfg;
    cfg.seed = 7;
    cfg.scale = 0.1;
    return cfg;
}

// Table-driven stand-in for a trained model.
ForwardFn table_forward(std::unordered_map<std::string, std::pair<int, double>> table) {
    return [table = std::move(table)](const std::string& text) {
        auto it = table.find(text);
        REQUIRE(it != table.end());
        return it->second;
    };
}

TestInstance make_instance(const std::string& case_id, const std::string& suffix,
                           const std::string& capability, const std::string& text,
                           bool perturbed, int expected = -1) {
    TestInstance inst;
    inst.case_id = case_id;
    inst.instance_id = case_id + "-" + suffix;
    inst.capability = capability;
    inst.text = text;
    inst.perturbed = perturbed;
    inst.expected_label = expected;
    return inst;
}

}  // namespace

TEST_CASE("template expansion is the full slot product in odometer order") {
    std::map<std::string, std::vector<std::string>> slots{
        {"a", {"x", "y"}}, {"b", {"1", "2", "3"}}};
    auto out = expand_template("{a}-{b}", slots, 100, 0);
    CHECK(out == std::vector<std::string>{"x-1", "x-2", "x-3", "y-1", "y-2", "y-3"});

    SUBCASE("no slots yields the literal") {
        CHECK(expand_template("plain text", slots, 100, 0) ==
              std::vector<std::string>{"plain text"});
    }
    SUBCASE("oversized products are subsampled deterministically without repeats") {
        auto s1 = expand_template("{a}{b}{a}{b}", slots, 10, 42);
        auto s2 = expand_template("{a}{b}{a}{b}", slots, 10, 42);
        CHECK(s1.size() == 10);
        CHECK(s1 == s2);
        CHECK(std::set<std::string>(s1.begin(), s1.end()).size() == 10);
        auto s3 = expand_template("{a}{b}{a}{b}", slots, 10, 43);
        CHECK(s1 != s3);
    }
    SUBCASE("unknown slot is a config error") {
        CHECK_THROWS_WITH_AS(static_cast<void>(expand_template("{nope}", slots, 10, 0)),
                             doctest::Contains("{nope}"), ConfigError);
    }
    SUBCASE("unterminated slot is a config error") {
        CHECK_THROWS_AS(static_cast<void>(expand_template("{a", slots, 10, 0)), ConfigError);
    }
    SUBCASE("empty slot lexicon is a config error") {
        std::map<std::string, std::vector<std::string>> bad{{"a", {}}};
        CHECK_THROWS_AS(static_cast<void>(expand_template("{a}", bad, 10, 0)), ConfigError);
    }
}

TEST_CASE("sentiment-laden templates cover the canonical negative example") {
    const auto& lex = fixture().lex;
    std::map<std::string, std::vector<std::string>> slots{
        {"neg_verb_present", lex.get("negative_verbs_present")},
        {"det", {"that", "this", "the"}},
        {"noun", lex.get("movie_nouns")}};
    auto out = expand_template("I {neg_verb_present} {det} {noun}.", slots, 100000, 0);
    CHECK(out.size() == lex.get("negative_verbs_present").size() * 3 *
                            lex.get("movie_nouns").size());
    CHECK(std::find(out.begin(), out.end(), "I despise that director.") != out.end());
}

TEST_CASE("name perturbation touches only the first name token") {
    std::vector<std::string> lexicon{"Mary", "John"};
    std::vector<std::string> pool{"Alice", "Bob", "Carol", "Dan"};
    auto out = perturb_change_names("Mary said John was great.", lexicon, pool, 3, 9);
    REQUIRE(out.size() == 3);
    std::set<std::string> distinct(out.begin(), out.end());
    CHECK(distinct.size() == 3);
    for (const auto& text : out) {
        CAPTURE(text);
        CHECK(text.find("Mary") == std::string::npos);  // hook replaced
        CHECK(text.find("John was great.") != std::string::npos);  // rest untouched
    }
    CHECK(perturb_change_names("Mary said John was great.", lexicon, pool, 3, 9) == out);

    SUBCASE("absent hook yields no perturbations") {
        CHECK(perturb_change_names("no names here", lexicon, pool, 3, 9).empty());
    }
    SUBCASE("the original name never replaces itself") {
        auto self = perturb_change_names("Alice was fine.", {"Alice"}, {"Alice", "Bob"}, 5, 1);
        REQUIRE(self.size() == 1);
        CHECK(self[0] == "Bob was fine.");
    }
}

TEST_CASE("neutral-word perturbation preserves capitalization") {
    std::vector<std::string> neutral{"that", "this", "the"};
    auto out = perturb_change_neutral("That film dragged.", neutral, 2, 5);
    REQUIRE(out.size() == 2);
    for (const auto& text : out) {
        CAPTURE(text);
        CHECK((text == "This film dragged." || text == "The film dragged."));
    }
    CHECK(perturb_change_neutral("nothing neutral здесь", neutral, 2, 5).empty());
    CHECK(perturb_add_phrase("Good.", "I loved it") == "Good. I loved it");
}

TEST_CASE("suite has 18 capabilities by default and 20 with the unvalidated pair") {
    const auto& f = fixture();
    auto suite = build_suite(small_config(), f.corpus.test, f.mined, f.lex);
    CHECK(suite.capabilities.size() == 18);
    for (const auto& cap : suite.capabilities) CHECK(!cap.unvalidated);

    auto cfg = small_config();
    cfg.include_unvalidated = true;
    auto wide = build_suite(cfg, f.corpus.test, f.mined, f.lex);
    CHECK(wide.capabilities.size() == 20);
    std::set<std::string> slugs;
    int unvalidated = 0;
    for (const auto& cap : wide.capabilities) {
        CHECK(slugs.insert(cap.slug).second);
        unvalidated += cap.unvalidated;
    }
    CHECK(unvalidated == 2);
    CHECK(slugs.count("negation_of_negative") == 1);
    CHECK(slugs.count("add_negations") == 1);
}

TEST_CASE("capability counters match the materialized instances") {
    const auto& f = fixture();
    auto suite = build_suite(small_config(), f.corpus.test, f.mined, f.lex);

    std::map<std::string, int> n_instances;
    std::map<std::string, std::set<std::string>> cases;
    std::map<std::string, std::map<std::string, int>> case_sizes;
    for (const auto& inst : suite.instances) {
        n_instances[inst.capability] += 1;
        cases[inst.capability].insert(inst.case_id);
        case_sizes[inst.capability][inst.case_id] += 1;
    }

    std::map<std::string, int> instances_per_case{
        {"change_names", 11},           // original + k_change_names
        {"change_neutral_words", 8},    // original + k_change_neutral
        {"change_movie_industries", 14},  // original + 13 alternatives
        {"add_positive_phrases", 11},
        {"add_negative_phrases", 10},
        {"negative_names_positive_instances", 11},
        {"positive_names_negative_instances", 11},
        {"negative_names_negative_instances", 11},
        {"positive_names_positive_instances", 11},
    };

    for (const auto& cap : suite.capabilities) {
        CAPTURE(cap.slug);
        CHECK(cap.n_cases >= 1);
        CHECK(cap.m_instances == n_instances[cap.slug]);
        CHECK(cap.n_cases == static_cast<int>(cases[cap.slug].size()));
        if (cap.test_type == TestType::mft) {
            CHECK(cap.m_instances == cap.n_cases);
            CHECK(cap.n_cases == cap.n_target);
        } else {
            CHECK(cap.n_cases <= cap.n_target);
            CHECK(cap.eligible + cap.ineligible ==
                  static_cast<int>(f.corpus.test.size()));
        }
        auto want = instances_per_case.find(cap.slug);
        if (want != instances_per_case.end())
            for (const auto& [case_id, size] : case_sizes[cap.slug]) {
                CAPTURE(case_id);
                CHECK(size == want->second);
            }
    }
}

TEST_CASE("suite instances are well formed and deterministic") {
    const auto& f = fixture();
    auto a = build_suite(small_config(), f.corpus.test, f.mined, f.lex);
    auto b = build_suite(small_config(), f.corpus.test, f.mined, f.lex);
    REQUIRE(a.instances.size() == b.instances.size());
    for (std::size_t i = 0; i < a.instances.size(); ++i) {
        CHECK(a.instances[i].instance_id == b.instances[i].instance_id);
        CHECK(a.instances[i].text == b.instances[i].text);
    }

    std::map<std::string, TestType> type_of;
    for (const auto& cap : a.capabilities) type_of[cap.slug] = cap.test_type;
    std::set<std::string> seen_cases;
    for (const auto& inst : a.instances) {
        CAPTURE(inst.instance_id);
        if (type_of[inst.capability] == TestType::mft) {
            CHECK(!inst.perturbed);
            CHECK((inst.expected_label == 0 || inst.expected_label == 1));
            CHECK(inst.origin_id.empty());
        } else {
            CHECK(inst.expected_label == -1);
            CHECK(!inst.origin_id.empty());
            // the case original always precedes its perturbations
            if (seen_cases.insert(inst.case_id).second) {
                CHECK(!inst.perturbed);
                CHECK(inst.instance_id == inst.case_id + "-orig");
            } else {
                CHECK(inst.perturbed);
            }
        }
    }

    auto cfg = small_config();
    cfg.seed = 8;
    auto c = build_suite(cfg, f.corpus.test, f.mined, f.lex);
    bool any_diff = c.instances.size() != a.instances.size();
    for (std::size_t i = 0; !any_diff && i < a.instances.size(); ++i)
        any_diff = a.instances[i].text != c.instances[i].text;
    CHECK(any_diff);
}

TEST_CASE("polarizing-name capabilities draw from the right corpus slice") {
    const auto& f = fixture();
    auto suite = build_suite(small_config(), f.corpus.test, f.mined, f.lex);

    std::unordered_map<std::string, const LabeledInstance*> by_id;
    for (const auto& inst : f.corpus.test) by_id[inst.id] = &inst;
    std::unordered_set<std::string> positive(f.mined.positive_names.begin(),
                                             f.mined.positive_names.end());
    std::unordered_set<std::string> negative(f.mined.negative_names.begin(),
                                             f.mined.negative_names.end());

    std::unordered_set<std::string> lexicon_names(f.lex.get("first_names").begin(),
                                                  f.lex.get("first_names").end());
    // Originals carry the target label and some lexicon name; the polarized
    // names only appear in the perturbations that swap them in.
    auto check_origins = [&](const std::string& slug, int label,
                             const std::unordered_set<std::string>& swapped_in) {
        int originals = 0, perturbations = 0;
        for (const auto& inst : suite.instances) {
            if (inst.capability != slug) continue;
            auto origin = by_id.find(inst.origin_id);
            REQUIRE(origin != by_id.end());
            CHECK(origin->second->label == label);
            bool has_lexicon_name = false, has_polarized = false;
            for (const auto& span : tokenize_spans(inst.text)) {
                has_lexicon_name = has_lexicon_name || lexicon_names.count(span.token) > 0;
                has_polarized = has_polarized || swapped_in.count(span.token) > 0;
            }
            if (inst.perturbed) {
                CHECK(has_polarized);
                ++perturbations;
            } else {
                CHECK(has_lexicon_name);
                ++originals;
            }
        }
        CHECK(originals >= 1);
        CHECK(perturbations == originals * 10);  // k_polarizing swaps per case
    };
    check_origins("positive_names_negative_instances", 0, positive);
    check_origins("positive_names_positive_instances", 1, positive);
    check_origins("negative_names_negative_instances", 0, negative);
    check_origins("negative_names_positive_instances", 1, negative);

    SUBCASE("change_names never swaps in a polarized name") {
        std::unordered_set<std::string> polarized = positive;
        polarized.insert(negative.begin(), negative.end());
        for (const auto& inst : suite.instances) {
            if (inst.capability != "change_names" || !inst.perturbed) continue;
            for (const auto& span : tokenize_spans(inst.text))
                CHECK(!polarized.count(span.token));
        }
    }
}

TEST_CASE("scale moves per-capability targets with a floor of one") {
    const auto& f = fixture();
    auto cfg = small_config();  // scale 0.1
    auto suite = build_suite(cfg, f.corpus.test, f.mined, f.lex);
    std::map<std::string, int> targets;
    for (const auto& cap : suite.capabilities) targets[cap.slug] = cap.n_target;
    CHECK(targets["change_names"] == 15);          // 0.1 * 147, rounded
    CHECK(targets["add_positive_phrases"] == 50);  // 0.1 * 500
    CHECK(targets["change_movie_industries"] == 2);
    CHECK(targets["single_negative_words"] == 1);  // 0.1 * 14 rounds to 1

    SUBCASE("config validation") {
        SuiteConfig bad;
        bad.scale = 0.0;
        CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("suite.scale"), ConfigError);
        bad = SuiteConfig{};
        bad.dir_tolerance = 1.0;
        CHECK_THROWS_AS(bad.validate(), ConfigError);
        bad = SuiteConfig{};
        bad.k_polarizing = 0;
        CHECK_THROWS_AS(bad.validate(), ConfigError);
    }
}

TEST_CASE("suite instances and manifest survive their serialization round trips") {
    const auto& f = fixture();
    auto cfg = small_config();
    cfg.include_unvalidated = true;
    auto suite = build_suite(cfg, f.corpus.test, f.mined, f.lex);

    auto body = suite_instances_to_jsonl(suite.instances);
    auto back = suite_instances_from_jsonl(body);
    REQUIRE(back.size() == suite.instances.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].instance_id == suite.instances[i].instance_id);
        CHECK(back[i].case_id == suite.instances[i].case_id);
        CHECK(back[i].capability == suite.instances[i].capability);
        CHECK(back[i].text == suite.instances[i].text);
        CHECK(back[i].perturbed == suite.instances[i].perturbed);
        CHECK(back[i].expected_label == suite.instances[i].expected_label);
        CHECK(back[i].origin_id == suite.instances[i].origin_id);
    }

    auto manifest = suite_manifest_json(suite, cfg);
    auto caps = capabilities_from_manifest_json(manifest);
    REQUIRE(caps.size() == suite.capabilities.size());
    for (std::size_t i = 0; i < caps.size(); ++i) {
        CHECK(caps[i].slug == suite.capabilities[i].slug);
        CHECK(caps[i].test_type == suite.capabilities[i].test_type);
        CHECK(caps[i].direction == suite.capabilities[i].direction);
        CHECK(caps[i].n_cases == suite.capabilities[i].n_cases);
        CHECK(caps[i].m_instances == suite.capabilities[i].m_instances);
        CHECK(caps[i].unvalidated == suite.capabilities[i].unvalidated);
    }
}

TEST_CASE("evaluation applies the per-type failure semantics") {
    std::vector<Capability> caps(4);
    caps[0].slug = "m";
    caps[0].test_type = TestType::mft;
    caps[1].slug = "i";
    caps[1].test_type = TestType::inv;
    caps[2].slug = "p";
    caps[2].test_type = TestType::dir;
    caps[2].direction = Direction::positive_up;
    caps[3].slug = "n";
    caps[3].test_type = TestType::dir;
    caps[3].direction = Direction::negative_up;

    std::vector<TestInstance> instances{
        make_instance("m-c1", "orig", "m", "t1", false, 1),
        make_instance("m-c2", "orig", "m", "t2", false, 0),
        make_instance("i-c1", "orig", "i", "a", false),
        make_instance("i-c1", "p1", "i", "b", true),
        make_instance("i-c2", "orig", "i", "c", false),
        make_instance("i-c2", "p1", "i", "d", true),
        make_instance("p-c1", "orig", "p", "e", false),
        make_instance("p-c1", "p1", "p", "f", true),
        make_instance("p-c1", "p2", "p", "g", true),
        make_instance("p-c2", "orig", "p", "h", false),
        make_instance("p-c2", "p1", "p", "i2", true),
        make_instance("n-c1", "orig", "n", "j", false),
        make_instance("n-c1", "p1", "n", "k", true),
        make_instance("n-c1", "p2", "n", "l", true),
    };
    auto forward = table_forward({
        {"t1", {0, 0.30}},   // MFT expected 1 -> fail
        {"t2", {0, 0.20}},   // MFT expected 0 -> pass
        {"a", {1, 0.90}},
        {"b", {0, 0.20}},    // INV flip
        {"c", {1, 0.80}},
        {"d", {1, 0.60}},    // same label, confidence move is fine
        {"e", {1, 0.80}},
        {"f", {1, 0.65}},    // delta -0.15 -> down -> fails positive-up
        {"g", {1, 0.75}},    // delta -0.05 -> within tolerance -> passes
        {"h", {1, 0.50}},
        {"i2", {1, 0.90}},   // up -> fine for positive-up
        {"j", {0, 0.20}},
        {"k", {1, 0.45}},    // delta +0.25 -> up -> fails negative-up
        {"l", {0, 0.05}},    // down -> fine for negative-up
    });

    auto out = evaluate_model(forward, caps, instances, 0.1);
    REQUIRE(out.records.size() == instances.size());

    std::unordered_map<std::string, const EvalRecord*> rec;
    for (const auto& r : out.records) rec[r.instance_id] = &r;

    CHECK(rec["m-c1-orig"]->has_mft_failed);
    CHECK(rec["m-c1-orig"]->mft_failed);
    CHECK(!rec["m-c2-orig"]->mft_failed);

    CHECK(!rec["i-c1-orig"]->has_flipped);  // originals carry no flag
    CHECK(rec["i-c1-p1"]->flipped);
    CHECK(!rec["i-c2-p1"]->flipped);

    CHECK(rec["p-c1-p1"]->dir_direction == DirDirection::down);
    CHECK(rec["p-c1-p1"]->dir_failed);
    CHECK(rec["p-c1-p2"]->dir_direction == DirDirection::within_tolerance);
    CHECK(!rec["p-c1-p2"]->dir_failed);
    CHECK(rec["p-c2-p1"]->dir_direction == DirDirection::up);
    CHECK(!rec["p-c2-p1"]->dir_failed);
    CHECK(rec["n-c1-p1"]->dir_direction == DirDirection::up);
    CHECK(rec["n-c1-p1"]->dir_failed);
    CHECK(!rec["n-c1-p2"]->dir_failed);

    REQUIRE(out.cases.size() == 7);
    CHECK(out.cases[0].case_id == "m-c1");  // first-appearance order
    std::unordered_map<std::string, const CaseResult*> cases;
    for (const auto& c : out.cases) cases[c.case_id] = &c;
    CHECK(cases["m-c1"]->failed);
    CHECK(!cases["m-c2"]->failed);
    CHECK(cases["i-c1"]->failed);
    CHECK(!cases["i-c2"]->failed);
    CHECK(cases["p-c1"]->failed);  // one failing instance fails the case
    CHECK(cases["p-c1"]->failing_instance_ids ==
          std::vector<std::string>{"p-c1-p1"});
    CHECK(!cases["p-c2"]->failed);
    CHECK(cases["n-c1"]->failed);
}

TEST_CASE("a confidence move equal to the tolerance stays within it") {
    std::vector<Capability> caps(1);
    caps[0].slug = "p";
    caps[0].test_type = TestType::dir;
    caps[0].direction = Direction::positive_up;
    std::vector<TestInstance> instances{
        make_instance("p-c1", "orig", "p", "o", false),
        make_instance("p-c1", "p1", "p", "q", true),
    };
    auto out = evaluate_model(table_forward({{"o", {1, 0.625}}, {"q", {1, 0.5}}}),
                              caps, instances, 0.125);
    CHECK(out.records[1].dir_direction == DirDirection::within_tolerance);
    CHECK(!out.records[1].dir_failed);
}

TEST_CASE("evaluation rejects malformed suites") {
    std::vector<Capability> caps(2);
    caps[0].slug = "m";
    caps[0].test_type = TestType::mft;
    caps[1].slug = "i";
    caps[1].test_type = TestType::inv;
    auto forward = table_forward({{"x", {1, 0.9}}});

    SUBCASE("unknown capability") {
        std::vector<TestInstance> bad{make_instance("z-c1", "orig", "zzz", "x", false)};
        CHECK_THROWS_WITH_AS(static_cast<void>(evaluate_model(forward, caps, bad, 0.1)),
                             doctest::Contains("unknown capability"), EvalError);
    }
    SUBCASE("perturbation before its original") {
        std::vector<TestInstance> bad{make_instance("i-c1", "p1", "i", "x", true)};
        CHECK_THROWS_WITH_AS(static_cast<void>(evaluate_model(forward, caps, bad, 0.1)),
                             doctest::Contains("has no original"), EvalError);
    }
    SUBCASE("MFT instance without an expected label") {
        std::vector<TestInstance> bad{make_instance("m-c1", "orig", "m", "x", false)};
        CHECK_THROWS_WITH_AS(static_cast<void>(evaluate_model(forward, caps, bad, 0.1)),
                             doctest::Contains("no expected label"), EvalError);
    }
}

TEST_CASE("evaluation records survive the jsonl round trip") {
    std::vector<Capability> caps(2);
    caps[0].slug = "m";
    caps[0].test_type = TestType::mft;
    caps[1].slug = "p";
    caps[1].test_type = TestType::dir;
    caps[1].direction = Direction::positive_up;
    std::vector<TestInstance> instances{
        make_instance("m-c1", "orig", "m", "t", false, 1),
        make_instance("p-c1", "orig", "p", "u", false),
        make_instance("p-c1", "p1", "p", "v", true),
    };
    auto out = evaluate_model(
        table_forward({{"t", {0, 0.4}}, {"u", {1, 0.9}}, {"v", {1, 0.7}}}),
        caps, instances, 0.1);

    auto body = eval_records_to_jsonl(out.records, 3, "swa");
    CHECK(body.find("\"seed\":3") != std::string::npos);
    CHECK(body.find("\"variant\":\"swa\"") != std::string::npos);

    auto back = eval_records_from_jsonl(body);
    REQUIRE(back.size() == out.records.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CAPTURE(i);
        CHECK(back[i].instance_id == out.records[i].instance_id);
        CHECK(back[i].capability == out.records[i].capability);
        CHECK(back[i].pred == out.records[i].pred);
        CHECK(back[i].confidence == doctest::Approx(out.records[i].confidence));
        CHECK(back[i].has_mft_failed == out.records[i].has_mft_failed);
        CHECK(back[i].mft_failed == out.records[i].mft_failed);
        CHECK(back[i].has_dir == out.records[i].has_dir);
        CHECK(back[i].dir_direction == out.records[i].dir_direction);
        CHECK(back[i].dir_failed == out.records[i].dir_failed);
        CHECK(back[i].failed() == out.records[i].failed());
    }
}
