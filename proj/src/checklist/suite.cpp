#include "checklist/suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "common/errors.hpp"
#include "common/rng.hpp"
#include "common/text.hpp"

namespace seedstab::checklist {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxProduct = 10'000'000;

std::string capitalize_first(std::string text) {
    if (!text.empty() && text[0] >= 'a' && text[0] <= 'z')
        text[0] = static_cast<char>(text[0] - 'a' + 'A');
    return text;
}

std::string replace_span(const std::string& text, const TokenSpan& span,
                         const std::string& replacement) {
    return text.substr(0, span.offset) + replacement + text.substr(span.offset + span.length);
}

// First token whose raw form is in the set (case-sensitive).
std::optional<TokenSpan> find_token_in(const std::string& text,
                                       const std::unordered_set<std::string>& set) {
    for (const auto& span : tokenize_spans(text))
        if (set.count(span.token)) return span;
    return std::nullopt;
}

// First token whose lowercased form is in the set.
std::optional<TokenSpan> find_token_lower_in(const std::string& text,
                                             const std::unordered_set<std::string>& set) {
    for (const auto& span : tokenize_spans(text))
        if (set.count(to_lower(span.token))) return span;
    return std::nullopt;
}

}  // namespace

std::string to_string(TestType type) {
    switch (type) {
        case TestType::mft: return "MFT";
        case TestType::inv: return "INV";
        case TestType::dir: return "DIR";
    }
    return "MFT";
}

std::string to_string(Direction direction) {
    switch (direction) {
        case Direction::none: return "none";
        case Direction::positive_up: return "positive-up";
        case Direction::negative_up: return "negative-up";
    }
    return "none";
}

TestType test_type_from_string(const std::string& s) {
    if (s == "MFT") return TestType::mft;
    if (s == "INV") return TestType::inv;
    if (s == "DIR") return TestType::dir;
    throw DataError("unknown test type \"" + s + "\"");
}

Direction direction_from_string(const std::string& s) {
    if (s == "none") return Direction::none;
    if (s == "positive-up") return Direction::positive_up;
    if (s == "negative-up") return Direction::negative_up;
    throw DataError("unknown direction \"" + s + "\"");
}

void SuiteConfig::validate() const {
    if (!(scale > 0.0) || scale > 100.0)
        throw ConfigError("suite.scale must be in (0, 100]");
    if (dir_tolerance < 0.0 || dir_tolerance >= 1.0)
        throw ConfigError("suite.dir_tolerance must be in [0, 1)");
    if (k_change_names < 1) throw ConfigError("suite.k_change_names must be >= 1");
    if (k_polarizing < 1) throw ConfigError("suite.k_polarizing must be >= 1");
    if (k_change_neutral < 1) throw ConfigError("suite.k_change_neutral must be >= 1");
    if (k_change_industries < 0)
        throw ConfigError("suite.k_change_industries must be >= 0 (0 = all)");
}

std::vector<std::string> expand_template(
    const std::string& pattern,
    const std::map<std::string, std::vector<std::string>>& slot_lexicons,
    std::size_t cap, std::uint64_t seed) {
    // Parse into literal / slot segments.
    struct Segment {
        bool is_slot;
        std::string text;  // literal text or slot name
    };
    std::vector<Segment> segments;
    std::vector<const std::vector<std::string>*> slot_lists;
    std::size_t pos = 0;
    while (pos < pattern.size()) {
        std::size_t open = pattern.find('{', pos);
        if (open == std::string::npos) {
            segments.push_back({false, pattern.substr(pos)});
            break;
        }
        if (open > pos) segments.push_back({false, pattern.substr(pos, open - pos)});
        std::size_t close = pattern.find('}', open);
        if (close == std::string::npos)
            throw ConfigError("template has unterminated slot: " + pattern);
        std::string slot = pattern.substr(open + 1, close - open - 1);
        auto it = slot_lexicons.find(slot);
        if (it == slot_lexicons.end())
            throw ConfigError("template slot \"{" + slot + "}\" has no lexicon (pattern: " +
                              pattern + ")");
        if (it->second.empty())
            throw ConfigError("template slot \"{" + slot + "}\" has an empty lexicon");
        segments.push_back({true, slot});
        slot_lists.push_back(&it->second);
        pos = close + 1;
    }

    std::size_t product = 1;
    for (const auto* list : slot_lists) {
        if (product > kMaxProduct / list->size())
            throw ConfigError("template expansion too large: " + pattern);
        product *= list->size();
    }

    auto render = [&](std::size_t index) {
        // Odometer: last slot varies fastest.
        std::vector<std::size_t> choice(slot_lists.size());
        for (std::size_t s = slot_lists.size(); s-- > 0;) {
            choice[s] = index % slot_lists[s]->size();
            index /= slot_lists[s]->size();
        }
        std::string out;
        std::size_t slot_idx = 0;
        for (const auto& seg : segments) {
            if (seg.is_slot) out += (*slot_lists[slot_idx])[choice[slot_idx]], ++slot_idx;
            else out += seg.text;
        }
        return out;
    };

    std::vector<std::string> out;
    if (product <= cap) {
        out.reserve(product);
        for (std::size_t i = 0; i < product; ++i) out.push_back(render(i));
    } else {
        Rng rng(seed);
        for (std::size_t i : rng.sample_indices(product, cap)) out.push_back(render(i));
    }
    return out;
}

std::vector<std::string> perturb_change_names(const std::string& text,
                                              const std::vector<std::string>& name_lexicon,
                                              const std::vector<std::string>& replacement_pool,
                                              int k, std::uint64_t seed) {
    std::unordered_set<std::string> names(name_lexicon.begin(), name_lexicon.end());
    auto span = find_token_in(text, names);
    if (!span) return {};

    std::vector<std::string> pool;
    pool.reserve(replacement_pool.size());
    for (const auto& name : replacement_pool)
        if (name != span->token) pool.push_back(name);
    if (pool.empty()) return {};

    Rng rng(seed);
    std::vector<std::string> out;
    for (std::size_t i : rng.sample_indices(pool.size(), static_cast<std::size_t>(k)))
        out.push_back(replace_span(text, *span, pool[i]));
    return out;
}

std::vector<std::string> perturb_change_neutral(const std::string& text,
                                                const std::vector<std::string>& neutral_lexicon,
                                                int k, std::uint64_t seed) {
    std::unordered_set<std::string> neutral(neutral_lexicon.begin(), neutral_lexicon.end());
    auto span = find_token_lower_in(text, neutral);
    if (!span) return {};

    std::string original_lower = to_lower(span->token);
    bool capitalized = !span->token.empty() && span->token[0] >= 'A' && span->token[0] <= 'Z';
    std::vector<std::string> pool;
    for (const auto& word : neutral_lexicon)
        if (word != original_lower) pool.push_back(word);
    if (pool.empty()) return {};

    Rng rng(seed);
    std::vector<std::string> out;
    for (std::size_t i : rng.sample_indices(pool.size(), static_cast<std::size_t>(k))) {
        std::string replacement = capitalized ? capitalize_first(pool[i]) : pool[i];
        out.push_back(replace_span(text, *span, replacement));
    }
    return out;
}

std::string perturb_add_phrase(const std::string& text, const std::string& phrase) {
    return text + " " + phrase;
}

namespace {

struct MftSpec {
    std::string name;
    std::string slug;
    int base_n;
    std::vector<std::pair<std::string, int>> templates;  // pattern, expected label
    bool unvalidated = false;
};

std::vector<MftSpec> mft_specs(const data::LexiconSet& lex) {
    std::vector<MftSpec> specs;

    specs.push_back({"Single Positive Words", "single_positive_words", 22,
                     {{"{pos_word}", 1}}});
    specs.push_back({"Single Negative Words", "single_negative_words", 14,
                     {{"{neg_word}", 0}}});
    specs.push_back({"Sentiment-laden Words in Context", "sentiment_laden_words", 1350,
                     {{"I {pos_verb_present} {det} {noun}.", 1},
                      {"I {neg_verb_present} {det} {noun}.", 0},
                      {"I {pos_verb_past} {det} {noun}.", 1},
                      {"I {neg_verb_past} {det} {noun}.", 0},
                      {"We {pos_verb_past} {det} {noun}.", 1},
                      {"We {neg_verb_past} {det} {noun}.", 0}}});
    specs.push_back({"Temporal Sentiment Change", "temporal_sentiment_change", 2152,
                     {{"I used to think this {noun} was {neg_adj}, but now I find it {pos_adj}.", 1},
                      {"I used to think this {noun} was {pos_adj}, but now I find it {neg_adj}.", 0},
                      {"I used to {neg_verb_present} this {noun}, but now I {pos_verb_present} it.", 1},
                      {"I used to {pos_verb_present} this {noun}, but now I {neg_verb_present} it.", 0}}});
    specs.push_back({"Negation of Positive Sentences", "negation_of_positive", 1350,
                     {{"This {noun} is not {pos_adj}.", 0},
                      {"This {noun} was not {pos_adj}.", 0},
                      {"That {noun} was not {pos_adj}.", 0},
                      {"The {noun} is not {pos_adj}.", 0},
                      {"I do not {pos_verb_present} this {noun}.", 0},
                      {"I did not {pos_verb_present} that {noun}.", 0},
                      {"We do not {pos_verb_present} the {noun}.", 0}}});
    specs.push_back({"Negation of Positive, neutral words in the middle",
                     "negation_of_positive_neutral", 500,
                     {{"I do not think, {hedge}, that this {noun} is {pos_adj}.", 0},
                      {"This {noun}, {hedge}, is not {pos_adj}.", 0}}});

    MftSpec genre{"Movie Genre Specific Sentiments", "genre_sentiments", 736, {}};
    static const char* frames[] = {
        "That {genre} movie was {adj}.",      "This {genre} film felt {adj}.",
        "The {genre} movie seemed {adj}.",    "That {genre} film was really {adj}.",
        "This {genre} movie is {adj}.",       "The {genre} film was genuinely {adj}.",
        "Their {genre} movie felt {adj}.",    "The new {genre} film is {adj}.",
        "Every scene in that {genre} movie felt {adj}.",
        "Overall the {genre} movie was {adj}.",
        "The whole {genre} film is {adj}."};
    for (const auto& g : lex.get("genres")) {
        for (const char* frame : frames) {
            std::string fit = frame, misfit = frame;
            auto fill_in = [&](std::string& p, const std::string& adj_slot) {
                std::size_t at;
                while ((at = p.find("{genre}")) != std::string::npos)
                    p.replace(at, 7, g);
                while ((at = p.find("{adj}")) != std::string::npos)
                    p.replace(at, 5, adj_slot);
            };
            fill_in(fit, "{fit_" + g + "}");
            fill_in(misfit, "{misfit_" + g + "}");
            genre.templates.emplace_back(fit, 1);
            genre.templates.emplace_back(misfit, 0);
        }
    }
    specs.push_back(std::move(genre));

    specs.push_back({"Movie Sentiments", "movie_sentiments", 58,
                     {{"That movie was {pos_adj}.", 1},
                      {"That movie was {neg_adj}.", 0}}});
    specs.push_back({"Movie Industries Sentiments", "industry_sentiments", 1200,
                     {{"{industry} makes {pos_adj} movies.", 1},
                      {"{industry} makes {neg_adj} movies.", 0},
                      {"{industry} keeps releasing {pos_adj} films.", 1},
                      {"{industry} keeps releasing {neg_adj} films.", 0}}});

    specs.push_back({"Negation of Negative Sentences", "negation_of_negative", 1350,
                     {{"This {noun} is not {neg_adj}.", 1},
                      {"This {noun} was not {neg_adj}.", 1},
                      {"That {noun} was not {neg_adj}.", 1},
                      {"The {noun} is not {neg_adj}.", 1},
                      {"I do not {neg_verb_present} this {noun}.", 1},
                      {"I did not {neg_verb_present} that {noun}.", 1},
                      {"We do not {neg_verb_present} the {noun}.", 1}},
                     true});
    return specs;
}

std::map<std::string, std::vector<std::string>> slot_map(const data::LexiconSet& lex) {
    std::map<std::string, std::vector<std::string>> slots;
    slots["pos_word"] = lex.get("positive_words");
    slots["neg_word"] = lex.get("negative_words");
    slots["pos_adj"] = lex.get("positive_adjectives");
    slots["neg_adj"] = lex.get("negative_adjectives");
    slots["pos_verb_present"] = lex.get("positive_verbs_present");
    slots["neg_verb_present"] = lex.get("negative_verbs_present");
    slots["pos_verb_past"] = lex.get("positive_verbs_past");
    slots["neg_verb_past"] = lex.get("negative_verbs_past");
    slots["det"] = {"that", "this", "the"};
    slots["noun"] = lex.get("movie_nouns");
    slots["hedge"] = lex.get("hedges");
    slots["industry"] = lex.get("industries");
    for (const auto& g : lex.get("genres")) {
        slots["fit_" + g] = lex.get("genre_fit_" + g);
        slots["misfit_" + g] = lex.get("genre_misfit_" + g);
    }
    return slots;
}

int scaled(double scale, int base) {
    long long n = std::llround(scale * base);
    return n < 1 ? 1 : static_cast<int>(n);
}

}  // namespace

Suite build_suite(const SuiteConfig& config,
                  const std::vector<data::LabeledInstance>& test_corpus,
                  const data::NamePolarityResult& mined_names,
                  const data::LexiconSet& lexicons) {
    config.validate();
    if (test_corpus.empty()) throw DataError("test corpus is empty");

    Suite suite;
    auto slots = slot_map(lexicons);

    // ---- MFT capabilities: generated from scratch. ----
    for (const auto& spec : mft_specs(lexicons)) {
        if (spec.unvalidated && !config.include_unvalidated) continue;

        std::vector<std::pair<std::string, int>> pool;
        for (const auto& [pattern, label] : spec.templates)
            for (auto& text : expand_template(pattern, slots, kMaxProduct, 0))
                pool.emplace_back(std::move(text), label);

        Capability cap;
        cap.name = spec.name;
        cap.slug = spec.slug;
        cap.test_type = TestType::mft;
        cap.n_target = scaled(config.scale, spec.base_n);
        cap.unvalidated = spec.unvalidated;

        Rng rng(derive_seed(config.seed, spec.slug));
        auto chosen = rng.sample_indices(pool.size(),
                                         static_cast<std::size_t>(cap.n_target));
        int case_no = 0;
        for (std::size_t idx : chosen) {
            ++case_no;
            TestInstance inst;
            inst.case_id = spec.slug + "-c" + std::to_string(case_no);
            inst.instance_id = inst.case_id + "-orig";
            inst.capability = spec.slug;
            inst.text = pool[idx].first;
            inst.perturbed = false;
            inst.expected_label = pool[idx].second;
            suite.instances.push_back(std::move(inst));
        }
        cap.n_cases = case_no;
        cap.m_instances = case_no;
        suite.capabilities.push_back(std::move(cap));
    }

    // ---- INV / DIR capabilities: perturb the test corpus. ----
    const auto& all_names = lexicons.get("first_names");
    std::unordered_set<std::string> name_set(all_names.begin(), all_names.end());
    std::unordered_set<std::string> polarized(mined_names.positive_names.begin(),
                                              mined_names.positive_names.end());
    polarized.insert(mined_names.negative_names.begin(), mined_names.negative_names.end());
    std::vector<std::string> unpolarized_names;
    for (const auto& name : all_names)
        if (!polarized.count(name)) unpolarized_names.push_back(name);

    const auto& neutral = lexicons.get("neutral_words");
    std::unordered_set<std::string> neutral_set(neutral.begin(), neutral.end());
    const auto& industries = lexicons.get("industries");
    const std::string& pivot = industries.front();
    std::vector<std::string> other_industries(industries.begin() + 1, industries.end());

    // One perturbing capability, generically: filter, subsample, perturb.
    auto build_perturbing =
        [&](const std::string& name, const std::string& slug, TestType type,
            Direction direction, int base_n, bool unvalidated,
            const std::function<bool(const data::LabeledInstance&)>& eligible,
            const std::function<std::vector<std::string>(const data::LabeledInstance&, Rng&)>&
                perturb) {
            if (unvalidated && !config.include_unvalidated) return;

            Capability cap;
            cap.name = name;
            cap.slug = slug;
            cap.test_type = type;
            cap.direction = direction;
            cap.n_target = scaled(config.scale, base_n);
            cap.unvalidated = unvalidated;

            std::vector<std::size_t> pool;
            for (std::size_t i = 0; i < test_corpus.size(); ++i) {
                if (eligible(test_corpus[i])) pool.push_back(i);
            }
            cap.eligible = static_cast<int>(pool.size());
            cap.ineligible = static_cast<int>(test_corpus.size() - pool.size());
            if (pool.empty())
                throw DataError("capability \"" + name +
                                "\": no eligible test instances");

            Rng rng(derive_seed(config.seed, slug));
            auto chosen = rng.sample_indices(pool.size(),
                                             static_cast<std::size_t>(cap.n_target));
            int case_no = 0;
            for (std::size_t pick : chosen) {
                const auto& src = test_corpus[pool[pick]];
                auto texts = perturb(src, rng);
                if (texts.empty()) continue;  // hook vanished; skip signal
                ++case_no;
                std::string case_id = slug + "-c" + std::to_string(case_no);
                TestInstance orig;
                orig.case_id = case_id;
                orig.instance_id = case_id + "-orig";
                orig.capability = slug;
                orig.text = src.text;
                orig.perturbed = false;
                orig.origin_id = src.id;
                suite.instances.push_back(std::move(orig));
                cap.m_instances += 1;
                int p = 0;
                for (auto& text : texts) {
                    ++p;
                    TestInstance inst;
                    inst.case_id = case_id;
                    inst.instance_id = case_id + "-p" + std::to_string(p);
                    inst.capability = slug;
                    inst.text = std::move(text);
                    inst.perturbed = true;
                    inst.origin_id = src.id;
                    suite.instances.push_back(std::move(inst));
                    cap.m_instances += 1;
                }
            }
            cap.n_cases = case_no;
            suite.capabilities.push_back(std::move(cap));
        };

    // Eligibility for name swaps also demands k distinct replacements so a
    // sampled case never has to be dropped afterwards.
    auto swappable = [&](const data::LabeledInstance& inst,
                         const std::vector<std::string>& replacement_pool, int k) {
        auto span = find_token_in(inst.text, name_set);
        if (!span) return false;
        auto hit = std::find(replacement_pool.begin(), replacement_pool.end(), span->token);
        int pool = static_cast<int>(replacement_pool.size()) -
                   (hit != replacement_pool.end() ? 1 : 0);
        return pool >= k;
    };
    auto sample_pool = [](Rng& rng, const std::vector<std::string>& pool, int k) {
        std::vector<std::string> out;
        for (std::size_t i : rng.sample_indices(pool.size(), static_cast<std::size_t>(k)))
            out.push_back(pool[i]);
        return out;
    };
    auto swap_name = [&](const data::LabeledInstance& src, Rng& rng,
                         const std::vector<std::string>& replacement_pool,
                         int k) -> std::vector<std::string> {
        auto span = find_token_in(src.text, name_set);
        if (!span) return {};
        std::vector<std::string> pool;
        for (const auto& name : replacement_pool)
            if (name != span->token) pool.push_back(name);
        if (static_cast<int>(pool.size()) < k) return {};  // not enough distinct swaps
        std::vector<std::string> out;
        for (const auto& name : sample_pool(rng, pool, k))
            out.push_back(replace_span(src.text, *span, name));
        return out;
    };

    // Change Neutral Words.
    build_perturbing(
        "Change Neutral Words", "change_neutral_words", TestType::inv, Direction::none, 500,
        false,
        [&](const data::LabeledInstance& inst) {
            return find_token_lower_in(inst.text, neutral_set).has_value();
        },
        [&](const data::LabeledInstance& src, Rng& rng) -> std::vector<std::string> {
            auto span = find_token_lower_in(src.text, neutral_set);
            if (!span) return {};
            std::string original_lower = to_lower(span->token);
            bool capitalized = span->token[0] >= 'A' && span->token[0] <= 'Z';
            std::vector<std::string> pool;
            for (const auto& word : neutral)
                if (word != original_lower) pool.push_back(word);
            int k = std::min<int>(config.k_change_neutral, static_cast<int>(pool.size()));
            std::vector<std::string> out;
            for (const auto& word : sample_pool(rng, pool, k))
                out.push_back(replace_span(src.text, *span,
                                           capitalized ? capitalize_first(word) : word));
            return out;
        });

    // Change Names: swap with names that carry no mined polarity.
    if (static_cast<int>(unpolarized_names.size()) <= config.k_change_names)
        throw DataError("capability \"Change Names\": name lexicon leaves fewer than " +
                        std::to_string(config.k_change_names + 1) + " unpolarized names");
    build_perturbing(
        "Change Names", "change_names", TestType::inv, Direction::none, 147, false,
        [&](const data::LabeledInstance& inst) {
            return swappable(inst, unpolarized_names, config.k_change_names);
        },
        [&](const data::LabeledInstance& src, Rng& rng) {
            return swap_name(src, rng, unpolarized_names, config.k_change_names);
        });

    // The four polarizing-name swaps.
    struct PolarizingSpec {
        const char* name;
        const char* slug;
        int instance_label;
        const std::vector<std::string>* names;
        const char* pool_desc;
        int base_n;
    };
    for (const auto& spec : std::vector<PolarizingSpec>{
             {"Negative names - Positive instances", "negative_names_positive_instances", 1,
              &mined_names.negative_names, "negative", 157},
             {"Positive names - Negative instances", "positive_names_negative_instances", 0,
              &mined_names.positive_names, "positive", 123},
             {"Negative names - Negative instances", "negative_names_negative_instances", 0,
              &mined_names.negative_names, "negative", 123},
             {"Positive names - Positive instances", "positive_names_positive_instances", 1,
              &mined_names.positive_names, "positive", 157}}) {
        if (static_cast<int>(spec.names->size()) < config.k_polarizing)
            throw DataError("capability \"" + std::string(spec.name) + "\" requires at least " +
                            std::to_string(config.k_polarizing) + " mined " + spec.pool_desc +
                            " names, found " + std::to_string(spec.names->size()));
        build_perturbing(
            spec.name, spec.slug, TestType::inv, Direction::none, spec.base_n, false,
            [&, label = spec.instance_label, names = spec.names](
                const data::LabeledInstance& inst) {
                return inst.label == label && swappable(inst, *names, config.k_polarizing);
            },
            [&, names = spec.names](const data::LabeledInstance& src, Rng& rng) {
                return swap_name(src, rng, *names, config.k_polarizing);
            });
    }

    // Change Movie Industries: pivot swapped for each listed alternative.
    build_perturbing(
        "Change Movie Industries", "change_movie_industries", TestType::inv, Direction::none,
        18, false,
        [&](const data::LabeledInstance& inst) {
            std::unordered_set<std::string> pivot_set{pivot};
            return find_token_in(inst.text, pivot_set).has_value();
        },
        [&](const data::LabeledInstance& src, Rng& rng) -> std::vector<std::string> {
            std::unordered_set<std::string> pivot_set{pivot};
            auto span = find_token_in(src.text, pivot_set);
            if (!span) return {};
            int k = config.k_change_industries == 0
                        ? static_cast<int>(other_industries.size())
                        : std::min<int>(config.k_change_industries,
                                        static_cast<int>(other_industries.size()));
            std::vector<std::string> out;
            for (const auto& ind : sample_pool(rng, other_industries, k))
                out.push_back(replace_span(src.text, *span, ind));
            return out;
        });

    // DIR: append phrases, expect the confidence to move with them.
    const auto& pos_phrases = lexicons.get("positive_phrases");
    const auto& neg_phrases = lexicons.get("negative_phrases");
    auto always = [](const data::LabeledInstance&) { return true; };
    build_perturbing("Add Positive Phrases", "add_positive_phrases", TestType::dir,
                     Direction::positive_up, 500, false, always,
                     [&](const data::LabeledInstance& src, Rng&) {
                         std::vector<std::string> out;
                         for (const auto& phrase : pos_phrases)
                             out.push_back(perturb_add_phrase(src.text, phrase));
                         return out;
                     });
    build_perturbing("Add Negative Phrases", "add_negative_phrases", TestType::dir,
                     Direction::negative_up, 500, false, always,
                     [&](const data::LabeledInstance& src, Rng&) {
                         std::vector<std::string> out;
                         for (const auto& phrase : neg_phrases)
                             out.push_back(perturb_add_phrase(src.text, phrase));
                         return out;
                     });

    // Unvalidated DIR: inject "not" after the first is/was.
    build_perturbing(
        "Add Negations", "add_negations", TestType::dir, Direction::negative_up, 500, true,
        [&](const data::LabeledInstance& inst) {
            std::unordered_set<std::string> hooks{"is", "was"};
            return inst.label == 1 && find_token_lower_in(inst.text, hooks).has_value();
        },
        [&](const data::LabeledInstance& src, Rng&) -> std::vector<std::string> {
            std::unordered_set<std::string> hooks{"is", "was"};
            auto span = find_token_lower_in(src.text, hooks);
            if (!span) return {};
            std::string text = src.text;
            text.insert(span->offset + span->length, " not");
            return {text};
        });

    return suite;
}

std::string suite_instances_to_jsonl(const std::vector<TestInstance>& instances) {
    std::string body;
    for (const auto& inst : instances) {
        json j;
        j["instance_id"] = inst.instance_id;
        j["case_id"] = inst.case_id;
        j["capability"] = inst.capability;
        j["text"] = inst.text;
        j["perturbed"] = inst.perturbed;
        if (inst.expected_label >= 0) j["expected_label"] = inst.expected_label;
        if (!inst.origin_id.empty()) j["origin_id"] = inst.origin_id;
        body += j.dump();
        body += '\n';
    }
    return body;
}

std::vector<TestInstance> suite_instances_from_jsonl(const std::string& body) {
    std::vector<TestInstance> out;
    std::size_t start = 0, line_no = 0;
    while (start < body.size()) {
        std::size_t nl = body.find('\n', start);
        if (nl == std::string::npos) nl = body.size();
        ++line_no;
        std::string_view line(body.data() + start, nl - start);
        start = nl + 1;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw DataError("suite jsonl line " + std::to_string(line_no) + ": bad json");
        TestInstance inst;
        inst.instance_id = j.at("instance_id").get<std::string>();
        inst.case_id = j.at("case_id").get<std::string>();
        inst.capability = j.at("capability").get<std::string>();
        inst.text = j.at("text").get<std::string>();
        inst.perturbed = j.at("perturbed").get<bool>();
        inst.expected_label = j.value("expected_label", -1);
        inst.origin_id = j.value("origin_id", std::string{});
        out.push_back(std::move(inst));
    }
    return out;
}

std::string suite_manifest_json(const Suite& suite, const SuiteConfig& config) {
    json caps = json::array();
    long long total_cases = 0, total_instances = 0;
    for (const auto& cap : suite.capabilities) {
        json c;
        c["name"] = cap.name;
        c["slug"] = cap.slug;
        c["test_type"] = to_string(cap.test_type);
        c["direction"] = to_string(cap.direction);
        c["n_target"] = cap.n_target;
        c["n_cases"] = cap.n_cases;
        c["m_instances"] = cap.m_instances;
        c["eligible"] = cap.eligible;
        c["ineligible"] = cap.ineligible;
        c["unvalidated"] = cap.unvalidated;
        caps.push_back(std::move(c));
        total_cases += cap.n_cases;
        total_instances += cap.m_instances;
    }
    json j;
    j["capabilities"] = std::move(caps);
    j["config"]["seed"] = config.seed;
    j["config"]["scale"] = config.scale;
    j["config"]["dir_tolerance"] = config.dir_tolerance;
    j["config"]["include_unvalidated"] = config.include_unvalidated;
    j["config"]["k_change_names"] = config.k_change_names;
    j["config"]["k_polarizing"] = config.k_polarizing;
    j["config"]["k_change_neutral"] = config.k_change_neutral;
    j["config"]["k_change_industries"] = config.k_change_industries;
    j["totals"]["n_cases"] = total_cases;
    j["totals"]["m_instances"] = total_instances;
    return j.dump(2) + "\n";
}

std::vector<Capability> capabilities_from_manifest_json(const std::string& body) {
    json j = json::parse(body, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("capabilities"))
        throw DataError("suite manifest: bad json");
    std::vector<Capability> out;
    for (const auto& c : j["capabilities"]) {
        Capability cap;
        cap.name = c.at("name").get<std::string>();
        cap.slug = c.at("slug").get<std::string>();
        cap.test_type = test_type_from_string(c.at("test_type").get<std::string>());
        cap.direction = direction_from_string(c.at("direction").get<std::string>());
        cap.n_target = c.at("n_target").get<int>();
        cap.n_cases = c.at("n_cases").get<int>();
        cap.m_instances = c.at("m_instances").get<int>();
        cap.eligible = c.value("eligible", 0);
        cap.ineligible = c.value("ineligible", 0);
        cap.unvalidated = c.value("unvalidated", false);
        out.push_back(std::move(cap));
    }
    return out;
}

}  // namespace seedstab::checklist
