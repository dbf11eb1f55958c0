#include "data/names.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "common/errors.hpp"
#include "common/text.hpp"

namespace seedstab::data {

NamePolarityResult extract_name_polarity(const std::vector<LabeledInstance>& train,
                                         const std::vector<std::string>& name_lexicon,
                                         int min_count,
                                         const std::vector<std::string>& exclude) {
    if (name_lexicon.empty()) throw DataError("name lexicon is empty");
    if (min_count < 1) throw ConfigError("name_min_count must be >= 1");

    std::unordered_set<std::string> lexicon(name_lexicon.begin(), name_lexicon.end());
    for (const auto& name : exclude) lexicon.erase(name);

    struct Tally {
        int count = 0;
        int positive = 0;
    };
    std::map<std::string, Tally> tallies;  // ordered for stable output

    for (const auto& inst : train) {
        std::unordered_set<std::string> seen_here;
        for (const auto& span : tokenize_spans(inst.text)) {
            if (span.token.empty() || span.token[0] < 'A' || span.token[0] > 'Z') continue;
            if (!lexicon.count(span.token)) continue;
            if (!seen_here.insert(span.token).second) continue;
            auto& tally = tallies[span.token];
            tally.count += 1;
            tally.positive += inst.label;
        }
    }

    NamePolarityResult result;
    for (const auto& [name, tally] : tallies) {
        NamePolarity rec;
        rec.name = name;
        rec.count = tally.count;
        rec.mean_label = static_cast<double>(tally.positive) / tally.count;
        if (tally.count >= min_count) {
            if (tally.positive == tally.count) result.positive_names.push_back(name);
            else if (tally.positive == 0) result.negative_names.push_back(name);
        }
        result.all.push_back(std::move(rec));
    }
    return result;
}

}  // namespace seedstab::data
