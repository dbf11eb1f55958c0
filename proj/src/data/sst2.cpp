#include "data/sst2.hpp"

#include <charconv>

#include "common/errors.hpp"
#include "common/fsio.hpp"
#include "common/text.hpp"

namespace seedstab::data {

namespace {

// Splits "left|right" on the last '|' so phrases containing '|' still parse.
bool split_pipe_last(const std::string& line, std::string& left, std::string& right) {
    std::size_t bar = line.rfind('|');
    if (bar == std::string::npos) return false;
    left = line.substr(0, bar);
    right = line.substr(bar + 1);
    return true;
}

}  // namespace

PhraseDictionary PhraseDictionary::load(const std::filesystem::path& dictionary_path,
                                        const std::filesystem::path& labels_path) {
    auto dict_lines = read_lines(dictionary_path);
    if (dict_lines.empty()) throw DataError(dictionary_path.string() + ": empty file");

    std::unordered_map<long long, std::string> phrase_by_id;
    phrase_by_id.reserve(dict_lines.size());
    for (std::size_t i = 0; i < dict_lines.size(); ++i) {
        const auto& line = dict_lines[i];
        if (line.empty()) continue;
        std::string phrase, id_str;
        if (!split_pipe_last(line, phrase, id_str))
            throw DataError(dictionary_path.string() + ":" + std::to_string(i + 1) +
                            ": expected \"phrase|phrase_id\"");
        long long id = 0;
        auto [ptr, ec] = std::from_chars(id_str.data(), id_str.data() + id_str.size(), id);
        if (ec != std::errc() || ptr != id_str.data() + id_str.size())
            throw DataError(dictionary_path.string() + ":" + std::to_string(i + 1) +
                            ": bad phrase id \"" + id_str + "\"");
        phrase_by_id[id] = phrase;
    }

    auto label_lines = read_lines(labels_path);
    if (label_lines.empty()) throw DataError(labels_path.string() + ": empty file");

    PhraseDictionary dict;
    dict.score_by_phrase.reserve(phrase_by_id.size());
    for (std::size_t i = 0; i < label_lines.size(); ++i) {
        const auto& line = label_lines[i];
        if (line.empty()) continue;
        if (i == 0 && line.find("phrase ids") != std::string::npos) continue;  // header
        std::string id_str, score_str;
        if (!split_pipe_last(line, id_str, score_str))
            throw DataError(labels_path.string() + ":" + std::to_string(i + 1) +
                            ": expected \"phrase_id|score\"");
        long long id = 0;
        auto [ptr, ec] = std::from_chars(id_str.data(), id_str.data() + id_str.size(), id);
        if (ec != std::errc() || ptr != id_str.data() + id_str.size())
            throw DataError(labels_path.string() + ":" + std::to_string(i + 1) +
                            ": bad phrase id \"" + id_str + "\"");
        double score = 0.0;
        try {
            std::size_t consumed = 0;
            score = std::stod(score_str, &consumed);
            if (consumed != score_str.size()) throw std::invalid_argument(score_str);
        } catch (const std::exception&) {
            throw DataError(labels_path.string() + ":" + std::to_string(i + 1) +
                            ": bad score \"" + score_str + "\"");
        }
        if (score < 0.0 || score > 1.0)
            throw DataError(labels_path.string() + ":" + std::to_string(i + 1) +
                            ": score out of [0, 1]: " + score_str);
        auto it = phrase_by_id.find(id);
        if (it == phrase_by_id.end()) continue;  // labeled id absent from dictionary
        dict.score_by_phrase[normalize_phrase(it->second)] = score;
    }
    if (dict.score_by_phrase.empty())
        throw DataError(labels_path.string() + ": no scored phrases resolved");
    return dict;
}

MatchResult match_test_labels(const std::vector<std::string>& sentences,
                              const PhraseDictionary& dict) {
    MatchResult result;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        const auto& sentence = sentences[i];
        auto it = dict.score_by_phrase.find(normalize_phrase(sentence));
        if (it == dict.score_by_phrase.end()) {
            result.unmatched.push_back(sentence);
            continue;
        }
        double score = it->second;
        if (score > 0.6) {
            result.matched.push_back({std::to_string(i + 1), sentence, 1});
        } else if (score <= 0.4) {
            result.matched.push_back({std::to_string(i + 1), sentence, 0});
        } else {
            result.dropped_band.push_back(sentence);
        }
    }
    return result;
}

}  // namespace seedstab::data
