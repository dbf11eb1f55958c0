#include "textmodel/vocab.hpp"

#include <algorithm>
#include <map>

#include "common/errors.hpp"
#include "common/hash.hpp"
#include "common/text.hpp"

namespace seedstab::textmodel {

Vocab::Vocab() {
    add("<pad>");
    add("<unk>");
}

int Vocab::add(const std::string& token) {
    auto [it, inserted] = index_.emplace(token, static_cast<int>(tokens_.size()));
    if (!inserted) throw DataError("duplicate vocab token: " + token);
    tokens_.push_back(token);
    return it->second;
}

int Vocab::lookup(const std::string& token) const {
    auto it = index_.find(token);
    return it == index_.end() ? unk_index : it->second;
}

std::uint64_t Vocab::content_hash() const {
    std::uint64_t h = 14695981039346656037ull;
    for (const auto& t : tokens_) {
        h = fnv1a64(t, h);
        h = fnv1a64("\n", h);
    }
    return h;
}

Vocab build_vocab(const std::vector<std::string>& texts, int min_freq) {
    if (texts.empty()) throw DataError("build_vocab: empty corpus");
    if (min_freq < 1) throw DataError("build_vocab: min_freq must be >= 1");

    std::map<std::string, long> freq;
    for (const auto& text : texts) {
        for (const auto& tok : tokenize(text)) ++freq[tok];
    }

    std::vector<std::pair<std::string, long>> entries(freq.begin(), freq.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    Vocab vocab;
    for (const auto& [tok, count] : entries) {
        if (count >= min_freq) vocab.add(tok);
    }
    return vocab;
}

std::vector<int> encode(const std::string& text, const Vocab& vocab) {
    std::vector<int> ids;
    for (const auto& tok : tokenize(text)) ids.push_back(vocab.lookup(tok));
    if (ids.empty()) ids.push_back(Vocab::unk_index);
    return ids;
}

}  // namespace seedstab::textmodel
