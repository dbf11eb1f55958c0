#ifndef SEEDSTAB_TEXTMODEL_VOCAB_HPP
#define SEEDSTAB_TEXTMODEL_VOCAB_HPP

#include <string>
#include <unordered_map>
#include <vector>

namespace seedstab::textmodel {

// Dense token index; PAD and UNK are fixed at 0 and 1 so every vocab built
// from any corpus shares the special slots.
class Vocab {
public:
    static constexpr int pad_index = 0;
    static constexpr int unk_index = 1;

    Vocab();

    // Appends a token, returns its index. Rejects duplicates.
    int add(const std::string& token);

    int lookup(const std::string& token) const;
    const std::string& token(int index) const { return tokens_.at(static_cast<std::size_t>(index)); }
    int size() const { return static_cast<int>(tokens_.size()); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    std::uint64_t content_hash() const;

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, int> index_;
};

// Tokens with corpus frequency >= min_freq, ordered by frequency descending
// then lexicographically, after the two specials.
Vocab build_vocab(const std::vector<std::string>& texts, int min_freq);

// Lowercased whitespace/punctuation tokenization to indices; OOV -> UNK,
// empty text -> single UNK.
std::vector<int> encode(const std::string& text, const Vocab& vocab);

}  // namespace seedstab::textmodel

#endif
