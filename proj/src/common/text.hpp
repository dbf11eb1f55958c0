#ifndef SEEDSTAB_COMMON_TEXT_HPP
#define SEEDSTAB_COMMON_TEXT_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace seedstab {

// A token with its byte span in the source text, case preserved.
struct TokenSpan {
    std::size_t offset = 0;
    std::size_t length = 0;
    std::string token;
};

// Splits on whitespace and ASCII punctuation; non-ASCII bytes are kept as
// token characters so UTF-8 input survives untouched.
std::vector<TokenSpan> tokenize_spans(std::string_view text);

// Lowercased tokens (the model-side view of a text).
std::vector<std::string> tokenize(std::string_view text);

std::string to_lower(std::string_view s);

// Trim + lowercase + collapse internal whitespace runs to single spaces.
std::string normalize_phrase(std::string_view s);

}  // namespace seedstab

#endif
