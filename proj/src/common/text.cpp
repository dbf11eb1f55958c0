#include "common/text.hpp"

#include <cctype>

namespace seedstab {

namespace {

bool is_token_char(unsigned char c) {
    return std::isalnum(c) || c >= 0x80;
}

}  // namespace

std::vector<TokenSpan> tokenize_spans(std::string_view text) {
    std::vector<TokenSpan> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_token_char(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && is_token_char(static_cast<unsigned char>(text[i]))) ++i;
        out.push_back({start, i - start, std::string(text.substr(start, i - start))});
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& span : tokenize_spans(text)) out.push_back(to_lower(span.token));
    return out;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string normalize_phrase(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = true;  // leading spaces dropped
    for (char ch : s) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (std::isspace(c)) {
            if (!in_space) out.push_back(' ');
            in_space = true;
        } else {
            out.push_back(static_cast<char>(std::tolower(c)));
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

}  // namespace seedstab
