#ifndef SEEDSTAB_COMMON_HASH_HPP
#define SEEDSTAB_COMMON_HASH_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace seedstab {

inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 14695981039346656037ull) {
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace seedstab

#endif
