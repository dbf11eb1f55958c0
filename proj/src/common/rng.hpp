#ifndef SEEDSTAB_COMMON_RNG_HPP
#define SEEDSTAB_COMMON_RNG_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace seedstab {

// Deterministic RNG built on std::mt19937_64 (whose output sequence is fixed
// by the standard) with hand-rolled mappings. The std:: distribution classes
// are implementation-defined and would break cross-toolchain reproducibility,
// so they are never used here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Unbiased integer in [0, n) via masked rejection. n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
        std::uint64_t x;
        do {
            x = next_u64() & mask;
        } while (x >= n);
        return x;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices from [0, n), in ascending order. k is clamped to n.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
        if (k > n) k = n;
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        std::sort(idx.begin(), idx.end());
        return idx;
    }

private:
    std::mt19937_64 eng_;
};

// Stable seed derivation for named sub-streams (per capability, per case, ...).
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](unsigned char c) {
        h ^= c;
        h *= 1099511628211ull;
    };
    for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(base >> (8 * i)));
    for (char c : tag) mix(static_cast<unsigned char>(c));
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t n) {
    std::uint64_t h = derive_seed(base, tag);
    h ^= n + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

}  // namespace seedstab

#endif
