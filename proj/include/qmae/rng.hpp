#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace qmae::rng {

// All randomness in the project goes through these helpers on top of
// std::mt19937_64, whose output sequence is fixed by the standard. The
// mappings below avoid std::*_distribution, which is implementation
// defined, so identical seeds give identical results on any platform.

/// Uniform double in [0, 1) with 53 bits of precision.
inline double canonical(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * canonical(gen);
}

/// Unbiased uniform integer in [0, n) via rejection sampling.
inline std::uint64_t below(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % n;
}

/// k distinct values from {0, ..., n-1}, ascending order.
/// Partial Fisher-Yates over an index table, then sorted for stable output.
inline std::vector<std::size_t> sample_without_replacement(std::mt19937_64& gen,
                                                           std::size_t n,
                                                           std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(below(gen, n - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> picked(pool.begin(), pool.begin() + static_cast<long>(k));
    std::sort(picked.begin(), picked.end());
    return picked;
}

} // namespace qmae::rng
