#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace voctra {

// All randomness in the toolkit flows through this wrapper. The generator is
// std::mt19937_64 (fully specified by the C++ standard, so sequences are
// identical across platforms) and every distribution below is implemented
// by hand because the std <random> distributions are not portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Unbiased integer in [0, n) via rejection sampling. n must be > 0.
    std::uint64_t below(std::uint64_t n);

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; the second draw of each pair is cached.
    double normal();

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices from [0, n), in draw order. k <= n.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

private:
    std::mt19937_64 gen_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

// splitmix64 finalizer; used to derive stage/token seeds from a master seed.
std::uint64_t mix_bits(std::uint64_t x);

// FNV-1a 64-bit.
std::uint64_t fnv1a64(std::string_view data);

// Seed for a named pipeline stage: mix(seed, fnv1a(tag)).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag);

// Seed for an indexed stream (e.g. per token id).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace voctra
