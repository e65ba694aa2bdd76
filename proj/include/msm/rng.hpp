#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace msm {

// 64-bit FNV-1a hash; used to derive per-stream seeds from stream names.
inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

// One application of the splitmix64 finalizer; decorrelates related seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic random source: std::mt19937_64 (bit-stream fixed by the C++
// standard) with hand-rolled uniform mappings, so identical seeds produce
// identical draws on every toolchain.  std::uniform_*_distribution is
// deliberately avoided: its output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    // Independent stream derived from (seed, stream name); streams with
    // distinct names never share state.
    Rng(std::uint64_t seed, std::string_view stream_name)
        : engine_(splitmix64(seed ^ fnv1a64(stream_name))) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform draw from [lo, hi) using the top 53 bits of one engine output.
    double uniform_double(double lo, double hi) {
        const double unit = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return lo + unit * (hi - lo);
    }

    // Uniform integer in [lo, hi], inclusive, by rejection sampling.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t range =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (range == 0) return static_cast<std::int64_t>(next_u64());
        const std::uint64_t threshold = (0 - range) % range;
        std::uint64_t draw = next_u64();
        while (draw < threshold) draw = next_u64();
        return lo + static_cast<std::int64_t>(draw % range);
    }

    // Uniform index in [0, n); n must be positive.
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1));
    }

    bool bernoulli(double p) { return uniform_double(0.0, 1.0) < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace msm
