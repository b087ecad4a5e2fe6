#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace commrank {

/// splitmix64 finalizer. Used to derive independent seeds from structured
/// inputs (master seed, run indices, ...).
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Folds a sequence of fields into one seed by chaining mix64 over them.
/// Order-sensitive: derive_seed({a,b}) != derive_seed({b,a}) in general.
constexpr std::uint64_t derive_seed(std::initializer_list<std::uint64_t> fields) {
    std::uint64_t s = 0x6a09e667f3bcc909ULL;  // arbitrary non-zero start
    for (std::uint64_t f : fields) s = mix64(s ^ mix64(f));
    return s;
}

/// Deterministic pseudo-random stream. Same seed, same stream, on every
/// platform: the engine is the standardized mt19937_64, and bounded draws
/// and shuffles are implemented here (the standard library's distributions
/// are not bit-stable across implementations).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). Unbiased via rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        // threshold = 2^64 mod bound; values under it would bias the draw
        const std::uint64_t threshold = (-bound) % bound;
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) return x % bound;
        }
    }

    /// Fisher-Yates shuffle driven by below().
    template <typename T>
    void shuffle(std::vector<T>& v) {
        shuffle_range(v, 0, v.size());
    }

    /// Shuffles v[first, last).
    template <typename T>
    void shuffle_range(std::vector<T>& v, std::size_t first, std::size_t last) {
        for (std::size_t i = last - first; i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[first + i - 1], v[first + j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace commrank
