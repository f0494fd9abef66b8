#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hypermatch {

/// Counter-based SplitMix64: draw i of a stream is
///   z = seed + (i + 1) * 0x9E3779B97F4A7C15
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// which is exactly the sequential SplitMix64 output, so any draw can be
/// recomputed from (seed, i) alone. Uniform doubles use the top 53 bits;
/// bounded integers use the high word of a 64x64 multiply.
std::uint64_t splitmix_at(std::uint64_t seed, std::uint64_t index);
double unit_at(std::uint64_t seed, std::uint64_t index);

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next() { return splitmix_at(seed_, counter_++); }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }
    template <typename T>
    void shuffle(std::vector<T>& items) { shuffle(std::span<T>(items)); }

    /// k distinct values from [0, n), in draw order (partial Fisher-Yates).
    std::vector<std::size_t> sample(std::size_t n, std::size_t k);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace hypermatch
