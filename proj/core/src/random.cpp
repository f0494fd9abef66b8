#include "hypermatch/random.hpp"

#include <numeric>
#include <stdexcept>

namespace hypermatch {

std::uint64_t splitmix_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit_at(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(splitmix_at(seed, index) >> 11) * 0x1.0p-53;
}

std::uint64_t CounterRng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below(0)");
    __extension__ using Wide = unsigned __int128;
    const Wide wide = static_cast<Wide>(next()) * bound;
    return static_cast<std::uint64_t>(wide >> 64);
}

std::vector<std::size_t> CounterRng::sample(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("sample larger than population");
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

}  // namespace hypermatch
