#pragma once

#include <cstdint>
#include <random>

namespace layerforge::detail {

using Rng = std::mt19937_64;

// Independent stream per (seed, index); stable across platforms.
inline Rng make_stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

// Uniform integer in [0, bound). std::uniform_int_distribution is
// implementation-defined, so outputs would differ between standard libraries.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x <= limit) return x % bound;
    }
}

}  // namespace layerforge::detail
