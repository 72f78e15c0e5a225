#ifndef LERAY_EXPLORE_HPP
#define LERAY_EXPLORE_HPP

#include <cstdint>

#include "leray/simplicial_complex.hpp"

namespace leray {

// Deterministic sample stream of random complexes. Requires
// 0 ≤ dim_min ≤ dim_max, dim_max + 1 ≤ n_vertices ≤ 64, n_facets ≥ 1.
struct ExploreConfig {
    int n_vertices = 8;
    int n_facets = 5;
    int dim_min = 1;
    int dim_max = 3;
    std::uint64_t seed = 0;
};

// Sample #index of the stream. Keyed by (seed, index) through a split
// generator, so samples are reproducible individually and independent of
// evaluation order. Facet sizes are uniform in [dim_min+1, dim_max+1]; the
// draw is antichain-reduced; vertices that end up unused are dropped and the
// survivors keep their decimal names ("1".."n").
SimplicialComplex random_complex(const ExploreConfig& cfg, std::uint64_t index);

// SplitMix64; the stream underlying random_complex, exposed for tests that
// need auxiliary deterministic choices (e.g. random orderings).
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound ≥ 1. Plain reduction: portability and
    // determinism matter here, sampling bias at these bounds does not.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// The generator keyed by (seed, index).
SplitMix64 keyed_rng(std::uint64_t seed, std::uint64_t index);

}  // namespace leray

#endif
