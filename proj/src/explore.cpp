#include "leray/explore.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "leray/errors.hpp"

namespace leray {

SplitMix64 keyed_rng(std::uint64_t seed, std::uint64_t index) {
    // Mix the key so that nearby (seed, index) pairs land far apart.
    SplitMix64 mixer{seed ^ (0x632BE59BD9B4E019ull * (index + 1))};
    return SplitMix64{mixer.next()};
}

SimplicialComplex random_complex(const ExploreConfig& cfg, std::uint64_t index) {
    if (cfg.dim_min < 0 || cfg.dim_min > cfg.dim_max)
        throw InputError("need 0 <= dim_min <= dim_max");
    if (cfg.dim_max + 1 > cfg.n_vertices)
        throw InputError("dim_max + 1 exceeds the vertex count");
    if (cfg.n_vertices > VertexSet::kMaxVertices)
        throw InputError("at most 64 vertices");
    if (cfg.n_facets < 1) throw InputError("need at least one facet");

    SplitMix64 rng = keyed_rng(cfg.seed, index);
    std::vector<int> pool(static_cast<std::size_t>(cfg.n_vertices));
    std::iota(pool.begin(), pool.end(), 0);

    std::vector<VertexSet> facets;
    for (int i = 0; i < cfg.n_facets; ++i) {
        int size = cfg.dim_min + 1 +
                   static_cast<int>(rng.below(
                       static_cast<std::uint64_t>(cfg.dim_max - cfg.dim_min + 1)));
        // Partial Fisher-Yates: the first `size` entries become the draw.
        for (int j = 0; j < size; ++j) {
            std::size_t k = static_cast<std::size_t>(j) +
                            static_cast<std::size_t>(rng.below(
                                static_cast<std::uint64_t>(cfg.n_vertices - j)));
            std::swap(pool[static_cast<std::size_t>(j)], pool[k]);
        }
        VertexSet f;
        for (int j = 0; j < size; ++j) f = f.with(pool[static_cast<std::size_t>(j)]);
        facets.push_back(f);
    }
    facets = antichain_reduce(std::move(facets));

    // Drop unused vertices, keeping the survivors' decimal names.
    VertexSet used;
    for (VertexSet f : facets) used = used | f;
    std::vector<std::string> labels;
    std::vector<int> new_id(static_cast<std::size_t>(cfg.n_vertices), -1);
    for (int v : used) {
        new_id[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
        labels.push_back(std::to_string(v + 1));
    }
    std::vector<VertexSet> renamed;
    renamed.reserve(facets.size());
    for (VertexSet f : facets) {
        VertexSet g;
        for (int v : f) g = g.with(new_id[static_cast<std::size_t>(v)]);
        renamed.push_back(g);
    }
    return SimplicialComplex::from_facets(std::move(renamed), std::move(labels));
}

}  // namespace leray
