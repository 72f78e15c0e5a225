#include "leray/leray.hpp"

#include <algorithm>
#include <cassert>
#include <thread>

#include "leray/errors.hpp"
#include "leray/homology.hpp"

namespace leray {

namespace {

// Split [0, count) into one contiguous chunk per worker, run per_chunk on
// each, and fold the partial results in chunk order. The folding order is
// fixed, so results never depend on the thread count or on scheduling.
template <typename R, typename PerChunk, typename Merge>
R scan_windows(std::uint64_t count, int threads, R init, PerChunk per_chunk, Merge merge) {
    if (threads < 1) throw InputError("thread count must be >= 1");
    int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), count ? count : 1));
    if (workers <= 1) return merge(std::move(init), per_chunk(0, count));

    std::vector<R> partial(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::uint64_t chunk = count / static_cast<std::uint64_t>(workers);
    std::uint64_t extra = count % static_cast<std::uint64_t>(workers);
    std::uint64_t lo = 0;
    for (int t = 0; t < workers; ++t) {
        std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(t) < extra ? 1 : 0);
        pool.emplace_back([&, t, lo, hi] { partial[static_cast<std::size_t>(t)] = per_chunk(lo, hi); });
        lo = hi;
    }
    for (auto& th : pool) th.join();
    R acc = std::move(init);
    for (auto& p : partial) acc = merge(std::move(acc), std::move(p));
    return acc;
}

struct ScanBest {
    int dim = -1;  // largest dim with a non-zero reduced Betti number seen
    std::uint64_t window = 0;
    bool found = false;
};

ScanBest better(ScanBest a, ScanBest b) {
    if (!b.found) return a;
    if (!a.found) return b;
    if (b.dim != a.dim) return b.dim > a.dim ? b : a;
    return b.window < a.window ? b : a;
}

bool window_is_face(std::span<const VertexSet> facets, VertexSet w) {
    for (VertexSet f : facets)
        if (w.subset_of(f)) return true;
    return false;
}

}  // namespace

LerayWitness leray_number(std::span<const VertexSet> facets, VertexSet universe,
                          const LerayOptions& opt) {
    if (facets.empty()) throw InputError("void complex");
    VertexSet support;
    for (VertexSet f : facets) support = support | f;
    if (!support.subset_of(universe)) throw InputError("facets leave the given universe");
    // Windows meeting V ∖ support only add isolated pieces of nothing: the
    // induced complex equals the one induced on W ∩ support.
    const int n = support.size();
    if (n > opt.max_window_vertices)
        throw CapExceeded("window enumeration over " + std::to_string(n) +
                          " vertices exceeds the configured cap of " +
                          std::to_string(opt.max_window_vertices));
    const std::vector<int> verts = support.members();
    const std::uint64_t total = std::uint64_t{1} << n;

    auto per_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        ScanBest best;
        std::vector<VertexSet> wf;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (std::popcount(mask) < 2) continue;
            VertexSet w;
            for (int b = 0; b < n; ++b)
                if ((mask >> b) & 1) w = w.with(verts[static_cast<std::size_t>(b)]);
            if (window_is_face(facets, w)) continue;  // simplex window: acyclic
            wf.clear();
            int dim_w = -1;
            for (VertexSet f : facets) {
                VertexSet cut = f & w;
                dim_w = std::max(dim_w, cut.size() - 1);
                wf.push_back(cut);
            }
            if (dim_w <= best.dim) continue;  // cannot beat the best so far
            std::vector<VertexSet> reduced = antichain_reduce(wf);
            int t = top_nonzero_betti(reduced, best.dim);
            if (t > best.dim) best = ScanBest{t, w.bits(), true};
        }
        return best;
    };
    ScanBest best = scan_windows<ScanBest>(total, opt.threads, ScanBest{}, per_chunk, better);

    LerayWitness out;
    if (best.found) {
        out.leray = best.dim + 1;
        out.witness_set = VertexSet::from_bits(best.window);
        out.witness_dim = best.dim;
    }
    return out;
}

LerayWitness leray_number(const SimplicialComplex& x, const LerayOptions& opt) {
    if (x.is_void()) throw InputError("void complex");
    return leray_number(std::span<const VertexSet>(x.facets()), x.universe(), opt);
}

int BettiTable::max_j() const {
    int best = 0;
    for (const auto& [key, value] : entries)
        if (value != 0) best = std::max(best, key.second);
    return best;
}

BettiTable hochster_table(const SimplicialComplex& x, const LerayOptions& opt) {
    if (x.is_void()) throw InputError("void complex");
    const int n = x.num_vertices();
    if (n > opt.max_window_vertices)
        throw CapExceeded("window enumeration over " + std::to_string(n) +
                          " vertices exceeds the configured cap of " +
                          std::to_string(opt.max_window_vertices));
    const std::uint64_t total = std::uint64_t{1} << n;
    std::span<const VertexSet> facets(x.facets());

    using Map = std::map<std::pair<int, int>, std::uint64_t>;
    auto per_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        Map part;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (std::popcount(mask) < 2) continue;
            VertexSet w = VertexSet::from_bits(mask);
            if (window_is_face(facets, w)) continue;
            std::vector<VertexSet> wf = window_facets(x, w);
            std::vector<int> b = all_betti(std::span<const VertexSet>(wf));
            for (int d = 0; d < static_cast<int>(b.size()); ++d) {
                if (b[static_cast<std::size_t>(d)] == 0) continue;
                int j = d + 2;
                int i = w.size() - j;
                // A non-zero d-th reduced Betti number needs ≥ d+2 vertices.
                assert(i >= 0);
                part[{i, j}] += static_cast<std::uint64_t>(b[static_cast<std::size_t>(d)]);
            }
        }
        return part;
    };
    auto merge = [](Map acc, Map part) {
        for (const auto& [key, value] : part) acc[key] += value;
        return acc;
    };
    Map entries = scan_windows<Map>(total, opt.threads, Map{}, per_chunk, merge);

    BettiTable table;
    table.num_vars = n;
    table.entries = std::move(entries);
    return table;
}

int regularity(const SimplicialComplex& x, const LerayOptions& opt) {
    if (x.is_void()) throw InputError("void complex");
    if (is_simplex(x))
        throw InputError("zero ideal: regularity is undefined for a simplex");
    int reg = leray_number(x, opt).leray + 1;
    assert(reg == hochster_table(x, opt).max_j());
    return reg;
}

}  // namespace leray
