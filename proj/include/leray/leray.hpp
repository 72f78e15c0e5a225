#ifndef LERAY_LERAY_HPP
#define LERAY_LERAY_HPP

#include <map>
#include <optional>
#include <span>
#include <utility>

#include "leray/simplicial_complex.hpp"

namespace leray {

struct LerayOptions {
    int threads = 1;
    // 2^n windows are enumerated; refuse beyond this many vertices.
    int max_window_vertices = 26;
};

// L(X) with a maximizing window: leray = 0 iff X is a simplex, otherwise
// 1 + max{ i : β̃_i(X[W]) ≠ 0 for some W ⊆ V }. witness_set/witness_dim are
// set iff leray > 0; ties resolve to the smallest window bit pattern, so the
// result is identical for every thread count. Requires non-void.
struct LerayWitness {
    int leray = 0;
    std::optional<VertexSet> witness_set;
    std::optional<int> witness_dim;
};

LerayWitness leray_number(const SimplicialComplex& x, const LerayOptions& opt = {});

// Same scan for an explicit facet list; the vertex set is the union of the
// facets' members inside `universe`.
LerayWitness leray_number(std::span<const VertexSet> facets, VertexSet universe,
                          const LerayOptions& opt = {});

// Graded Betti numbers of the Stanley-Reisner ideal I_X by Hochster's formula:
// entry (i, j) holds β_{i, i+j}(I_X) = Σ_{|W| = i+j} β̃_{j-2}(X[W]), for j ≥ 2.
// Only non-zero entries are stored.
struct BettiTable {
    int num_vars = 0;
    std::map<std::pair<int, int>, std::uint64_t> entries;  // (i, j) -> value

    // max j with a non-zero entry; 0 for an empty table (zero ideal).
    int max_j() const;
    bool operator==(const BettiTable&) const = default;
};

BettiTable hochster_table(const SimplicialComplex& x, const LerayOptions& opt = {});

// Castelnuovo-Mumford regularity of I_X, = L(X) + 1. Errors on a simplex
// (zero ideal: regularity undefined here). In debug builds cross-checked
// against the Hochster table's max j.
int regularity(const SimplicialComplex& x, const LerayOptions& opt = {});

}  // namespace leray

#endif
