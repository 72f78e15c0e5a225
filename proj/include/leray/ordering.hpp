#ifndef LERAY_ORDERING_HPP
#define LERAY_ORDERING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "leray/simplicial_complex.hpp"

namespace leray {

// A linear order on the facets: perm[t] is the index (into the canonical
// facet list) of the facet at position t.
struct FacetOrdering {
    std::vector<int> perm;
    bool operator==(const FacetOrdering&) const = default;
};

// Resource caps for the subset DPs and the permutation oracle. Configuration,
// not hard-coded limits; exceeding one raises CapExceeded.
struct OrderingCaps {
    int dp_max_facets = 24;
    int brute_max_facets = 8;
    int weak_dp_max_facets = 20;
};

// Whether X_{j-1} ∩ Δ(σ_j) = ∪_{i ∈ prefix} Δ(σ_i ∩ σ_j) is a simplex, i.e.
// some prefix meet contains all the others. All meets empty gives {∅}, which
// is a simplex. Requires valid indices, j ∉ prefix, prefix non-empty.
bool prefix_meet_is_simplex(std::span<const VertexSet> facets,
                            std::span<const int> prefix, int j);

// Walk one ordering and report everything it determines:
//   m_value          M_⪯(X): 1 + number of steps whose prefix meet is not a simplex
//   step_increments  per position t = 1..m-1, whether step t incremented M_⪯
//   conn             per position t = 1..m-1, max_{i<t} |σ_i ∩ σ_t|
//   gamma            Σ_{t≥1} (dim σ_t − conn_t), each term ≥ 0 by the antichain property
//   n_value          m − |V| + |σ_first| + gamma (the ordering upper bound N_⪯)
//   is_weak_shelling ∃ u_t ∈ σ_t with X_{t-1}[σ_t ∖ {u_t}] a simplex, for every t ≥ 1
// Requires non-void X and perm a permutation of [0, m).
struct OrderingReport {
    int m_value = 1;
    int n_value = 1;
    int gamma = 0;
    std::vector<int> conn;
    std::vector<bool> step_increments;
    bool is_weak_shelling = true;
};

OrderingReport m_of_order(const SimplicialComplex& x, const FacetOrdering& ord);

// M(X) = min over orderings of M_⪯(X), by DP over subsets of facets: the
// step increment depends only on (prefix set, next facet), never on the
// prefix's internal order, so 2^m states suffice. Requires non-void,
// m ≤ caps.dp_max_facets.
struct MResult {
    int m = 1;
    FacetOrdering optimal_order;
    std::uint64_t dp_states_explored = 0;
};

MResult m_number(const SimplicialComplex& x, const OrderingCaps& caps = {});

// Independent oracle: minimum of m_value over all m! orderings.
// Requires m ≤ caps.brute_max_facets.
int m_number_bruteforce(const SimplicialComplex& x, const OrderingCaps& caps = {});

// Candidate vertices u_t are restricted to σ_t; this loses nothing, because
// removing u ∉ σ_t leaves the window σ_t itself, and if X_{t-1}[σ_t] is a
// simplex so is X_{t-1}[σ_t ∖ {u}] for any u ∈ σ_t (σ_t ≠ ∅ when m ≥ 2).
bool is_weak_shelling(const SimplicialComplex& x, const FacetOrdering& ord);

// min M_⪯ over weak shellings only, with a witness order; nullopt when X
// admits no weak shelling. Transition feasibility depends only on
// (prefix set, next facet), so the restricted subset DP is exact.
// Requires non-void, m ≤ caps.weak_dp_max_facets.
std::optional<std::pair<int, FacetOrdering>> weak_shelling_min_m(
    const SimplicialComplex& x, const OrderingCaps& caps = {});

// γ(X) = min over orderings of Σ (dim σ_t − conn_⪯ σ_t), with a witness
// order. Zero iff the ordering glues every facet along a full-dimensional
// intersection. Requires non-void, m ≤ caps.dp_max_facets.
std::pair<int, FacetOrdering> gamma_min_order(const SimplicialComplex& x,
                                              const OrderingCaps& caps = {});
int gamma_min(const SimplicialComplex& x, const OrderingCaps& caps = {});

}  // namespace leray

#endif
