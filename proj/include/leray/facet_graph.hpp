#ifndef LERAY_FACET_GRAPH_HPP
#define LERAY_FACET_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "leray/ordering.hpp"
#include "leray/simplicial_complex.hpp"

namespace leray {

// Complete graph on the facets: w(i) = |σ_i|, w({i,j}) = |σ_i ∩ σ_j|.
// Edge weights are strictly below both endpoint weights (antichain).
struct WeightedFacetGraph {
    int n = 0;                            // facet count
    std::vector<int> vertex_weight;      // size n
    std::vector<std::vector<int>> edge_weight;  // symmetric n x n, zero diagonal
};

WeightedFacetGraph weighted_graph(const SimplicialComplex& x);

// A spanning tree given by its edge list (facet index pairs, i < j).
struct SpanningTree {
    std::vector<std::pair<int, int>> edges;
    bool operator==(const SpanningTree&) const = default;
};

// Weighted Euler characteristic Σ w(v) − Σ w(e): over all edges of g, or
// over the edges of a given tree.
long long chi_w(const WeightedFacetGraph& g);
long long chi_w(const WeightedFacetGraph& g, const SpanningTree& tree);

// The tree tracking how an ordering assembles X: position t ≥ 1 connects to
// the earliest earlier position with the largest intersection. Satisfies
// chi_w(tree) − |V| + 1 = N_⪯(X). Edges are reported as canonical facet
// index pairs. Requires non-void X and a valid ordering.
SpanningTree construction_tree(const SimplicialComplex& x, const FacetOrdering& ord);

// Maximum-weight spanning tree by Kruskal with union-find; ties broken by
// lexicographic (i, j) for determinism. Requires n ≥ 1.
SpanningTree maximum_spanning_tree(const WeightedFacetGraph& g);

// min over spanning trees of chi_w equals Σ|σ_i| minus the maximum spanning
// tree weight; the test is whether that minimum equals |V|, the tree-wise
// criterion for reg(I_X) = 2. Simplices (zero ideal, regularity undefined)
// return false. Requires non-void.
bool two_regular_tree_test(const SimplicialComplex& x);

// Plain-text export: header "m |V|", then "v i w" per facet, "e i j w" per
// edge (i < j), "t i j" per tree edge when a tree is given.
std::string export_edge_list(const WeightedFacetGraph& g, const SpanningTree* tree,
                             int num_vertices);

}  // namespace leray

#endif
