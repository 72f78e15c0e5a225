#include "leray/facet_graph.hpp"

#include <algorithm>
#include <sstream>

#include "leray/errors.hpp"

namespace leray {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }

    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }

    bool unite(int a, int b) {
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) return false;
        parent[static_cast<std::size_t>(ra)] = rb;
        return true;
    }
};

void check_ordering_shape(const SimplicialComplex& x, const FacetOrdering& ord) {
    const int m = x.facet_count();
    if (static_cast<int>(ord.perm.size()) != m)
        throw InputError("ordering length differs from the facet count");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int i : ord.perm) {
        if (i < 0 || i >= m || seen[static_cast<std::size_t>(i)])
            throw InputError("ordering is not a permutation of the facet indices");
        seen[static_cast<std::size_t>(i)] = true;
    }
}

}  // namespace

WeightedFacetGraph weighted_graph(const SimplicialComplex& x) {
    if (x.is_void()) throw InputError("void complex");
    WeightedFacetGraph g;
    g.n = x.facet_count();
    g.vertex_weight.reserve(static_cast<std::size_t>(g.n));
    for (VertexSet f : x.facets()) g.vertex_weight.push_back(f.size());
    g.edge_weight.assign(static_cast<std::size_t>(g.n),
                         std::vector<int>(static_cast<std::size_t>(g.n), 0));
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            int w = (x.facets()[static_cast<std::size_t>(i)] & x.facets()[static_cast<std::size_t>(j)]).size();
            g.edge_weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = w;
            g.edge_weight[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = w;
        }
    return g;
}

long long chi_w(const WeightedFacetGraph& g) {
    long long total = 0;
    for (int w : g.vertex_weight) total += w;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            total -= g.edge_weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return total;
}

long long chi_w(const WeightedFacetGraph& g, const SpanningTree& tree) {
    long long total = 0;
    for (int w : g.vertex_weight) total += w;
    for (auto [i, j] : tree.edges) {
        if (i < 0 || i >= g.n || j < 0 || j >= g.n || i == j)
            throw InputError("tree edge endpoints out of range");
        total -= g.edge_weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return total;
}

SpanningTree construction_tree(const SimplicialComplex& x, const FacetOrdering& ord) {
    if (x.is_void()) throw InputError("void complex");
    check_ordering_shape(x, ord);
    const std::vector<VertexSet>& f = x.facets();
    SpanningTree tree;
    for (std::size_t t = 1; t < ord.perm.size(); ++t) {
        const int cur = ord.perm[t];
        // Earliest earlier position with the largest intersection.
        int best_pos = 0;
        int best_w = -1;
        for (std::size_t s = 0; s < t; ++s) {
            int w = (f[static_cast<std::size_t>(ord.perm[s])] & f[static_cast<std::size_t>(cur)]).size();
            if (w > best_w) {
                best_w = w;
                best_pos = static_cast<int>(s);
            }
        }
        int a = ord.perm[static_cast<std::size_t>(best_pos)];
        int b = cur;
        tree.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return tree;
}

SpanningTree maximum_spanning_tree(const WeightedFacetGraph& g) {
    if (g.n < 1) throw InputError("graph must have at least one vertex");
    struct E {
        int w, i, j;
    };
    std::vector<E> edges;
    edges.reserve(static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n) / 2);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            edges.push_back({g.edge_weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], i, j});
    std::sort(edges.begin(), edges.end(), [](const E& a, const E& b) {
        if (a.w != b.w) return a.w > b.w;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    UnionFind uf(g.n);
    SpanningTree tree;
    for (const E& e : edges) {
        if (uf.unite(e.i, e.j)) tree.edges.emplace_back(e.i, e.j);
        if (static_cast<int>(tree.edges.size()) == g.n - 1) break;
    }
    return tree;
}

bool two_regular_tree_test(const SimplicialComplex& x) {
    if (x.is_void()) throw InputError("void complex");
    // A simplex has the zero ideal; no regularity to test.
    if (is_simplex(x)) return false;
    WeightedFacetGraph g = weighted_graph(x);
    SpanningTree best = maximum_spanning_tree(g);
    return chi_w(g, best) == x.num_vertices();
}

std::string export_edge_list(const WeightedFacetGraph& g, const SpanningTree* tree,
                             int num_vertices) {
    std::ostringstream out;
    out << g.n << ' ' << num_vertices << '\n';
    for (int i = 0; i < g.n; ++i)
        out << "v " << i << ' ' << g.vertex_weight[static_cast<std::size_t>(i)] << '\n';
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            out << "e " << i << ' ' << j << ' '
                << g.edge_weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] << '\n';
    if (tree)
        for (auto [i, j] : tree->edges) out << "t " << i << ' ' << j << '\n';
    return out.str();
}

}  // namespace leray
