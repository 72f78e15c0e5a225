#include "leray/simplicial_complex.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "leray/errors.hpp"

namespace leray {

std::vector<VertexSet> antichain_reduce(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(),
              [](VertexSet a, VertexSet b) { return canonical_less(a, b); });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> maximal;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool dominated = false;
        // Only later sets can be proper supersets: they are at least as large.
        for (std::size_t j = i + 1; j < sets.size() && !dominated; ++j)
            dominated = sets[i].subset_of(sets[j]);
        if (!dominated) maximal.push_back(sets[i]);
    }
    return maximal;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexSet> facets,
                                                 std::vector<std::string> labels) {
    if (labels.size() > VertexSet::kMaxVertices)
        throw InputError("at most 64 vertices are supported");
    {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second) throw InputError("duplicate vertex label \"" + l + "\"");
    }
    VertexSet universe = VertexSet::full(static_cast<int>(labels.size()));
    VertexSet used;
    for (VertexSet f : facets) {
        if (!f.subset_of(universe))
            throw InputError("facet uses a vertex id outside [0, " +
                             std::to_string(labels.size()) + ")");
        used = used | f;
    }
    if (!facets.empty() && used != universe) {
        for (int v : universe - used)
            throw InputError("vertex \"" + labels[static_cast<std::size_t>(v)] +
                             "\" appears in no facet; restrict the universe first");
    }
    if (facets.empty() && !labels.empty())
        throw InputError("void complex cannot carry vertex labels");

    SimplicialComplex x;
    x.labels_ = std::move(labels);
    x.facets_ = antichain_reduce(std::move(facets));
    return x;
}

const std::string& SimplicialComplex::label(int v) const {
    if (v < 0 || v >= num_vertices()) throw InputError("vertex id out of range");
    return labels_[static_cast<std::size_t>(v)];
}

int SimplicialComplex::vertex_by_label(const std::string& name) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (labels_[static_cast<std::size_t>(v)] == name) return v;
    return -1;
}

std::vector<VertexSet> window_facets(const SimplicialComplex& x, VertexSet w) {
    if (!w.subset_of(x.universe())) throw InputError("window is not a subset of the vertex set");
    std::vector<VertexSet> cut;
    cut.reserve(x.facets().size());
    for (VertexSet f : x.facets()) cut.push_back(f & w);
    return antichain_reduce(std::move(cut));
}

SimplicialComplex induced(const SimplicialComplex& x, VertexSet w) {
    if (x.is_void()) {
        if (!w.empty()) throw InputError("window is not a subset of the vertex set");
        return SimplicialComplex{};
    }
    std::vector<VertexSet> cut = window_facets(x, w);
    // Renumber W's members to 0..|W|-1 preserving order.
    std::vector<int> old_ids = w.members();
    std::vector<int> new_id(VertexSet::kMaxVertices, -1);
    std::vector<std::string> labels;
    labels.reserve(old_ids.size());
    for (std::size_t i = 0; i < old_ids.size(); ++i) {
        new_id[static_cast<std::size_t>(old_ids[i])] = static_cast<int>(i);
        labels.push_back(x.label(old_ids[i]));
    }
    std::vector<VertexSet> remapped;
    remapped.reserve(cut.size());
    for (VertexSet f : cut) {
        VertexSet g;
        for (int v : f) g = g.with(new_id[static_cast<std::size_t>(v)]);
        remapped.push_back(g);
    }
    return SimplicialComplex::from_facets(std::move(remapped), std::move(labels));
}

namespace {
void require_nonvoid(const SimplicialComplex& x) {
    if (x.is_void()) throw InputError("void complex");
}
}  // namespace

int dimension(const SimplicialComplex& x) {
    require_nonvoid(x);
    int d = -1;
    for (VertexSet f : x.facets()) d = std::max(d, f.size() - 1);
    return d;
}

bool is_simplex(const SimplicialComplex& x) {
    require_nonvoid(x);
    return x.facet_count() == 1;
}

bool is_face(const SimplicialComplex& x, VertexSet f) {
    for (VertexSet s : x.facets())
        if (f.subset_of(s)) return true;
    return false;
}

std::vector<VertexSet> faces_of_dim(std::span<const VertexSet> facets, int k) {
    if (facets.empty()) throw InputError("void complex");
    if (k < -1) throw InputError("face dimension below -1");
    if (k == -1) return {VertexSet{}};
    const int size = k + 1;
    std::vector<std::uint64_t> found;
    std::vector<int> mem;
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (VertexSet f : facets) {
        if (f.size() < size) continue;
        mem = f.members();
        // All `size`-combinations of mem, odometer-style.
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint64_t bits = 0;
            for (int i = 0; i < size; ++i)
                bits |= std::uint64_t{1} << mem[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            found.push_back(bits);
            int pos = size - 1;
            while (pos >= 0 &&
                   idx[static_cast<std::size_t>(pos)] == static_cast<int>(mem.size()) - size + pos)
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < size; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<VertexSet> out;
    out.reserve(found.size());
    for (std::uint64_t b : found) out.push_back(VertexSet::from_bits(b));
    return out;
}

std::vector<VertexSet> faces_of_dim(const SimplicialComplex& x, int k) {
    require_nonvoid(x);
    return faces_of_dim(std::span<const VertexSet>(x.facets()), k);
}

FVector f_vector(const SimplicialComplex& x) {
    require_nonvoid(x);
    int d = dimension(x);
    FVector fv;
    fv.counts.reserve(static_cast<std::size_t>(d + 2));
    for (int k = -1; k <= d; ++k)
        fv.counts.push_back(faces_of_dim(x, k).size());
    return fv;
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& x) {
    require_nonvoid(x);
    const int d = dimension(x);
    std::vector<VertexSet> result;
    // Grow faces by size; a candidate face ∪ {v} that contains no smaller
    // minimal non-face and is itself not a face has all proper subsets faces.
    std::vector<VertexSet> level = {VertexSet{}};  // faces of size s-1
    for (int s = 1; s <= d + 2 && !level.empty(); ++s) {
        std::vector<std::uint64_t> seen;
        std::vector<VertexSet> next_level;
        for (VertexSet f : level) {
            for (int v : x.universe() - f) {
                VertexSet cand = f.with(v);
                seen.push_back(cand.bits());
            }
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (std::uint64_t bits : seen) {
            VertexSet cand = VertexSet::from_bits(bits);
            bool above_found = false;
            for (VertexSet nf : result) {
                if (nf.subset_of(cand)) {
                    above_found = true;
                    break;
                }
            }
            if (above_found) continue;
            if (is_face(x, cand))
                next_level.push_back(cand);
            else
                result.push_back(cand);
        }
        level = std::move(next_level);
    }
    std::sort(result.begin(), result.end(),
              [](VertexSet a, VertexSet b) { return canonical_less(a, b); });
    return result;
}

bool is_pure(const SimplicialComplex& x) {
    require_nonvoid(x);
    for (VertexSet f : x.facets())
        if (f.size() != x.facets().front().size()) return false;
    return true;
}

bool is_strongly_connected(const SimplicialComplex& x) {
    if (!is_pure(x)) throw InputError("strong connectivity requires a pure complex");
    const int d = dimension(x);
    const int m = x.facet_count();
    // BFS over facets joined along (d-1)-faces, i.e. intersections of size d.
    std::vector<bool> visited(static_cast<std::size_t>(m), false);
    std::queue<int> frontier;
    frontier.push(0);
    visited[0] = true;
    int reached = 1;
    while (!frontier.empty()) {
        int i = frontier.front();
        frontier.pop();
        for (int j = 0; j < m; ++j) {
            if (visited[static_cast<std::size_t>(j)]) continue;
            if ((x.facets()[static_cast<std::size_t>(i)] & x.facets()[static_cast<std::size_t>(j)]).size() == d) {
                visited[static_cast<std::size_t>(j)] = true;
                frontier.push(j);
                ++reached;
            }
        }
    }
    return reached == m;
}

}  // namespace leray
