#include "leray/structure.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "leray/complex_io.hpp"
#include "leray/errors.hpp"
#include "leray/homology.hpp"
#include "leray/ordering.hpp"

namespace leray {

std::vector<VertexSet> induced_boundary_complexes(const SimplicialComplex& x, int k) {
    if (x.is_void()) throw InputError("void complex");
    if (k < 2) throw InputError("induced boundary complexes need k >= 2");
    // S induces ∂Δ(k+1) iff S is a minimal non-face of size k+1: "every
    // k-subset is a face" is exactly minimality one level down.
    std::vector<VertexSet> out;
    for (VertexSet s : minimal_nonfaces(x))
        if (s.size() == k + 1) out.push_back(s);
    return out;
}

namespace {

bool face_in(const std::vector<VertexSet>& facets, VertexSet f) {
    for (VertexSet s : facets)
        if (f.subset_of(s)) return true;
    return false;
}

// Chordless cycles (length ≥ 4) plus empty triangles of the 1-skeleton
// spanned by `facets`, restricted to `verts`. Cycles are canonical: smallest
// vertex first, then its smaller cycle-neighbor, so each comes up once per
// rotation/reflection class.
std::vector<std::vector<int>> induced_cycles_core(const std::vector<VertexSet>& facets,
                                                  VertexSet verts, int max_len) {
    if (max_len < 3) throw InputError("cycle search needs max_len >= 3");
    std::vector<VertexSet> adj(VertexSet::kMaxVertices);
    std::vector<int> ids = verts.members();
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            if (face_in(facets, VertexSet::of({ids[a], ids[b]}))) {
                adj[static_cast<std::size_t>(ids[a])] =
                    adj[static_cast<std::size_t>(ids[a])].with(ids[b]);
                adj[static_cast<std::size_t>(ids[b])] =
                    adj[static_cast<std::size_t>(ids[b])].with(ids[a]);
            }

    std::vector<std::vector<int>> found;
    // Empty triangles: 3-cliques whose 2-face is missing.
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
            if (!adj[static_cast<std::size_t>(ids[a])].contains(ids[b])) continue;
            for (std::size_t c = b + 1; c < ids.size(); ++c) {
                if (!adj[static_cast<std::size_t>(ids[a])].contains(ids[c]) ||
                    !adj[static_cast<std::size_t>(ids[b])].contains(ids[c]))
                    continue;
                if (!face_in(facets, VertexSet::of({ids[a], ids[b], ids[c]})))
                    found.push_back({ids[a], ids[b], ids[c]});
            }
        }

    // Chordless cycles of length >= 4, rooted at their smallest vertex.
    std::vector<int> path;
    VertexSet on_path;
    VertexSet interior_blocked;  // vertices adjacent to an interior path vertex
    std::function<void(int)> extend = [&](int root) {
        int last = path.back();
        for (int u : adj[static_cast<std::size_t>(last)]) {
            if (u <= root || on_path.contains(u)) continue;
            // u may touch the path only at `last` (and possibly the root).
            if (interior_blocked.contains(u)) continue;
            // The first step just walks the root's own edge; closure needs a
            // path of at least two vertices.
            bool closes =
                path.size() >= 2 && adj[static_cast<std::size_t>(root)].contains(u);
            if (closes) {
                if (path.size() >= 3 && path[1] < u &&
                    static_cast<int>(path.size()) + 1 <= max_len) {
                    std::vector<int> cycle = path;
                    cycle.push_back(u);
                    found.push_back(std::move(cycle));
                }
                continue;  // extending through u would leave the chord {root, u}
            }
            if (static_cast<int>(path.size()) + 1 >= max_len) continue;
            // `last` becomes interior (the root never does): block its
            // other neighbors.
            VertexSet saved = interior_blocked;
            if (path.size() >= 2)
                interior_blocked = interior_blocked | adj[static_cast<std::size_t>(last)];
            path.push_back(u);
            on_path = on_path.with(u);
            extend(root);
            on_path = on_path.without(u);
            path.pop_back();
            interior_blocked = saved;
        }
    };
    for (int root : verts) {
        path = {root};
        on_path = VertexSet{}.with(root);
        interior_blocked = VertexSet{};
        extend(root);
    }

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return found;
}

}  // namespace

std::vector<std::vector<int>> induced_cycles(const SimplicialComplex& x, int max_len) {
    if (x.is_void()) throw InputError("void complex");
    return induced_cycles_core(x.facets(), x.universe(), max_len);
}

namespace {

// Neighbors of v inside s, through edges of the complex spanned by facets.
VertexSet neighbors_in(const std::vector<VertexSet>& facets, VertexSet s, int v) {
    VertexSet nb;
    for (int u : s.without(v))
        if (face_in(facets, VertexSet::of({u, v}))) nb = nb.with(u);
    return nb;
}

bool is_induced_cycle_set(const std::vector<VertexSet>& facets, VertexSet s) {
    if (s.size() < 3) return false;
    // Every vertex of degree 2 within s and one connected component.
    int start = s.lowest();
    for (int v : s)
        if (neighbors_in(facets, s, v).size() != 2) return false;
    VertexSet reached = VertexSet{}.with(start);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next = next | neighbors_in(facets, s, v);
        next = next - reached;
        reached = reached | next;
        frontier = next;
    }
    if (reached != s) return false;
    // Length 3 is a cycle only when the triangle is empty.
    if (s.size() == 3 && face_in(facets, s)) return false;
    return true;
}

}  // namespace

GeneratorWitness certify_generator(const SimplicialComplex& x, VertexSet window,
                                   VertexSet vertices, int k) {
    if (x.is_void()) throw InputError("void complex");
    if (!window.subset_of(x.universe()))
        throw InputError("window is not a subset of the vertex set");
    if (!vertices.subset_of(window)) throw InputError("witness must lie inside the window");
    if (k < 2) throw InputError("witness dimension needs k >= 2");

    std::vector<VertexSet> wf = window_facets(x, window);
    GeneratorWitness w;
    w.vertices = vertices;
    w.window = window;
    w.hom_dim = k - 1;

    Chain fundamental;
    if (k == 2) {
        if (!is_induced_cycle_set(wf, vertices))
            throw InputError("witness is not an induced cycle in the window");
        w.kind = WitnessKind::induced_cycle;
        fundamental.dim = 1;
        std::vector<int> mem = vertices.members();
        for (std::size_t a = 0; a < mem.size(); ++a)
            for (std::size_t b = a + 1; b < mem.size(); ++b) {
                VertexSet e = VertexSet::of({mem[a], mem[b]});
                if (face_in(wf, e)) fundamental.faces.push_back(e);
            }
    } else {
        if (vertices.size() != k + 1)
            throw InputError("witness does not have k+1 vertices");
        if (face_in(wf, vertices))
            throw InputError("witness is a face, not a boundary complex");
        for (int v : vertices)
            if (!face_in(wf, vertices.without(v)))
                throw InputError("witness is missing a facet of the boundary complex");
        w.kind = WitnessKind::boundary_of_simplex;
        fundamental.dim = k - 1;
        for (int v : vertices) fundamental.faces.push_back(vertices.without(v));
    }

    std::span<const VertexSet> span_wf(wf);
    bool cyc = is_cycle(span_wf, fundamental);
    if (!cyc)
        throw InvariantViolation("fundamental chain of a certified witness failed ∂c = 0");
    w.is_generator = !is_boundary(span_wf, fundamental);
    return w;
}

EqualityReport verify_equality_theorem(const SimplicialComplex& x, const LerayOptions& lopt,
                                       const OrderingCaps& caps) {
    if (x.is_void()) throw InputError("void complex");
    if (is_simplex(x)) throw InputError("equality check needs a non-simplex");

    EqualityReport rep;
    LerayWitness lw = leray_number(x, lopt);
    rep.leray = lw.leray;
    rep.m = m_number(x, caps).m;
    rep.equality = rep.leray == rep.m;
    auto weak = weak_shelling_min_m(x, caps);
    rep.weak_shelling_optimal = weak.has_value() && weak->first == rep.m;

    if (!rep.equality) {
        rep.case_id = 0;
        return rep;
    }
    const int k = rep.leray;
    rep.case_id = k >= 3 ? 3 : k;

    if (k == 1) {
        // Non-simplex with M = 1; nothing further to exhibit.
        rep.conclusion_holds = true;
        return rep;
    }

    // β̃_{k-1}(X[W]) ≠ 0 at the Leray witness window; the theorem promises a
    // certified generator inside it.
    VertexSet window = *lw.witness_set;
    std::vector<VertexSet> wf = window_facets(x, window);
    if (k == 2) {
        for (const auto& cyc : induced_cycles_core(wf, window, window.size())) {
            VertexSet s;
            for (int v : cyc) s = s.with(v);
            GeneratorWitness gw = certify_generator(x, window, s, 2);
            if (gw.is_generator) {
                rep.witnesses.push_back(gw);
                rep.conclusion_holds = true;
                break;
            }
        }
    } else {
        for (VertexSet s : induced_boundary_complexes(x, k)) {
            if (!s.subset_of(window)) continue;
            GeneratorWitness gw = certify_generator(x, window, s, k);
            if (gw.is_generator) {
                rep.witnesses.push_back(gw);
                rep.conclusion_holds = true;
                break;
            }
        }
    }

    // The cap β̃_{k-1}(X[W]) ≤ 1 over every window.
    const int n = x.num_vertices();
    rep.betti_cap_ok = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet w = VertexSet::from_bits(mask);
        if (w.size() < k + 1) continue;
        std::vector<VertexSet> cut = window_facets(x, w);
        int dim_w = -1;
        for (VertexSet f : cut) dim_w = std::max(dim_w, f.size() - 1);
        if (dim_w < k - 1) continue;
        if (betti(std::span<const VertexSet>(cut), k - 1) > 1) {
            rep.betti_cap_ok = false;
            break;
        }
    }
    return rep;
}

std::string dump_reproducer(const SimplicialComplex& x, const std::string& reason,
                            const std::string& directory) {
    std::string body = "# reason: " + reason + "\n" + print_complex(x);
    std::size_t h = std::hash<std::string>{}(body);
    std::ostringstream name;
    name << "reproducer-" << std::hex << std::setw(16) << std::setfill('0') << h
         << ".cplx";
    std::string path =
        directory.empty() ? name.str() : directory + "/" + name.str();
    std::ofstream out(path);
    if (!out) throw InputError("cannot write reproducer file " + path);
    out << body;
    return path;
}

}  // namespace leray
