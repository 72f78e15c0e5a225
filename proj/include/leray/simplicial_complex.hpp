#ifndef LERAY_SIMPLICIAL_COMPLEX_HPP
#define LERAY_SIMPLICIAL_COMPLEX_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "leray/vertex_set.hpp"

namespace leray {

// A finite abstract simplicial complex stored as the antichain of its facets,
// with one string label per vertex. Invariants, enforced on construction:
//   - facets form an antichain, sorted canonically (size, then bit pattern);
//   - labels are distinct and every vertex id in [0, |labels|) lies in a facet;
//   - at most 64 vertices.
// The complex with zero facets is the void complex; a single empty facet is
// the complex {∅}.
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // void complex on zero vertices

    // Canonicalizes: drops duplicated and dominated facets, sorts.
    static SimplicialComplex from_facets(std::vector<VertexSet> facets,
                                         std::vector<std::string> labels);

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    int num_vertices() const { return static_cast<int>(labels_.size()); }
    int facet_count() const { return static_cast<int>(facets_.size()); }
    bool is_void() const { return facets_.empty(); }
    VertexSet universe() const { return VertexSet::full(num_vertices()); }

    const std::string& label(int v) const;
    // Vertex id for a label; -1 if absent.
    int vertex_by_label(const std::string& name) const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> facets_;
};

// Keep only maximal sets (and dedupe); sorts canonically.
std::vector<VertexSet> antichain_reduce(std::vector<VertexSet> sets);

// Facets of the induced subcomplex X[W] in the *original* coordinates:
// the maximal elements of { σ ∩ W : σ facet }.
std::vector<VertexSet> window_facets(const SimplicialComplex& x, VertexSet w);

// Induced subcomplex X[W] as a complex in its own right: vertices of W are
// renumbered 0..|W|-1 in increasing order of old id, labels carried over.
// Requires W ⊆ universe.
SimplicialComplex induced(const SimplicialComplex& x, VertexSet w);

// max facet dimension; -1 for {∅}. Requires non-void.
int dimension(const SimplicialComplex& x);

// True iff X = Δ(σ) for a single facet σ (includes {∅}). Requires non-void.
bool is_simplex(const SimplicialComplex& x);

// True iff f ⊆ some facet. Void complex has no faces, ∅ included.
bool is_face(const SimplicialComplex& x, VertexSet f);

// All k-faces in canonical order; k = -1 gives {∅}. Requires non-void, k ≥ -1.
std::vector<VertexSet> faces_of_dim(const SimplicialComplex& x, int k);
// Same, for the union of simplices spanned by an explicit facet list.
std::vector<VertexSet> faces_of_dim(std::span<const VertexSet> facets, int k);

// Face counts f_{-1}, f_0, ..., f_{dim}. Requires non-void.
struct FVector {
    std::vector<std::uint64_t> counts;
    bool operator==(const FVector&) const = default;
};
FVector f_vector(const SimplicialComplex& x);

// All minimal non-faces in canonical order. Requires non-void.
// Output-sensitive: candidates are grown from faces one size at a time, so
// only faces and minimal non-faces are ever enumerated.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& x);

// All facets of equal dimension. Requires non-void.
bool is_pure(const SimplicialComplex& x);

// Facet graph connectivity through (d-1)-dimensional intersections, d = dim X.
// Requires non-void and pure.
bool is_strongly_connected(const SimplicialComplex& x);

}  // namespace leray

#endif
