#ifndef LERAY_STRUCTURE_HPP
#define LERAY_STRUCTURE_HPP

#include <vector>

#include "leray/leray.hpp"
#include "leray/ordering.hpp"
#include "leray/simplicial_complex.hpp"

namespace leray {

// Vertex sets S with |S| = k+1, every k-subset a face, S itself not a face:
// exactly the minimal non-faces of size k+1, and X[S] ≅ ∂Δ(k+1).
// Requires non-void X and k ≥ 2 (k = 2 gives the empty triangles, which
// induced_cycles reports as well).
std::vector<VertexSet> induced_boundary_complexes(const SimplicialComplex& x, int k);

// Induced cycles of the 1-skeleton: chordless cycles of length ≥ 4 plus
// empty triangles (3-cliques whose 2-face is absent). Each cycle appears
// once, as the vertex sequence canonical up to rotation/reflection (smallest
// vertex first, smaller neighbor second); the list is sorted by (length,
// sequence). Requires non-void X and max_len ≥ 3.
std::vector<std::vector<int>> induced_cycles(const SimplicialComplex& x, int max_len);

enum class WitnessKind { induced_cycle, boundary_of_simplex };

// A certified homology-class witness inside a window.
struct GeneratorWitness {
    WitnessKind kind = WitnessKind::induced_cycle;
    VertexSet vertices;  // cycle support or ∂Δ(k+1) vertex set
    VertexSet window;    // the ambient window W
    int hom_dim = 0;     // k - 1
    bool is_generator = false;
};

// Checks that `vertices` really is an induced cycle (k = 2) or an induced
// ∂Δ(k+1) (k ≥ 3) inside X[W], builds its fundamental (k-1)-cycle (the sum
// of all k-subsets, resp. the cycle's edges), and solves whether it bounds
// in X[W]. is_generator = cycle and not boundary. Errors when the witness is
// not of the claimed kind or not inside W ⊆ V.
GeneratorWitness certify_generator(const SimplicialComplex& x, VertexSet window,
                                   VertexSet vertices, int k);

// The equality-structure check around L(X) = M(X):
//   equality              L == M
//   weak_shelling_optimal some weak shelling attains M
//   case_id               from the trichotomy when equality holds: 1 (M = 1,
//                         X not a simplex), 2 (induced-cycle witness),
//                         3 (∂Δ(k+1) witness, k ≥ 3); 0 when L ≠ M
//   witnesses             certified generators found (empty for case 1)
//   betti_cap_ok          β̃_{k-1}(X[W]) ≤ 1 for every window W (k = L ≥ 2)
//   conclusion_holds      the branch's conclusion was verified; when the
//                         hypothesis fails this still records whether the
//                         conclusion happens to hold
// Requires a non-void non-simplex.
struct EqualityReport {
    int leray = 0;
    int m = 0;
    bool equality = false;
    bool weak_shelling_optimal = false;
    int case_id = 0;
    std::vector<GeneratorWitness> witnesses;
    bool betti_cap_ok = true;
    bool conclusion_holds = false;
};

EqualityReport verify_equality_theorem(const SimplicialComplex& x,
                                       const LerayOptions& lopt = {},
                                       const OrderingCaps& caps = {});

// Reproducer file: "# reason: <code>" followed by the complex in the
// standard text format. Returns the written path.
std::string dump_reproducer(const SimplicialComplex& x, const std::string& reason,
                            const std::string& directory);

}  // namespace leray

#endif
