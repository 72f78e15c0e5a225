#ifndef LERAY_HOMOLOGY_HPP
#define LERAY_HOMOLOGY_HPP

#include <span>
#include <vector>

#include "leray/gf2.hpp"
#include "leray/simplicial_complex.hpp"

namespace leray {

// All homology in this project is reduced simplicial homology with GF(2)
// coefficients. The chain complex is augmented: C_{-1} = GF(2) generated by ∅,
// so ∂_0 is the all-ones row and β̃_0 counts components minus one.

// Boundary matrix ∂_n : C_n → C_{n-1}, faces indexed in canonical order.
// n = 0 yields the 1 x f_0 all-ones matrix. Requires n ≥ 0 and a non-void
// complex (for the span overload, a non-empty facet list).
Gf2Matrix boundary_matrix(const SimplicialComplex& x, int n);
Gf2Matrix boundary_matrix(std::span<const VertexSet> facets, int n);

// β̃_n = (f_n − rank ∂_n) − rank ∂_{n+1}. Zero for n > dim. Requires n ≥ 0.
int betti(const SimplicialComplex& x, int n);
int betti(std::span<const VertexSet> facets, int n);

// β̃_0, ..., β̃_dim in one pass (each boundary rank computed once).
// Empty vector when dim < 0.
std::vector<int> all_betti(const SimplicialComplex& x);
std::vector<int> all_betti(std::span<const VertexSet> facets);

// Largest n > lower_exclusive with β̃_n ≠ 0, or lower_exclusive if none.
// Scans from the top dimension downward, reusing face lists between steps.
int top_nonzero_betti(std::span<const VertexSet> facets, int lower_exclusive);

// A GF(2) n-chain given by its support. Faces are deduplicated mod 2.
struct Chain {
    int dim = 0;
    std::vector<VertexSet> faces;
};

// ∂_n c = 0. Errors if some member is not an n-face of x.
bool is_cycle(const SimplicialComplex& x, const Chain& c);
// c lies in the image of ∂_{n+1}. Errors like is_cycle.
bool is_boundary(const SimplicialComplex& x, const Chain& c);

bool is_cycle(std::span<const VertexSet> facets, const Chain& c);
bool is_boundary(std::span<const VertexSet> facets, const Chain& c);

}  // namespace leray

#endif
