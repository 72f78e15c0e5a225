#include "leray/homology.hpp"

#include <algorithm>

#include "leray/errors.hpp"

namespace leray {

namespace {

int dim_of(std::span<const VertexSet> facets) {
    int d = -1;
    for (VertexSet f : facets) d = std::max(d, f.size() - 1);
    return d;
}

int face_row(const std::vector<VertexSet>& rows, VertexSet f) {
    auto it = std::lower_bound(rows.begin(), rows.end(), f,
                               [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    return static_cast<int>(it - rows.begin());
}

// ∂_n from explicit face lists (rows = (n-1)-faces, cols = n-faces).
Gf2Matrix boundary_from_faces(const std::vector<VertexSet>& rows,
                              const std::vector<VertexSet>& cols, int n) {
    if (n == 0) {
        Gf2Matrix d(1, static_cast<int>(cols.size()));
        for (int c = 0; c < d.cols(); ++c) d.set(0, c, true);
        return d;
    }
    Gf2Matrix d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (int v : cols[c]) d.set(face_row(rows, cols[c].without(v)), static_cast<int>(c), true);
    return d;
}

}  // namespace

Gf2Matrix boundary_matrix(std::span<const VertexSet> facets, int n) {
    if (facets.empty()) throw InputError("void complex");
    if (n < 0) throw InputError("boundary matrix needs n >= 0");
    std::vector<VertexSet> cols = faces_of_dim(facets, n);
    std::vector<VertexSet> rows =
        n == 0 ? std::vector<VertexSet>{} : faces_of_dim(facets, n - 1);
    return boundary_from_faces(rows, cols, n);
}

Gf2Matrix boundary_matrix(const SimplicialComplex& x, int n) {
    if (x.is_void()) throw InputError("void complex");
    return boundary_matrix(std::span<const VertexSet>(x.facets()), n);
}

std::vector<int> all_betti(std::span<const VertexSet> facets) {
    if (facets.empty()) throw InputError("void complex");
    const int d = dim_of(facets);
    std::vector<int> out;
    if (d < 0) return out;
    out.resize(static_cast<std::size_t>(d) + 1);
    // One downward sweep: carry rank ∂_{n+1} into step n.
    std::vector<VertexSet> hi = faces_of_dim(facets, d);
    int rank_above = 0;  // rank ∂_{d+1} = 0
    for (int n = d; n >= 0; --n) {
        std::vector<VertexSet> lo =
            n == 0 ? std::vector<VertexSet>{} : faces_of_dim(facets, n - 1);
        int r = rank(boundary_from_faces(lo, hi, n));
        out[static_cast<std::size_t>(n)] = static_cast<int>(hi.size()) - r - rank_above;
        rank_above = r;
        hi = std::move(lo);
    }
    return out;
}

std::vector<int> all_betti(const SimplicialComplex& x) {
    if (x.is_void()) throw InputError("void complex");
    return all_betti(std::span<const VertexSet>(x.facets()));
}

int betti(std::span<const VertexSet> facets, int n) {
    if (facets.empty()) throw InputError("void complex");
    if (n < 0) throw InputError("betti needs n >= 0");
    const int d = dim_of(facets);
    if (n > d) return 0;
    std::vector<VertexSet> mid = faces_of_dim(facets, n);
    std::vector<VertexSet> lo =
        n == 0 ? std::vector<VertexSet>{} : faces_of_dim(facets, n - 1);
    int r_n = rank(boundary_from_faces(lo, mid, n));
    int r_up = 0;
    if (n < d) {
        std::vector<VertexSet> hi = faces_of_dim(facets, n + 1);
        r_up = rank(boundary_from_faces(mid, hi, n + 1));
    }
    return static_cast<int>(mid.size()) - r_n - r_up;
}

int betti(const SimplicialComplex& x, int n) {
    if (x.is_void()) throw InputError("void complex");
    return betti(std::span<const VertexSet>(x.facets()), n);
}

int top_nonzero_betti(std::span<const VertexSet> facets, int lower_exclusive) {
    if (facets.empty()) throw InputError("void complex");
    const int d = dim_of(facets);
    int rank_above = 0;
    std::vector<VertexSet> hi;
    for (int n = d; n > lower_exclusive && n >= 0; --n) {
        if (hi.empty()) hi = faces_of_dim(facets, n);
        std::vector<VertexSet> lo =
            n == 0 ? std::vector<VertexSet>{} : faces_of_dim(facets, n - 1);
        int r = rank(boundary_from_faces(lo, hi, n));
        if (static_cast<int>(hi.size()) - r - rank_above != 0) return n;
        rank_above = r;
        hi = std::move(lo);
    }
    return lower_exclusive;
}

namespace {

// Canonicalize a chain mod 2 and check every member is an n-face.
std::vector<VertexSet> checked_support(std::span<const VertexSet> facets, const Chain& c) {
    std::vector<std::uint64_t> bits;
    bits.reserve(c.faces.size());
    for (VertexSet f : c.faces) {
        if (f.size() != c.dim + 1)
            throw InputError("chain member has the wrong cardinality for its dimension");
        bool inside = false;
        for (VertexSet s : facets)
            if (f.subset_of(s)) {
                inside = true;
                break;
            }
        if (!inside) throw InputError("chain contains a non-face of the complex");
        bits.push_back(f.bits());
    }
    std::sort(bits.begin(), bits.end());
    // Pairs cancel over GF(2).
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < bits.size();) {
        std::size_t j = i;
        while (j < bits.size() && bits[j] == bits[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(VertexSet::from_bits(bits[i]));
        i = j;
    }
    return out;
}

Gf2Vector indicator(const std::vector<VertexSet>& basis, const std::vector<VertexSet>& support) {
    Gf2Vector v(static_cast<int>(basis.size()));
    for (VertexSet f : support) v.set(face_row(basis, f), true);
    return v;
}

}  // namespace

bool is_cycle(std::span<const VertexSet> facets, const Chain& c) {
    if (facets.empty()) throw InputError("void complex");
    if (c.dim < -1) throw InputError("chain dimension below -1");
    std::vector<VertexSet> support = checked_support(facets, c);
    if (c.dim == -1) return true;  // ∂_{-1} maps into the zero module
    std::vector<VertexSet> cols = faces_of_dim(facets, c.dim);
    Gf2Matrix d = boundary_matrix(facets, c.dim);
    return d.apply(indicator(cols, support)).is_zero();
}

bool is_boundary(std::span<const VertexSet> facets, const Chain& c) {
    if (facets.empty()) throw InputError("void complex");
    if (c.dim < -1) throw InputError("chain dimension below -1");
    std::vector<VertexSet> support = checked_support(facets, c);
    if (support.empty()) return true;
    const int d = dim_of(facets);
    if (c.dim >= d) return false;  // no (dim+1)-chains to bound a non-zero chain
    std::vector<VertexSet> basis = faces_of_dim(facets, c.dim);
    Gf2Matrix up = boundary_matrix(facets, c.dim + 1);
    return in_column_space(up, indicator(basis, support));
}

bool is_cycle(const SimplicialComplex& x, const Chain& c) {
    if (x.is_void()) throw InputError("void complex");
    return is_cycle(std::span<const VertexSet>(x.facets()), c);
}

bool is_boundary(const SimplicialComplex& x, const Chain& c) {
    if (x.is_void()) throw InputError("void complex");
    return is_boundary(std::span<const VertexSet>(x.facets()), c);
}

}  // namespace leray
