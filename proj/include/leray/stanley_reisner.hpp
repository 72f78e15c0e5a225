#ifndef LERAY_STANLEY_REISNER_HPP
#define LERAY_STANLEY_REISNER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "leray/ordering.hpp"
#include "leray/simplicial_complex.hpp"

namespace leray {

// A square-free monomial ideal: variable names plus generator supports.
// Generators are an antichain in canonical (size, bit pattern) order; the
// zero ideal has no generators. A generator is never empty.
struct MonomialIdeal {
    std::vector<std::string> vars;
    std::vector<VertexSet> gens;
    bool operator==(const MonomialIdeal&) const = default;
};

// Grammar: generators separated by commas or newlines; within a generator,
// variables joined by '*' or plain whitespace; names match
// [A-Za-z_][A-Za-z0-9_]*. A repeated variable in one generator (non-square-
// free input) is an error, as is an empty comma-delimited generator. Variable
// ids are assigned in sorted name order (the only policy making
// parse → print → parse the identity). Non-minimal generators are dropped,
// one note per drop appended to *warnings when given. Errors carry
// line:column positions.
MonomialIdeal parse_ideal(std::string_view text,
                          std::vector<std::string>* warnings = nullptr);

// Canonical text form: variables within a generator sorted by name and
// joined by '*'; generators sorted by (size, name tuple) and joined by ", ".
// The zero ideal prints as the empty string.
std::string print_ideal(const MonomialIdeal& ideal);

// Stanley-Reisner complex of I: facets are the maximal subsets of the
// variables containing no generator. A degree-1 generator {v} removes v from
// the universe outright; such drops are appended to *dropped_vars when given.
// Enumeration branches on an uncovered generator and prunes dominated leaves.
SimplicialComplex ideal_to_complex(const MonomialIdeal& ideal,
                                   std::vector<std::string>* dropped_vars = nullptr);

// Stanley-Reisner ideal of X: generators are the minimal non-faces, variables
// the labels in X's own order. Simplices give the zero ideal.
MonomialIdeal complex_to_ideal(const SimplicialComplex& x);

// Number of facets of maximal dimension. Requires ≥ 1 vertex.
int degree(const SimplicialComplex& x);
// |V| − (dim X + 1).
int codim(const SimplicialComplex& x);
// Facet count minus degree: how far X is from pure.
int alpha(const SimplicialComplex& x);

// The regularity bound reg(I_X) ≤ deg − codim + 1 + α + γ, its classic
// specialization (α = γ = 0), and whether each holds for X. All homology is
// over GF(2). Requires a non-simplex (so regularity is defined).
struct EgReport {
    int reg = 0;
    int deg = 0;
    int codim = 0;
    int alpha = 0;
    int gamma = 0;
    int weak_bound = 0;     // deg − codim + 1 + alpha + gamma
    int classic_bound = 0;  // deg − codim + 1
    bool weak_holds = false;
    bool classic_holds = false;
    FacetOrdering witness_order;  // a γ-optimal ordering
};

EgReport eg_report(const SimplicialComplex& x, const OrderingCaps& caps = {});

}  // namespace leray

#endif
