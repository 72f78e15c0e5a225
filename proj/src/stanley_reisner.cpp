#include "leray/stanley_reisner.hpp"

#include <algorithm>
#include <map>

#include "leray/errors.hpp"
#include "leray/leray.hpp"

namespace leray {

namespace {

struct Pos {
    int line = 1;
    int col = 1;
};

[[noreturn]] void fail_at(Pos p, const std::string& msg) {
    throw InputError("line " + std::to_string(p.line) + ", col " + std::to_string(p.col) +
                     ": " + msg);
}

bool is_name_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool is_name_char(char c) { return is_name_start(c) || (c >= '0' && c <= '9'); }

struct RawGenerator {
    std::vector<std::string> names;
    Pos pos;  // where the generator started
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, std::vector<std::string>* warnings) {
    // Tokenize into generator chunks. Commas demand a non-empty generator on
    // both sides; newlines merely terminate the current generator.
    std::vector<RawGenerator> raw;
    RawGenerator cur;
    bool expecting_var = false;    // a '*' was seen, a name must follow
    bool after_comma = false;      // a comma was seen, a generator must follow
    Pos p;
    Pos comma_pos;
    std::size_t i = 0;
    auto flush = [&](bool by_comma, Pos where) {
        if (cur.names.empty()) {
            if (by_comma || after_comma) fail_at(where, "empty generator");
            return;
        }
        if (expecting_var) fail_at(where, "dangling '*' in generator");
        raw.push_back(cur);
        cur = RawGenerator{};
        after_comma = by_comma;
        if (by_comma) comma_pos = where;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            if (expecting_var) fail_at(p, "dangling '*' in generator");
            if (!cur.names.empty()) flush(false, p);
            ++i;
            ++p.line;
            p.col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++p.col;
            continue;
        }
        if (c == ',') {
            flush(true, p);
            ++i;
            ++p.col;
            continue;
        }
        if (c == '*') {
            if (cur.names.empty() || expecting_var) fail_at(p, "'*' needs a variable on each side");
            expecting_var = true;
            ++i;
            ++p.col;
            continue;
        }
        if (is_name_start(c)) {
            Pos start = p;
            std::size_t begin = i;
            while (i < text.size() && is_name_char(text[i])) {
                ++i;
                ++p.col;
            }
            if (cur.names.empty()) cur.pos = start;
            cur.names.emplace_back(text.substr(begin, i - begin));
            expecting_var = false;
            after_comma = false;
            continue;
        }
        fail_at(p, std::string("unexpected character '") + c + "'");
    }
    if (expecting_var) fail_at(p, "dangling '*' in generator");
    if (!cur.names.empty())
        flush(false, p);
    else if (after_comma)
        fail_at(comma_pos, "empty generator after trailing comma");

    // Variable ids in sorted name order: the unique policy under which
    // parse ∘ print ∘ parse is the identity.
    std::vector<std::string> vars;
    for (const auto& g : raw)
        for (const auto& name : g.names) vars.push_back(name);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (vars.size() > VertexSet::kMaxVertices)
        throw InputError("at most 64 variables are supported");
    std::map<std::string, int> id;
    for (std::size_t v = 0; v < vars.size(); ++v) id[vars[v]] = static_cast<int>(v);

    std::vector<VertexSet> gens;
    for (const auto& g : raw) {
        VertexSet s;
        for (const auto& name : g.names) {
            int v = id[name];
            if (s.contains(v))
                fail_at(g.pos, "generator is not square-free: variable '" + name + "' repeats");
            s = s.with(v);
        }
        gens.push_back(s);
    }

    // Drop non-minimal generators (duplicates included), keep a record.
    std::vector<VertexSet> kept;
    std::vector<std::size_t> order(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return gens[a].size() < gens[b].size(); });
    std::vector<bool> dropped(gens.size(), false);
    for (std::size_t a = 0; a < order.size(); ++a) {
        if (dropped[order[a]]) continue;
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            if (dropped[order[b]]) continue;
            if (gens[order[a]].subset_of(gens[order[b]])) dropped[order[b]] = true;
        }
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (!dropped[k]) {
            kept.push_back(gens[k]);
            continue;
        }
        if (warnings) {
            std::string names;
            for (int v : gens[k]) {
                if (!names.empty()) names += "*";
                names += vars[static_cast<std::size_t>(v)];
            }
            warnings->push_back("dropped non-minimal generator " + names);
        }
    }
    std::sort(kept.begin(), kept.end(),
              [](VertexSet a, VertexSet b) { return canonical_less(a, b); });

    MonomialIdeal ideal;
    ideal.vars = std::move(vars);
    ideal.gens = std::move(kept);
    return ideal;
}

std::string print_ideal(const MonomialIdeal& ideal) {
    // Name-based canonical form, independent of the id assignment.
    std::vector<std::vector<std::string>> printed;
    for (VertexSet g : ideal.gens) {
        std::vector<std::string> names;
        for (int v : g) names.push_back(ideal.vars[static_cast<std::size_t>(v)]);
        std::sort(names.begin(), names.end());
        printed.push_back(std::move(names));
    }
    std::sort(printed.begin(), printed.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::string out;
    for (const auto& g : printed) {
        if (!out.empty()) out += ", ";
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (k) out += "*";
            out += g[k];
        }
    }
    return out;
}

namespace {

// All maximal independent sets of the generator hypergraph: branch on one
// uncovered generator, removing one of its vertices per branch; a branch
// whose candidate is already inside a recorded set cannot yield a new
// maximal set.
void enumerate_independent(const std::vector<VertexSet>& gens, VertexSet cand,
                           std::vector<VertexSet>& out) {
    for (VertexSet found : out)
        if (cand.subset_of(found)) return;
    const VertexSet* uncovered = nullptr;
    for (const VertexSet& g : gens) {
        if (g.subset_of(cand)) {
            uncovered = &g;
            break;
        }
    }
    if (uncovered == nullptr) {
        out.push_back(cand);
        return;
    }
    for (int v : *uncovered) enumerate_independent(gens, cand.without(v), out);
}

}  // namespace

SimplicialComplex ideal_to_complex(const MonomialIdeal& ideal,
                                   std::vector<std::string>* dropped_vars) {
    // Degree-1 generators delete their variable from the universe outright.
    VertexSet removed;
    for (VertexSet g : ideal.gens) {
        if (g.empty()) throw InputError("empty generator");
        if (g.size() == 1) removed = removed | g;
    }
    std::vector<std::string> labels;
    std::vector<int> new_id(ideal.vars.size(), -1);
    for (std::size_t v = 0; v < ideal.vars.size(); ++v) {
        if (removed.contains(static_cast<int>(v))) {
            if (dropped_vars) dropped_vars->push_back(ideal.vars[v]);
            continue;
        }
        new_id[v] = static_cast<int>(labels.size());
        labels.push_back(ideal.vars[v]);
    }
    std::vector<VertexSet> gens;
    for (VertexSet g : ideal.gens) {
        if (g.size() == 1) continue;
        VertexSet mapped;
        for (int v : g) {
            if (v >= static_cast<int>(ideal.vars.size()) || new_id[static_cast<std::size_t>(v)] < 0)
                throw InputError("generators are not an antichain over the variable set");
            mapped = mapped.with(new_id[static_cast<std::size_t>(v)]);
        }
        gens.push_back(mapped);
    }
    VertexSet universe = VertexSet::full(static_cast<int>(labels.size()));
    std::vector<VertexSet> facets;
    enumerate_independent(gens, universe, facets);
    facets = antichain_reduce(std::move(facets));
    return SimplicialComplex::from_facets(std::move(facets), std::move(labels));
}

MonomialIdeal complex_to_ideal(const SimplicialComplex& x) {
    if (x.is_void()) throw InputError("void complex");
    MonomialIdeal ideal;
    ideal.vars = x.labels();
    ideal.gens = minimal_nonfaces(x);
    return ideal;
}

int degree(const SimplicialComplex& x) {
    if (x.is_void()) throw InputError("void complex");
    if (x.num_vertices() == 0) throw InputError("degree needs at least one vertex");
    const int top = dimension(x) + 1;
    int count = 0;
    for (VertexSet f : x.facets())
        if (f.size() == top) ++count;
    return count;
}

int codim(const SimplicialComplex& x) {
    if (x.is_void()) throw InputError("void complex");
    if (x.num_vertices() == 0) throw InputError("codim needs at least one vertex");
    return x.num_vertices() - (dimension(x) + 1);
}

int alpha(const SimplicialComplex& x) { return x.facet_count() - degree(x); }

EgReport eg_report(const SimplicialComplex& x, const OrderingCaps& caps) {
    if (x.is_void()) throw InputError("void complex");
    if (is_simplex(x)) throw InputError("zero ideal: regularity is undefined for a simplex");
    EgReport rep;
    rep.reg = regularity(x);
    rep.deg = degree(x);
    rep.codim = codim(x);
    rep.alpha = alpha(x);
    auto [g, order] = gamma_min_order(x, caps);
    rep.gamma = g;
    rep.witness_order = std::move(order);
    rep.classic_bound = rep.deg - rep.codim + 1;
    rep.weak_bound = rep.classic_bound + rep.alpha + rep.gamma;
    rep.weak_holds = rep.reg <= rep.weak_bound;
    rep.classic_holds = rep.reg <= rep.classic_bound;
    return rep;
}

}  // namespace leray
