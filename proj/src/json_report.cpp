#include "leray/json_report.hpp"

namespace leray {

using nlohmann::json;

json json_envelope(const std::string& command) {
    return json{{"version", kJsonSchema}, {"command", command}};
}

json labels_json(const SimplicialComplex& x, VertexSet s) {
    json arr = json::array();
    for (int v : s) arr.push_back(x.label(v));
    return arr;
}

json to_json(const SimplicialComplex& x) {
    json facets = json::array();
    for (VertexSet f : x.facets()) facets.push_back(labels_json(x, f));
    return json{{"labels", x.labels()}, {"facets", facets}};
}

json to_json(const SimplicialComplex& x, const LerayWitness& w) {
    json j{{"leray", w.leray}};
    j["witness_window"] = w.witness_set ? labels_json(x, *w.witness_set) : json{};
    j["witness_dim"] = w.witness_dim ? json(*w.witness_dim) : json{};
    return j;
}

json to_json(const BettiTable& t) {
    json entries = json::array();
    for (const auto& [key, value] : t.entries)
        entries.push_back(json{{"i", key.first}, {"j", key.second}, {"value", value}});
    return json{{"num_vars", t.num_vars}, {"max_j", t.max_j()}, {"entries", entries}};
}

json to_json(const SimplicialComplex&, const OrderingReport& r, const FacetOrdering& ord) {
    return json{{"order", ord.perm},
                {"m_value", r.m_value},
                {"n_value", r.n_value},
                {"gamma", r.gamma},
                {"conn", r.conn},
                {"step_increments", r.step_increments},
                {"is_weak_shelling", r.is_weak_shelling}};
}

json to_json(const SimplicialComplex&, const MResult& r) {
    return json{{"m", r.m},
                {"optimal_order", r.optimal_order.perm},
                {"dp_states_explored", r.dp_states_explored}};
}

json to_json(const MonomialIdeal& ideal) {
    json gens = json::array();
    for (VertexSet g : ideal.gens) {
        json one = json::array();
        for (int v : g) one.push_back(ideal.vars[static_cast<std::size_t>(v)]);
        gens.push_back(one);
    }
    return json{{"vars", ideal.vars}, {"gens", gens}, {"text", print_ideal(ideal)}};
}

json to_json(const EgReport& r) {
    return json{{"field", "GF(2)"},
                {"reg", r.reg},
                {"deg", r.deg},
                {"codim", r.codim},
                {"alpha", r.alpha},
                {"gamma", r.gamma},
                {"weak_bound", r.weak_bound},
                {"classic_bound", r.classic_bound},
                {"weak_holds", r.weak_holds},
                {"classic_holds", r.classic_holds},
                {"witness_order", r.witness_order.perm}};
}

json to_json(const WeightedFacetGraph& g, const SpanningTree* tree) {
    json edges = json::array();
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            int w = g.edge_weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (w > 0) edges.push_back(json{{"i", i}, {"j", j}, {"w", w}});
        }
    json j{{"num_facets", g.n}, {"vertex_weights", g.vertex_weight}, {"edges", edges}};
    if (tree) {
        json te = json::array();
        for (auto [a, b] : tree->edges) te.push_back(json::array({a, b}));
        j["tree"] = te;
        j["chi_w"] = chi_w(g, *tree);
    } else {
        j["chi_w"] = chi_w(g);
    }
    return j;
}

json to_json(const SimplicialComplex& x, const GeneratorWitness& w) {
    return json{{"kind", w.kind == WitnessKind::induced_cycle ? "induced_cycle"
                                                              : "boundary_of_simplex"},
                {"vertices", labels_json(x, w.vertices)},
                {"window", labels_json(x, w.window)},
                {"hom_dim", w.hom_dim},
                {"is_generator", w.is_generator}};
}

json to_json(const SimplicialComplex& x, const EqualityReport& r) {
    json witnesses = json::array();
    for (const GeneratorWitness& w : r.witnesses) witnesses.push_back(to_json(x, w));
    return json{{"leray", r.leray},
                {"m", r.m},
                {"equality", r.equality},
                {"weak_shelling_optimal", r.weak_shelling_optimal},
                {"case", r.case_id},
                {"witnesses", witnesses},
                {"betti_cap_ok", r.betti_cap_ok},
                {"conclusion_holds", r.conclusion_holds}};
}

}  // namespace leray
