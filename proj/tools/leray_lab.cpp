#include <algorithm>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leray/complex_io.hpp"
#include "leray/errors.hpp"
#include "leray/explore.hpp"
#include "leray/facet_graph.hpp"
#include "leray/homology.hpp"
#include "leray/json_report.hpp"
#include "leray/leray.hpp"
#include "leray/ordering.hpp"
#include "leray/stanley_reisner.hpp"
#include "leray/structure.hpp"

namespace {

using namespace leray;
using nlohmann::json;

struct GlobalOpts {
    bool json = false;
    int threads = 1;
    int max_brute = 8;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string label_set(const SimplicialComplex& x, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        first = false;
        out += x.label(v);
    }
    return out + "}";
}

std::string order_names(const SimplicialComplex& x, const FacetOrdering& ord) {
    std::string out;
    for (std::size_t k = 0; k < ord.perm.size(); ++k) {
        if (k) out += " < ";
        out += label_set(x, x.facets()[static_cast<std::size_t>(ord.perm[k])]);
    }
    return out;
}

LerayOptions leray_opts(const GlobalOpts& g) {
    LerayOptions o;
    o.threads = g.threads;
    return o;
}

int cmd_homology(const GlobalOpts& g, const std::string& file) {
    SimplicialComplex x = read_complex_file(file);
    if (x.is_void()) throw InputError("void complex");
    FVector fv = f_vector(x);
    auto betti = all_betti(x);
    if (g.json) {
        json j = json_envelope("homology");
        j["complex"] = to_json(x);
        j["dim"] = dimension(x);
        j["f_vector"] = fv.counts;
        j["reduced_betti"] = betti;
        emit(j);
        return 0;
    }
    std::cout << "vertices: " << x.num_vertices() << ", facets: " << x.facet_count()
              << ", dim: " << dimension(x) << "\n";
    std::cout << "f-vector (f_-1..f_dim):";
    for (std::uint64_t c : fv.counts) std::cout << " " << c;
    std::cout << "\nreduced betti (dim 0..):";
    for (std::uint64_t b : betti) std::cout << " " << b;
    std::cout << "\n";
    return 0;
}

int cmd_leray(const GlobalOpts& g, const std::string& file) {
    SimplicialComplex x = read_complex_file(file);
    LerayWitness w = leray_number(x, leray_opts(g));
    if (g.json) {
        json j = json_envelope("leray");
        j["complex"] = to_json(x);
        j["result"] = to_json(x, w);
        emit(j);
        return 0;
    }
    std::cout << "L = " << w.leray << "\n";
    if (w.witness_set)
        std::cout << "witness window " << label_set(x, *w.witness_set)
                  << " with nonzero homology in dim " << *w.witness_dim << "\n";
    return 0;
}

void print_order_report(const SimplicialComplex& x, const FacetOrdering& ord,
                        const OrderingReport& rep) {
    std::cout << "order: " << order_names(x, ord) << "\n";
    std::cout << "M_ord = " << rep.m_value << ", N_ord = " << rep.n_value
              << ", gamma_ord = " << rep.gamma << "\n";
    std::cout << "weak shelling: " << (rep.is_weak_shelling ? "yes" : "no") << "\n";
}

int cmd_m(const GlobalOpts& g, const std::string& file, const std::vector<int>& order,
          bool brute) {
    SimplicialComplex x = read_complex_file(file);
    OrderingCaps caps;
    caps.brute_max_facets = g.max_brute;
    if (!order.empty()) {
        FacetOrdering ord{order};
        OrderingReport rep = m_of_order(x, ord);
        if (g.json) {
            json j = json_envelope("m");
            j["complex"] = to_json(x);
            j["result"] = to_json(x, rep, ord);
            emit(j);
            return 0;
        }
        print_order_report(x, ord, rep);
        return 0;
    }
    MResult dp = m_number(x, caps);
    int oracle = -1;
    if (brute) {
        oracle = m_number_bruteforce(x, caps);
        if (oracle != dp.m)
            throw InvariantViolation("ordering DP disagrees with the permutation oracle: " +
                                     std::to_string(dp.m) + " vs " +
                                     std::to_string(oracle));
    }
    if (g.json) {
        json j = json_envelope("m");
        j["complex"] = to_json(x);
        j["result"] = to_json(x, dp);
        if (brute) j["result"]["oracle_m"] = oracle;
        emit(j);
        return 0;
    }
    std::cout << "M = " << dp.m << " (dp over " << dp.dp_states_explored
              << " transitions)\n";
    if (brute) std::cout << "M = " << oracle << " (permutation oracle)\n";
    std::cout << "optimal order: " << order_names(x, dp.optimal_order) << "\n";
    return 0;
}

int cmd_shelling(const GlobalOpts& g, const std::string& file,
                 const std::vector<int>& order) {
    SimplicialComplex x = read_complex_file(file);
    if (!order.empty()) {
        FacetOrdering ord{order};
        OrderingReport rep = m_of_order(x, ord);
        if (g.json) {
            json j = json_envelope("shelling");
            j["complex"] = to_json(x);
            j["result"] = to_json(x, rep, ord);
            emit(j);
            return 0;
        }
        print_order_report(x, ord, rep);
        return 0;
    }
    auto best = weak_shelling_min_m(x);
    if (g.json) {
        json j = json_envelope("shelling");
        j["complex"] = to_json(x);
        if (best) {
            j["result"] = {{"exists", true},
                           {"min_m", best->first},
                           {"order", best->second.perm}};
        } else {
            j["result"] = {{"exists", false}};
        }
        emit(j);
        return 0;
    }
    if (!best) {
        std::cout << "no weak shelling exists\n";
        return 0;
    }
    std::cout << "best weak shelling: M_ord = " << best->first << "\n";
    std::cout << "order: " << order_names(x, best->second) << "\n";
    return 0;
}

int cmd_betti(const GlobalOpts& g, const std::string& file) {
    SimplicialComplex x = read_complex_file(file);
    BettiTable t = hochster_table(x, leray_opts(g));
    if (g.json) {
        json j = json_envelope("betti");
        j["complex"] = to_json(x);
        j["result"] = to_json(t);
        emit(j);
        return 0;
    }
    std::cout << "graded betti numbers of the face ideal (" << t.num_vars
              << " variables):\n";
    for (const auto& [key, value] : t.entries)
        std::cout << "  beta(" << key.first << ", " << key.second << ") = " << value
                  << "\n";
    if (t.entries.empty()) std::cout << "  (zero ideal)\n";
    std::cout << "max j = " << t.max_j() << "\n";
    return 0;
}

int cmd_ideal2complex(const GlobalOpts& g, const std::string& file) {
    std::vector<std::string> warnings;
    MonomialIdeal ideal = parse_ideal(read_text_file(file), &warnings);
    std::vector<std::string> dropped;
    SimplicialComplex x = ideal_to_complex(ideal, &dropped);
    for (const std::string& w : warnings) std::cerr << "note: " << w << "\n";
    for (const std::string& v : dropped)
        std::cerr << "note: variable " << v << " removed by a degree-1 generator\n";
    if (g.json) {
        json j = json_envelope("ideal2complex");
        j["ideal"] = to_json(ideal);
        j["complex"] = to_json(x);
        j["dropped_vars"] = dropped;
        emit(j);
        return 0;
    }
    std::cout << print_complex(x);
    return 0;
}

int cmd_complex2ideal(const GlobalOpts& g, const std::string& file) {
    SimplicialComplex x = read_complex_file(file);
    MonomialIdeal ideal = complex_to_ideal(x);
    if (g.json) {
        json j = json_envelope("complex2ideal");
        j["complex"] = to_json(x);
        j["ideal"] = to_json(ideal);
        emit(j);
        return 0;
    }
    std::cout << print_ideal(ideal) << "\n";
    return 0;
}

int cmd_eg(const GlobalOpts& g, const std::string& file) {
    SimplicialComplex x = read_complex_file(file);
    EgReport r = eg_report(x);
    if (g.json) {
        json j = json_envelope("eg");
        j["complex"] = to_json(x);
        j["result"] = to_json(r);
        emit(j);
        return 0;
    }
    std::cout << "homology coefficients: GF(2)\n";
    std::cout << "reg = " << r.reg << ", deg = " << r.deg << ", codim = " << r.codim
              << ", alpha = " << r.alpha << ", gamma = " << r.gamma << "\n";
    std::cout << "weak bound = " << r.weak_bound
              << " (deg - codim + 1 + alpha + gamma), holds = "
              << (r.weak_holds ? "true" : "false") << "\n";
    std::cout << "classic bound = " << r.classic_bound
              << " (deg - codim + 1), classic_holds = "
              << (r.classic_holds ? "true" : "false") << "\n";
    std::cout << "gamma witness order: " << order_names(x, r.witness_order) << "\n";
    return 0;
}

int cmd_tree(const GlobalOpts& g, const std::string& file, const std::vector<int>& order,
             bool do_export) {
    SimplicialComplex x = read_complex_file(file);
    WeightedFacetGraph graph = weighted_graph(x);
    SpanningTree tree;
    std::string how;
    if (!order.empty()) {
        tree = construction_tree(x, FacetOrdering{order});
        how = "construction tree of the given order";
    } else {
        tree = maximum_spanning_tree(graph);
        how = "maximum-weight spanning tree";
    }
    int chi = chi_w(graph, tree);
    int n_val = chi - x.num_vertices() + 1;
    if (do_export) {
        std::cout << export_edge_list(graph, &tree, x.num_vertices());
        return 0;
    }
    if (g.json) {
        json j = json_envelope("tree");
        j["complex"] = to_json(x);
        j["result"] = to_json(graph, &tree);
        j["result"]["tree_kind"] = how;
        j["result"]["n_value"] = n_val;
        j["result"]["two_regular"] = two_regular_tree_test(x);
        emit(j);
        return 0;
    }
    std::cout << how << ":";
    for (auto [a, b] : tree.edges) std::cout << " (" << a << "," << b << ")";
    std::cout << "\nchi_w = " << chi << ", N = chi_w - |V| + 1 = " << n_val << "\n";
    std::cout << "2-regular by tree test: "
              << (two_regular_tree_test(x) ? "true" : "false") << "\n";
    return 0;
}

int cmd_structure(const GlobalOpts& g, const std::string& file) {
    SimplicialComplex x = read_complex_file(file);
    EqualityReport r = verify_equality_theorem(x, leray_opts(g));
    bool hypothesis = r.equality && r.weak_shelling_optimal;
    bool counterexample = hypothesis && !(r.conclusion_holds && r.betti_cap_ok);
    if (g.json) {
        json j = json_envelope("structure");
        j["complex"] = to_json(x);
        j["result"] = to_json(x, r);
        emit(j);
    } else {
        std::cout << "L = " << r.leray << ", M = " << r.m << ", equality: "
                  << (r.equality ? "yes" : "no") << "\n";
        std::cout << "weak shelling attaining M: "
                  << (r.weak_shelling_optimal ? "yes" : "no") << "\n";
        if (r.equality) {
            std::cout << "case " << r.case_id << "\n";
            for (const GeneratorWitness& w : r.witnesses)
                std::cout << "  witness "
                          << (w.kind == WitnessKind::induced_cycle
                                  ? "induced cycle "
                                  : "boundary complex ")
                          << label_set(x, w.vertices) << " in window "
                          << label_set(x, w.window)
                          << (w.is_generator ? " generates" : " does not generate")
                          << " homology in dim " << w.hom_dim << "\n";
            std::cout << "betti cap (<= 1 per window): "
                      << (r.betti_cap_ok ? "ok" : "violated") << "\n";
            std::cout << "conclusion verified: "
                      << (r.conclusion_holds ? "yes" : "no") << "\n";
        }
    }
    if (counterexample) {
        std::string path = dump_reproducer(x, "structure-conclusion-failure", ".");
        std::cerr << "error: hypothesis satisfied but conclusion failed; reproducer: "
                  << path << "\n";
        throw InvariantViolation("equality-structure conclusion failed");
    }
    return 0;
}

int cmd_explore(const GlobalOpts& g, const ExploreConfig& cfg, int samples, int orders) {
    if (samples < 1) throw InputError("need at least one sample");
    if (orders < 1) throw InputError("need at least one ordering per sample");
    std::map<int, int> l_hist, m_hist;
    LerayOptions lopt = leray_opts(g);
    for (int s = 0; s < samples; ++s) {
        std::uint64_t index = static_cast<std::uint64_t>(s);
        SimplicialComplex x = random_complex(cfg, index);
        int l = leray_number(x, lopt).leray;
        int m = m_number(x).m;
        auto violation = [&](const std::string& reason) {
            std::string path = dump_reproducer(x, reason, ".");
            std::cerr << "error: " << reason << " at sample " << s
                      << "; reproducer: " << path << "\n";
            throw InvariantViolation(reason);
        };
        if (l > m) violation("L <= M failed");
        SplitMix64 rng = keyed_rng(cfg.seed ^ 0x9D1CE4E5B9ull, index);
        std::vector<int> perm(x.facets().size());
        std::iota(perm.begin(), perm.end(), 0);
        for (int r = 0; r < orders; ++r) {
            for (std::size_t i = perm.size(); i > 1; --i)
                std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.below(i))]);
            FacetOrdering ord{perm};
            OrderingReport rep = m_of_order(x, ord);
            if (m > rep.m_value) violation("M <= M_ord failed");
            if (rep.m_value > rep.n_value) violation("M_ord <= N_ord failed");
            SpanningTree tree = construction_tree(x, ord);
            if (rep.n_value != chi_w(weighted_graph(x), tree) - x.num_vertices() + 1)
                violation("N_ord != chi_w(tree) - |V| + 1");
        }
        ++l_hist[l];
        ++m_hist[m];
    }
    if (g.json) {
        json j = json_envelope("explore");
        json lh = json::object(), mh = json::object();
        for (auto [k, v] : l_hist) lh[std::to_string(k)] = v;
        for (auto [k, v] : m_hist) mh[std::to_string(k)] = v;
        j["result"] = {{"samples", samples},
                       {"orderings_per_sample", orders},
                       {"l_histogram", lh},
                       {"m_histogram", mh},
                       {"violations", 0}};
        emit(j);
        return 0;
    }
    std::cout << "samples: " << samples << ", orderings per sample: " << orders
              << ", violations: 0\n";
    std::cout << "L histogram:";
    for (auto [k, v] : l_hist) std::cout << " " << k << ":" << v;
    std::cout << "\nM histogram:";
    for (auto [k, v] : m_hist) std::cout << " " << k << ":" << v;
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"leray-lab: Leray numbers, facet-ordering bounds, and "
                 "Stanley-Reisner reports for simplicial complexes"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "machine-readable JSON output");
    app.add_option("--threads", g.threads, "parallelism cap")->check(CLI::Range(1, 256));
    app.add_option("--max-brute", g.max_brute,
                   "facet cap for the permutation oracle");

    std::string file;
    std::vector<int> order;
    bool brute = false, do_export = false;

    auto* homology = app.add_subcommand("homology", "f-vector and reduced betti numbers");
    homology->add_option("FILE", file)->required();
    auto* leray_cmd = app.add_subcommand("leray", "Leray number with witness window");
    leray_cmd->add_option("FILE", file)->required();
    auto* m_cmd = app.add_subcommand("m", "ordering bound M (min over facet orders)");
    m_cmd->add_option("FILE", file)->required();
    m_cmd->add_option("--order", order, "facet indices of one order")->delimiter(',');
    m_cmd->add_flag("--brute", brute, "cross-check against the permutation oracle");
    auto* shelling = app.add_subcommand("shelling", "weak shellings and their M values");
    shelling->add_option("FILE", file)->required();
    shelling->add_option("--order", order, "facet indices of one order")->delimiter(',');
    auto* betti = app.add_subcommand("betti", "graded betti table of the face ideal");
    betti->add_option("FILE", file)->required();
    auto* i2c = app.add_subcommand("ideal2complex", "Stanley-Reisner complex of an ideal");
    i2c->add_option("FILE", file)->required();
    auto* c2i = app.add_subcommand("complex2ideal", "Stanley-Reisner ideal of a complex");
    c2i->add_option("FILE", file)->required();
    auto* eg = app.add_subcommand("eg", "regularity bounds report");
    eg->add_option("FILE", file)->required();
    auto* tree = app.add_subcommand("tree", "weighted facet graph and spanning trees");
    tree->add_option("FILE", file)->required();
    tree->add_option("--order", order, "facet indices of one order")->delimiter(',');
    tree->add_flag("--export", do_export, "print the edge-list format");
    auto* structure = app.add_subcommand("structure", "equality-structure report");
    structure->add_option("FILE", file)->required();

    auto* explore = app.add_subcommand("explore", "seeded random property sweep");
    ExploreConfig cfg;
    int samples = 100, orders = 3;
    explore->add_option("--vertices", cfg.n_vertices, "vertex pool size")->required();
    explore->add_option("--facets", cfg.n_facets, "facets per draw")->required();
    explore->add_option("--samples", samples, "number of samples")->required();
    explore->add_option("--seed", cfg.seed, "stream seed")->required();
    explore->add_option("--dim-min", cfg.dim_min, "minimum facet dimension");
    explore->add_option("--dim-max", cfg.dim_max, "maximum facet dimension");
    explore->add_option("--orders", orders, "random orderings checked per sample");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (homology->parsed()) return cmd_homology(g, file);
        if (leray_cmd->parsed()) return cmd_leray(g, file);
        if (m_cmd->parsed()) return cmd_m(g, file, order, brute);
        if (shelling->parsed()) return cmd_shelling(g, file, order);
        if (betti->parsed()) return cmd_betti(g, file);
        if (i2c->parsed()) return cmd_ideal2complex(g, file);
        if (c2i->parsed()) return cmd_complex2ideal(g, file);
        if (eg->parsed()) return cmd_eg(g, file);
        if (tree->parsed()) return cmd_tree(g, file, order, do_export);
        if (structure->parsed()) return cmd_structure(g, file);
        if (explore->parsed()) return cmd_explore(g, cfg, samples, orders);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
