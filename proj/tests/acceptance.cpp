// Acceptance gate: one criterion per scenario, a PASS/FAIL line each, and a
// wall-clock budget enforced per criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "leray/complex_io.hpp"
#include "leray/explore.hpp"
#include "leray/facet_graph.hpp"
#include "leray/homology.hpp"
#include "leray/leray.hpp"
#include "leray/ordering.hpp"
#include "leray/simplicial_complex.hpp"
#include "leray/stanley_reisner.hpp"
#include "leray/structure.hpp"

using namespace leray;

namespace {

SimplicialComplex load(const std::string& name) {
    return read_complex_file(std::string(LERAY_DATA_DIR) + "/" + name);
}

SimplicialComplex sphere_complex(int n) {
    std::vector<VertexSet> fs;
    for (int v = 0; v < n; ++v) fs.push_back(VertexSet::full(n).without(v));
    std::vector<std::string> labels;
    for (int v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
    return SimplicialComplex::from_facets(std::move(fs), std::move(labels));
}

FacetOrdering random_ordering(SplitMix64& rng, int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = m - 1; i > 0; --i) {
        auto j = rng.below(static_cast<std::uint64_t>(i) + 1);
        std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }
    return FacetOrdering{std::move(perm)};
}

struct Checker {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

// ---------------------------------------------------------------- criterion 1

void octahedral_fragment_invariants(Checker& c) {
    auto x = load("oct4.cplx");

    auto lw = leray_number(x);
    c.require(lw.leray == 2, "L(oct4) == 2");
    c.require(lw.witness_set == VertexSet::of({0, 1, 2}), "witness window {1,2,3}");
    c.require(lw.witness_dim == std::optional<int>{1}, "witness dimension 1");

    c.require(all_betti(x) == std::vector<int>{0, 3, 0}, "betti (0,3,0)");

    auto mres = m_number(x);
    c.require(mres.m == 3, "M(oct4) == 3");
    c.require(m_number_bruteforce(x) == 3, "permutation oracle agrees");

    c.require(!weak_shelling_min_m(x).has_value(), "no weak shelling exists");

    std::vector<int> perm = {0, 1, 2, 3};
    int orders = 0;
    bool uniform = true;
    do {
        auto rep = m_of_order(x, FacetOrdering{perm});
        uniform = uniform && rep.m_value == 3 && rep.n_value == 4 && rep.gamma == 3 &&
                  !rep.is_weak_shelling;
        ++orders;
    } while (std::next_permutation(perm.begin(), perm.end()));
    c.require(orders == 24 && uniform,
              "all 24 orders: m = 3, n = 4, gamma = 3, never a weak shelling");

    c.require(minimal_nonfaces(x).size() == 7, "seven minimal non-faces");
    c.require(print_ideal(complex_to_ideal(x)) ==
                  "1*6, 2*5, 3*4, 1*2*3, 1*4*5, 2*4*6, 3*5*6",
              "ideal generators");

    c.require(regularity(x) == 3, "reg == 3");
    auto eg = eg_report(x);
    c.require(eg.deg == 4 && eg.codim == 3 && eg.alpha == 0 && eg.gamma == 3,
              "deg 4, codim 3, alpha 0, gamma 3");
    c.require(eg.weak_bound == 5 && eg.weak_holds, "weak bound 5 holds");
    c.require(eg.classic_bound == 2 && !eg.classic_holds, "classic bound 2 fails");

    auto g = weighted_graph(x);
    c.require(chi_w(g, maximum_spanning_tree(g)) == 9, "best tree chi_w == 9");
    c.require(!two_regular_tree_test(x), "not 2-regular by the tree test");
}

// ---------------------------------------------------------------- criterion 2

void fan_plus_tetrahedron(Checker& c) {
    auto x = load("pent5.cplx");

    auto lw = leray_number(x);
    c.require(lw.leray == 3, "L(pent5) == 3");
    c.require(lw.witness_set == x.universe(), "witness is the full vertex set");
    c.require(lw.witness_dim == std::optional<int>{2}, "witness dimension 2");
    c.require(all_betti(x) == std::vector<int>{0, 0, 1, 0}, "betti (0,0,1,0)");

    c.require(m_number(x).m == 3, "M(pent5) == 3, so L == M");

    c.require(induced_boundary_complexes(x, 3).empty(),
              "no induced boundary complex of a 3-simplex");

    auto weak = weak_shelling_min_m(x);
    c.require(weak.has_value() && weak->first == 4,
              "best weak shelling reaches only 4");

    // Exhaustive: all 120 orders, tracking the plain and weak-shelling minima.
    std::vector<int> perm = {0, 1, 2, 3, 4};
    int min_m = 99, min_weak = 99;
    do {
        FacetOrdering ord{perm};
        auto rep = m_of_order(x, ord);
        min_m = std::min(min_m, rep.m_value);
        if (rep.is_weak_shelling) min_weak = std::min(min_weak, rep.m_value);
    } while (std::next_permutation(perm.begin(), perm.end()));
    c.require(min_m == 3, "exhaustive minimum over 120 orders is 3");
    c.require(min_weak == 4, "exhaustive weak-shelling minimum is 4");

    c.require(regularity(x) == 4, "reg == 4");
}

// ---------------------------------------------------------------- criterion 3

void eight_vertex_equality(Checker& c) {
    auto x = load("sc8.cplx");
    c.require(is_pure(x), "pure");
    c.require(is_strongly_connected(x), "strongly connected");
    c.require(leray_number(x).leray == 3, "L(sc8) == 3");
    c.require(m_number(x).m == 3, "M(sc8) == 3");

    // Facet order 1235 < 1346 < 1356 < 1247 < 1467 < 2348 < 3468 by canonical
    // index: the good ordering below glues each facet along a large meet.
    FacetOrdering good{{0, 2, 1, 4, 3, 6, 5}};
    auto rep = m_of_order(x, good);
    c.require(rep.is_weak_shelling, "known order is a weak shelling");
    c.require(rep.m_value == 3, "known order attains m = 3");
    c.require(rep.step_increments == std::vector<bool>{false, false, false, true, false, true},
              "increments fall at the documented steps");

    auto spheres = induced_boundary_complexes(x, 3);
    c.require(spheres == std::vector<VertexSet>{VertexSet::of({0, 1, 2, 3})},
              "unique induced 3-simplex boundary on {1,2,3,4}");
    for (auto bad : {VertexSet::of({0, 1, 3, 4}), VertexSet::of({0, 1, 2, 5}),
                     VertexSet::of({1, 2, 3, 6}), VertexSet::of({0, 1, 2, 7})})
        c.require(!is_face(x, bad), "documented non-faces stay non-faces");

    auto eq = verify_equality_theorem(x);
    c.require(eq.equality, "L == M");
    c.require(eq.weak_shelling_optimal, "a weak shelling attains M");
    c.require(eq.case_id == 3, "case 3 of the trichotomy");
    c.require(eq.witnesses.size() == 1 && eq.witnesses[0].is_generator &&
                  eq.witnesses[0].vertices == VertexSet::of({0, 1, 2, 3}),
              "certified sphere witness generates");
    c.require(eq.betti_cap_ok, "betti cap <= 1 over every window");
    c.require(eq.conclusion_holds, "conclusion verified");
}

// ---------------------------------------------------------------- criterion 4

void polar_tight_bound(Checker& c) {
    auto x = load("polar.cplx");

    auto ideal = parse_ideal(read_text_file(std::string(LERAY_DATA_DIR) + "/polar.ideal"));
    c.require(ideal_to_complex(ideal) == x, "ideal file matches the complex file");
    c.require(complex_to_ideal(x).gens == ideal.gens, "generator supports agree");

    auto eg = eg_report(x);
    c.require(eg.reg == 3, "reg == 3");
    c.require(eg.deg == 2 && eg.codim == 2 && eg.alpha == 2, "deg 2, codim 2, alpha 2");
    c.require(eg.gamma == 0, "gamma == 0");
    c.require(m_of_order(x, FacetOrdering{{2, 3, 1, 0}}).gamma == 0,
              "documented facet order reaches gamma == 0");
    c.require(eg.weak_bound == 3 && eg.weak_holds, "weak bound 3 holds with equality");
    c.require(eg.classic_bound == 1 && !eg.classic_holds, "classic bound 1 fails");

    c.require(hochster_table(x).max_j() == 3, "graded table tops out at j == 3");
    c.require(regularity(x) == leray_number(x).leray + 1, "reg == L + 1");
}

// ---------------------------------------------------------------- criterion 5

void random_ordering_bounds(Checker& c) {
    ExploreConfig cfg{10, 7, 1, 4, 515151};
    int violations = 0;
    std::string first;
    auto note = [&](std::uint64_t i, const std::string& what) {
        ++violations;
        if (first.empty()) first = "sample " + std::to_string(i) + ": " + what;
    };
    for (std::uint64_t i = 0; i < 1000; ++i) {
        auto x = random_complex(cfg, i);
        int l = leray_number(x).leray;
        int m = m_number(x).m;
        if (l > m) note(i, "L > M");

        SplitMix64 rng = keyed_rng(cfg.seed, i ^ 0xabcdef);
        auto g = weighted_graph(x);
        for (int t = 0; t < 3; ++t) {
            auto ord = random_ordering(rng, x.facet_count());
            auto rep = m_of_order(x, ord);
            if (m > rep.m_value) note(i, "M > m of a sampled order");
            if (rep.m_value > rep.n_value) note(i, "m exceeds n along an order");
            auto tree = construction_tree(x, ord);
            if (chi_w(g, tree) - x.num_vertices() + 1 != rep.n_value)
                note(i, "construction tree does not realize n");
        }

        // Stepwise growth along one more sampled order: a step whose prefix
        // meet is a simplex pins the new Leray number to max(previous, 1); an
        // incrementing step raises it by at most one.
        auto ord = random_ordering(rng, x.facet_count());
        auto rep = m_of_order(x, ord);
        std::vector<VertexSet> prefix = {x.facets()[static_cast<std::size_t>(ord.perm[0])]};
        VertexSet support = prefix[0];
        int prev = 0;
        for (std::size_t t = 1; t < ord.perm.size(); ++t) {
            prefix.push_back(x.facets()[static_cast<std::size_t>(ord.perm[t])]);
            support = support | prefix.back();
            int cur = leray_number(prefix, support).leray;
            if (rep.step_increments[t - 1]) {
                if (cur > prev + 1) note(i, "incrementing step raised L by more than one");
            } else {
                if (cur != std::max(prev, 1)) note(i, "simplex-meet step moved L");
            }
            prev = cur;
        }
        if (!ord.perm.empty() && prev != l && x.facet_count() > 1)
            note(i, "prefix walk did not end at L");
    }
    c.require(violations == 0,
              "1000 samples, 0 violations" + (first.empty() ? "" : "; first: " + first));
}

// ---------------------------------------------------------------- criterion 6

void random_dp_oracles(Checker& c) {
    ExploreConfig cfg{8, 6, 1, 3, 626262};
    int mismatches = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto x = random_complex(cfg, i);
        auto dp = m_number(x);

        std::vector<int> perm(static_cast<std::size_t>(x.facet_count()));
        std::iota(perm.begin(), perm.end(), 0);
        int best_m = 99, best_gamma = 99;
        do {
            auto rep = m_of_order(x, FacetOrdering{perm});
            best_m = std::min(best_m, rep.m_value);
            best_gamma = std::min(best_gamma, rep.gamma);
        } while (std::next_permutation(perm.begin(), perm.end()));

        if (dp.m != best_m) ++mismatches;
        if (m_of_order(x, dp.optimal_order).m_value != best_m) ++mismatches;
        if (gamma_min(x) != best_gamma) ++mismatches;
        auto [gm, gord] = gamma_min_order(x);
        if (gm != best_gamma || m_of_order(x, gord).gamma != gm) ++mismatches;
    }
    c.require(mismatches == 0, "200 samples: DP == permutation oracle for M and gamma");
}

// ---------------------------------------------------------------- criterion 7

void homology_golden(Checker& c) {
    for (int n = 3; n <= 7; ++n) {
        auto sphere = sphere_complex(n);
        auto b = all_betti(sphere);
        bool ok = static_cast<int>(b.size()) == n - 1 && b.back() == 1;
        for (int i = 0; i + 1 < static_cast<int>(b.size()); ++i)
            ok = ok && b[static_cast<std::size_t>(i)] == 0;
        c.require(ok, "sphere on " + std::to_string(n) + " vertices: (0,...,0,1)");
    }
    c.require(all_betti(load("rp2.cplx")) == std::vector<int>{0, 1, 1},
              "projective plane: (0,1,1) over GF(2)");

    ExploreConfig cfg{9, 6, 0, 4, 737373};
    int bad = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        auto x = random_complex(cfg, i);
        for (int n = 0; n < dimension(x); ++n)
            if (!(boundary_matrix(x, n) * boundary_matrix(x, n + 1)).is_zero()) ++bad;
        auto fv = f_vector(x);
        auto b = all_betti(x);
        long long chi = 0;
        for (std::size_t k = 0; k < fv.counts.size(); ++k)
            chi += (k % 2 == 0 ? -1 : 1) * static_cast<long long>(fv.counts[k]);
        long long bsum = 0;
        for (std::size_t k = 0; k < b.size(); ++k)
            bsum += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(b[k]);
        if (chi != bsum) ++bad;
    }
    c.require(bad == 0, "100 samples: boundary-of-boundary and Euler identities");
}

// ---------------------------------------------------------------- criterion 8

void regularity_coherence(Checker& c) {
    ExploreConfig cfg{9, 6, 1, 3, 848484};
    int checked = 0, mismatches = 0;
    for (std::uint64_t i = 0; checked < 200; ++i) {
        auto x = random_complex(cfg, i);
        if (is_simplex(x)) continue;
        ++checked;
        int l = leray_number(x).leray;
        if (hochster_table(x).max_j() != l + 1) ++mismatches;
        if (regularity(x) != l + 1) ++mismatches;
        if (two_regular_tree_test(x) != (l + 1 == 2)) ++mismatches;
    }
    c.require(mismatches == 0,
              "200 non-simplex samples: graded table max j == L + 1 == reg, and the "
              "tree test detects reg == 2 exactly");
}

// ---------------------------------------------------------------- criterion 9

void round_trips(Checker& c) {
    ExploreConfig cfg{8, 5, 1, 3, 959595};
    int bad = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto sample = random_complex(cfg, i);
        // Letter labels: identifier names whose sorted order matches the ids.
        std::vector<std::string> letters;
        for (int v = 0; v < sample.num_vertices(); ++v)
            letters.push_back(std::string(1, static_cast<char>('a' + v)));
        auto x = SimplicialComplex::from_facets(sample.facets(), std::move(letters));

        if (ideal_to_complex(complex_to_ideal(x)) != x) ++bad;
        if (parse_complex(print_complex(x)) != x) ++bad;

        // An antichain ideal with every variable used and generators of
        // size >= 2: the facets themselves.
        MonomialIdeal ideal;
        ideal.vars = x.labels();
        ideal.gens = x.facets();
        if (complex_to_ideal(ideal_to_complex(ideal)) != ideal) ++bad;
        if (parse_ideal(print_ideal(ideal)) != ideal) ++bad;
    }
    c.require(bad == 0, "200 samples: ideal and text round trips are identities");
}

// -------------------------------------------------------------------- harness

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "octahedral fragment golden values", 1.0, octahedral_fragment_invariants},
        {2, "fan plus tetrahedron: equality without optimal weak shelling", 1.0,
         fan_plus_tetrahedron},
        {3, "eight-vertex complex: certified equality witness", 5.0, eight_vertex_equality},
        {4, "polar complex: tight regularity bound", 1.0, polar_tight_bound},
        {5, "random sweep: ordering bounds and stepwise Leray growth", 300.0,
         random_ordering_bounds},
        {6, "random sweep: subset DPs against permutation oracles", 60.0, random_dp_oracles},
        {7, "homology golden values and chain identities", 10.0, homology_golden},
        {8, "random sweep: regularity coherence across modules", 120.0, regularity_coherence},
        {9, "random sweep: ideal and text round trips", 10.0, round_trips},
    };

    int failed = 0;
    for (const auto& crit : criteria) {
        Checker checker;
        auto start = std::chrono::steady_clock::now();
        try {
            crit.run(checker);
        } catch (const std::exception& e) {
            checker.failures.push_back(std::string("exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > crit.limit_seconds)
            checker.failures.push_back("time limit " + std::to_string(crit.limit_seconds) +
                                       "s exceeded");
        bool ok = checker.failures.empty();
        std::ostringstream line;
        line << "criterion " << crit.id << " [" << crit.name << "]: "
             << (ok ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(2)
             << elapsed << "s)";
        if (!ok) line << " -- " << checker.failures.front();
        std::cout << line.str() << '\n';
        if (!ok) ++failed;
    }
    return failed;
}
