#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "leray/errors.hpp"
#include "leray/explore.hpp"
#include "leray/leray.hpp"
#include "leray/ordering.hpp"
#include "leray/simplicial_complex.hpp"

#include "test_support.hpp"

using namespace leray;
using test::load;
using test::make;
using test::random_ordering;

namespace {

// Oracle for gamma: minimum over all m! orderings.
int gamma_bruteforce(const SimplicialComplex& x) {
    std::vector<int> perm(static_cast<std::size_t>(x.facet_count()));
    std::iota(perm.begin(), perm.end(), 0);
    int best = -1;
    do {
        int g = m_of_order(x, FacetOrdering{perm}).gamma;
        if (best < 0 || g < best) best = g;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Oracle for the weak-shelling minimum: scan all orderings.
std::optional<int> weak_min_bruteforce(const SimplicialComplex& x) {
    std::vector<int> perm(static_cast<std::size_t>(x.facet_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<int> best;
    do {
        FacetOrdering ord{perm};
        if (!is_weak_shelling(x, ord)) continue;
        int m = m_of_order(x, ord).m_value;
        if (!best || m < *best) best = m;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST_CASE("prefix meet simplex test") {
    auto oct4 = load("oct4.cplx");
    const auto& f = oct4.facets();
    std::vector<int> p0 = {0};
    CHECK(prefix_meet_is_simplex(f, p0, 1));  // single meet {1}
    std::vector<int> p01 = {0, 1};
    CHECK(!prefix_meet_is_simplex(f, p01, 2));  // meets {2} and {3}: no containment

    // All meets empty: the meet complex is {emptyset}, a simplex.
    auto disjoint = make(4, {{0, 1}, {2, 3}});
    std::vector<int> p = {0};
    CHECK(prefix_meet_is_simplex(disjoint.facets(), p, 1));

    // Adding the tetrahedron to the four triangles of the fan: four edge
    // meets, none containing the others.
    auto pent5 = load("pent5.cplx");
    std::vector<int> fan = {0, 1, 2, 3};
    CHECK(!prefix_meet_is_simplex(pent5.facets(), fan, 4));
}

TEST_CASE("walking one ordering of the octahedral fragment") {
    auto oct4 = load("oct4.cplx");
    auto rep = m_of_order(oct4, FacetOrdering{{0, 1, 2, 3}});
    CHECK(rep.m_value == 3);
    CHECK(rep.step_increments == std::vector<bool>{false, true, true});
    CHECK(rep.conn == std::vector<int>{1, 1, 1});
    CHECK(rep.gamma == 3);
    // n = facet count - |V| + |first facet| + gamma = 4 - 6 + 3 + 3.
    CHECK(rep.n_value == 4);
    CHECK(!rep.is_weak_shelling);
}

TEST_CASE("every ordering of the octahedral fragment looks the same") {
    auto oct4 = load("oct4.cplx");
    std::vector<int> perm = {0, 1, 2, 3};
    int count = 0;
    do {
        auto rep = m_of_order(oct4, FacetOrdering{perm});
        CHECK(rep.m_value == 3);
        CHECK(rep.n_value == 4);
        CHECK(rep.gamma == 3);
        CHECK(!rep.is_weak_shelling);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == 24);
}

TEST_CASE("minimum M over orderings, DP against the permutation oracle") {
    auto oct4 = load("oct4.cplx");
    auto res = m_number(oct4);
    CHECK(res.m == 3);
    CHECK(res.dp_states_explored > 0);
    CHECK(m_of_order(oct4, res.optimal_order).m_value == 3);
    CHECK(m_number_bruteforce(oct4) == 3);

    CHECK(m_number(load("pent5.cplx")).m == 3);
    CHECK(m_number(load("sc8.cplx")).m == 3);
    CHECK(m_number(load("polar.cplx")).m == 2);
    CHECK(m_number(load("rp2.cplx")).m == 7);

    ExploreConfig cfg{8, 6, 1, 3, 515151};
    for (std::uint64_t i = 0; i < 40; ++i) {
        auto x = random_complex(cfg, i);
        auto dp = m_number(x);
        CHECK(dp.m == m_number_bruteforce(x));
        CHECK(m_of_order(x, dp.optimal_order).m_value == dp.m);
    }
}

TEST_CASE("a single facet and a pair of glued edges") {
    auto simplex = make(3, {{0, 1, 2}});
    auto rep = m_of_order(simplex, FacetOrdering{{0}});
    CHECK(rep.m_value == 1);
    CHECK(rep.n_value == 1);
    CHECK(rep.gamma == 0);
    CHECK(rep.is_weak_shelling);
    CHECK(m_number(simplex).m == 1);

    // Path on three vertices: the meet at step 1 is the simplex {1}, so M
    // never increments, yet the Leray number is 1 (the two endpoints).
    auto path = make(3, {{0, 1}, {1, 2}});
    CHECK(m_number(path).m == 1);
    CHECK(leray_number(path).leray == 1);
}

TEST_CASE("weak shellings of the corpus complexes") {
    auto oct4 = load("oct4.cplx");
    std::vector<int> perm = {0, 1, 2, 3};
    do {
        CHECK(!is_weak_shelling(oct4, FacetOrdering{perm}));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(!weak_shelling_min_m(oct4).has_value());

    auto pent5 = load("pent5.cplx");
    auto w5 = weak_shelling_min_m(pent5);
    REQUIRE(w5.has_value());
    CHECK(w5->first == 4);
    CHECK(is_weak_shelling(pent5, w5->second));
    CHECK(m_of_order(pent5, w5->second).m_value == 4);
    // The unconstrained minimum is strictly smaller.
    CHECK(m_number(pent5).m == 3);

    auto sc8 = load("sc8.cplx");
    auto w8 = weak_shelling_min_m(sc8);
    REQUIRE(w8.has_value());
    CHECK(w8->first == 3);
    CHECK(is_weak_shelling(sc8, w8->second));
    CHECK(m_of_order(sc8, w8->second).m_value == 3);

    auto polar = load("polar.cplx");
    auto wp = weak_shelling_min_m(polar);
    REQUIRE(wp.has_value());
    CHECK(wp->first == 2);
}

TEST_CASE("the known good ordering of the eight-vertex complex") {
    auto sc8 = load("sc8.cplx");
    FacetOrdering ord{{0, 2, 1, 4, 3, 6, 5}};
    auto rep = m_of_order(sc8, ord);
    CHECK(rep.is_weak_shelling);
    CHECK(is_weak_shelling(sc8, ord));
    CHECK(rep.m_value == 3);
    CHECK(rep.n_value == 3);
    CHECK(rep.step_increments ==
          std::vector<bool>{false, false, false, true, false, true});
}

TEST_CASE("weak shelling DP against the permutation oracle") {
    ExploreConfig cfg{7, 5, 1, 3, 616161};
    for (std::uint64_t i = 0; i < 40; ++i) {
        auto x = random_complex(cfg, i);
        auto dp = weak_shelling_min_m(x);
        auto brute = weak_min_bruteforce(x);
        CHECK(dp.has_value() == brute.has_value());
        if (dp && brute) {
            CHECK(dp->first == *brute);
            CHECK(is_weak_shelling(x, dp->second));
            CHECK(m_of_order(x, dp->second).m_value == *brute);
        }
    }
}

TEST_CASE("gamma minimization, DP against the permutation oracle") {
    auto oct4 = load("oct4.cplx");
    CHECK(gamma_min(oct4) == 3);
    auto [g, ord] = gamma_min_order(oct4);
    CHECK(g == 3);
    CHECK(m_of_order(oct4, ord).gamma == 3);

    auto polar = load("polar.cplx");
    CHECK(gamma_min(polar) == 0);
    // Both facet orders gluing along codimension-one meets reach zero.
    CHECK(m_of_order(polar, FacetOrdering{{2, 3, 1, 0}}).gamma == 0);
    CHECK(m_of_order(polar, gamma_min_order(polar).second).gamma == 0);

    CHECK(gamma_min(load("pent5.cplx")) == 0);
    CHECK(gamma_min(load("sc8.cplx")) == 0);

    ExploreConfig cfg{7, 5, 1, 3, 717171};
    for (std::uint64_t i = 0; i < 30; ++i) {
        auto x = random_complex(cfg, i);
        auto [gm, gord] = gamma_min_order(x);
        CHECK(gm == gamma_bruteforce(x));
        CHECK(m_of_order(x, gord).gamma == gm);
    }
}

TEST_CASE("report identities on random complexes and orderings") {
    ExploreConfig cfg{8, 6, 1, 3, 818181};
    for (std::uint64_t i = 0; i < 40; ++i) {
        auto x = random_complex(cfg, i);
        SplitMix64 rng = keyed_rng(7, i);
        for (int t = 0; t < 3; ++t) {
            auto ord = random_ordering(rng, x.facet_count());
            auto rep = m_of_order(x, ord);
            int increments = 0;
            for (bool b : rep.step_increments) increments += b ? 1 : 0;
            CHECK(rep.m_value == 1 + increments);
            int first_size = x.facets()[static_cast<std::size_t>(ord.perm[0])].size();
            CHECK(rep.n_value ==
                  x.facet_count() - x.num_vertices() + first_size + rep.gamma);
            CHECK(rep.gamma >= 0);
            for (int c : rep.conn) CHECK(c >= 0);
            CHECK(rep.m_value <= rep.n_value);
        }
    }
}

TEST_CASE("the sandwich L <= M <= M_ord <= N_ord") {
    ExploreConfig cfg{8, 6, 1, 3, 919191};
    for (std::uint64_t i = 0; i < 30; ++i) {
        auto x = random_complex(cfg, i);
        int l = leray_number(x).leray;
        int m = m_number(x).m;
        CHECK(l <= m);
        SplitMix64 rng = keyed_rng(8, i);
        auto ord = random_ordering(rng, x.facet_count());
        auto rep = m_of_order(x, ord);
        CHECK(m <= rep.m_value);
        CHECK(rep.m_value <= rep.n_value);
    }
}

TEST_CASE("step-by-step Leray growth along an ordering") {
    // Non-increment steps pin the prefix Leray number to max(previous, 1);
    // increment steps can raise it by at most one.
    ExploreConfig cfg{8, 6, 1, 3, 101010};
    for (std::uint64_t i = 0; i < 20; ++i) {
        auto x = random_complex(cfg, i);
        SplitMix64 rng = keyed_rng(9, i);
        auto ord = random_ordering(rng, x.facet_count());
        auto rep = m_of_order(x, ord);
        std::vector<VertexSet> prefix;
        VertexSet support;
        prefix.push_back(x.facets()[static_cast<std::size_t>(ord.perm[0])]);
        support = prefix[0];
        int prev = 0;  // one facet: a simplex
        for (std::size_t t = 1; t < ord.perm.size(); ++t) {
            prefix.push_back(x.facets()[static_cast<std::size_t>(ord.perm[t])]);
            support = support | prefix.back();
            int cur = leray_number(prefix, support).leray;
            if (rep.step_increments[t - 1]) {
                CHECK(cur <= prev + 1);
            } else {
                CHECK(cur == std::max(prev, 1));
            }
            prev = cur;
        }
        CHECK(prev == leray_number(x).leray);
    }
}

TEST_CASE("caps and input validation") {
    auto oct4 = load("oct4.cplx");
    OrderingCaps tight;
    tight.dp_max_facets = 3;
    CHECK_THROWS_AS(m_number(oct4, tight), CapExceeded);
    CHECK_THROWS_AS(gamma_min(oct4, tight), CapExceeded);
    tight = OrderingCaps{};
    tight.brute_max_facets = 3;
    CHECK_THROWS_AS(m_number_bruteforce(oct4, tight), CapExceeded);
    tight = OrderingCaps{};
    tight.weak_dp_max_facets = 3;
    CHECK_THROWS_AS(weak_shelling_min_m(oct4, tight), CapExceeded);

    CHECK_THROWS_AS(m_of_order(oct4, FacetOrdering{{0, 1, 2}}), InputError);
    CHECK_THROWS_AS(m_of_order(oct4, FacetOrdering{{0, 1, 2, 2}}), InputError);
    CHECK_THROWS_AS(m_of_order(oct4, FacetOrdering{{0, 1, 2, 7}}), InputError);
    CHECK_THROWS_AS(m_number(SimplicialComplex{}), InputError);
}
