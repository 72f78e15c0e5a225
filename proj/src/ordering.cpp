#include "leray/ordering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "leray/errors.hpp"

namespace leray {

namespace {

void check_ordering(const SimplicialComplex& x, const FacetOrdering& ord) {
    const int m = x.facet_count();
    if (static_cast<int>(ord.perm.size()) != m)
        throw InputError("ordering length differs from the facet count");
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int i : ord.perm) {
        if (i < 0 || i >= m || seen[static_cast<std::size_t>(i)])
            throw InputError("ordering is not a permutation of the facet indices");
        seen[static_cast<std::size_t>(i)] = true;
    }
}

// Pairwise intersections; meets[i][j] = σ_i ∩ σ_j.
std::vector<std::vector<VertexSet>> meet_table(const std::vector<VertexSet>& f) {
    const std::size_t m = f.size();
    std::vector<std::vector<VertexSet>> meets(m, std::vector<VertexSet>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) meets[i][j] = f[i] & f[j];
    return meets;
}

// Whether ∪_{i ∈ prefix} Δ(σ_i ∩ window) is a simplex: some meet must
// contain the union of all of them. An all-empty family gives {∅}.
template <typename PrefixRange>
bool window_meet_is_simplex(const std::vector<VertexSet>& facets, PrefixRange&& prefix,
                            VertexSet window) {
    VertexSet all;
    for (int i : prefix) all = all | (facets[static_cast<std::size_t>(i)] & window);
    if (all.empty()) return true;
    for (int i : prefix)
        if ((facets[static_cast<std::size_t>(i)] & window) == all) return true;
    return false;
}

// Facet-index subsets as bitmasks, for the DPs (m ≤ 64 there by the caps).
struct MaskRange {
    std::uint64_t mask;
    VertexSet::iterator begin() const { return VertexSet::iterator(mask); }
    VertexSet::iterator end() const { return VertexSet::iterator(0); }
};

bool weak_step_feasible(const std::vector<VertexSet>& facets, std::uint64_t prefix_mask, int j) {
    VertexSet sigma = facets[static_cast<std::size_t>(j)];
    for (int u : sigma)
        if (window_meet_is_simplex(facets, MaskRange{prefix_mask}, sigma.without(u))) return true;
    return false;
}

}  // namespace

bool prefix_meet_is_simplex(std::span<const VertexSet> facets, std::span<const int> prefix,
                            int j) {
    const int m = static_cast<int>(facets.size());
    if (j < 0 || j >= m) throw InputError("facet index out of range");
    if (prefix.empty()) throw InputError("prefix must be non-empty");
    for (int i : prefix) {
        if (i < 0 || i >= m) throw InputError("facet index out of range");
        if (i == j) throw InputError("facet may not be in its own prefix");
    }
    std::vector<VertexSet> fac(facets.begin(), facets.end());
    return window_meet_is_simplex(fac, prefix, facets[static_cast<std::size_t>(j)]);
}

OrderingReport m_of_order(const SimplicialComplex& x, const FacetOrdering& ord) {
    if (x.is_void()) throw InputError("void complex");
    check_ordering(x, ord);
    const std::vector<VertexSet>& f = x.facets();
    const int m = x.facet_count();

    OrderingReport rep;
    rep.conn.reserve(static_cast<std::size_t>(m > 0 ? m - 1 : 0));
    rep.step_increments.reserve(rep.conn.capacity());
    for (int t = 1; t < m; ++t) {
        const int j = ord.perm[static_cast<std::size_t>(t)];
        VertexSet sigma = f[static_cast<std::size_t>(j)];
        VertexSet all;
        int conn = 0;
        bool dominated = false;
        for (int s = 0; s < t; ++s) {
            VertexSet meet = f[static_cast<std::size_t>(ord.perm[static_cast<std::size_t>(s)])] & sigma;
            all = all | meet;
            conn = std::max(conn, meet.size());
        }
        if (all.empty()) {
            dominated = true;
        } else {
            for (int s = 0; s < t && !dominated; ++s)
                dominated =
                    (f[static_cast<std::size_t>(ord.perm[static_cast<std::size_t>(s)])] & sigma) == all;
        }
        rep.step_increments.push_back(!dominated);
        if (!dominated) ++rep.m_value;
        rep.conn.push_back(conn);
        rep.gamma += (sigma.size() - 1) - conn;
        if (rep.is_weak_shelling) {
            bool ok = false;
            auto prefix = [&]() {
                std::vector<int> p;
                for (int s = 0; s < t; ++s) p.push_back(ord.perm[static_cast<std::size_t>(s)]);
                return p;
            }();
            for (int u : sigma) {
                if (window_meet_is_simplex(f, prefix, sigma.without(u))) {
                    ok = true;
                    break;
                }
            }
            rep.is_weak_shelling = ok;
        }
    }
    const int first = ord.perm.empty() ? 0 : f[static_cast<std::size_t>(ord.perm[0])].size();
    rep.n_value = m - x.num_vertices() + first + rep.gamma;
    return rep;
}

bool is_weak_shelling(const SimplicialComplex& x, const FacetOrdering& ord) {
    return m_of_order(x, ord).is_weak_shelling;
}

namespace {

// Shared skeleton for the three subset DPs. step_cost(prefix_mask, j) must
// depend only on the prefix as a set; feasible(prefix_mask, j) gates
// transitions. Returns nullopt when the full set is unreachable.
template <typename Cost, typename Feasible>
std::optional<std::pair<int, FacetOrdering>> subset_dp(int m, Cost step_cost,
                                                       Feasible feasible, int base_cost,
                                                       std::uint64_t* states_explored) {
    const std::uint64_t full = (m == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    constexpr int kUnreachable = std::numeric_limits<int>::max();
    std::vector<int> dp(static_cast<std::size_t>(full) + 1, kUnreachable);
    std::uint64_t transitions = 0;
    for (int j = 0; j < m; ++j) dp[std::uint64_t{1} << j] = base_cost;
    for (std::uint64_t s = 1; s <= full; ++s) {
        if (dp[s] == kUnreachable) continue;
        for (int j = 0; j < m; ++j) {
            std::uint64_t bit = std::uint64_t{1} << j;
            if (s & bit) continue;
            ++transitions;
            if (!feasible(s, j)) continue;
            int cand = dp[s] + step_cost(s, j);
            if (cand < dp[s | bit]) dp[s | bit] = cand;
        }
    }
    if (states_explored) *states_explored = transitions;
    if (dp[full] == kUnreachable) return std::nullopt;

    // Reconstruct one optimal order back-to-front; smallest index on ties.
    FacetOrdering order;
    order.perm.assign(static_cast<std::size_t>(m), 0);
    std::uint64_t s = full;
    for (int pos = m - 1; pos >= 1; --pos) {
        for (int j = 0; j < m; ++j) {
            std::uint64_t bit = std::uint64_t{1} << j;
            if (!(s & bit)) continue;
            std::uint64_t prev = s ^ bit;
            if (dp[prev] == kUnreachable || !feasible(prev, j)) continue;
            if (dp[prev] + step_cost(prev, j) == dp[s]) {
                order.perm[static_cast<std::size_t>(pos)] = j;
                s = prev;
                break;
            }
        }
    }
    order.perm[0] = static_cast<int>(VertexSet::from_bits(s).lowest());
    return std::make_pair(dp[full], order);
}

}  // namespace

MResult m_number(const SimplicialComplex& x, const OrderingCaps& caps) {
    if (x.is_void()) throw InputError("void complex");
    const int m = x.facet_count();
    if (m > caps.dp_max_facets)
        throw CapExceeded("facet count " + std::to_string(m) + " exceeds the DP cap of " +
                          std::to_string(caps.dp_max_facets));
    MResult res;
    if (m == 1) {
        res.optimal_order.perm = {0};
        res.dp_states_explored = 1;
        return res;
    }
    auto meets = meet_table(x.facets());
    auto cost = [&](std::uint64_t prefix, int j) {
        VertexSet all;
        for (int i : MaskRange{prefix}) all = all | meets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (all.empty()) return 0;
        for (int i : MaskRange{prefix})
            if (meets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == all) return 0;
        return 1;
    };
    auto result = subset_dp(
        m, cost, [](std::uint64_t, int) { return true; }, 1, &res.dp_states_explored);
    res.m = result->first;
    res.optimal_order = result->second;
    return res;
}

int m_number_bruteforce(const SimplicialComplex& x, const OrderingCaps& caps) {
    if (x.is_void()) throw InputError("void complex");
    const int m = x.facet_count();
    if (m > caps.brute_max_facets)
        throw CapExceeded("facet count " + std::to_string(m) +
                          " exceeds the permutation-oracle cap of " +
                          std::to_string(caps.brute_max_facets));
    FacetOrdering ord;
    ord.perm.resize(static_cast<std::size_t>(m));
    std::iota(ord.perm.begin(), ord.perm.end(), 0);
    int best = std::numeric_limits<int>::max();
    do {
        best = std::min(best, m_of_order(x, ord).m_value);
    } while (std::next_permutation(ord.perm.begin(), ord.perm.end()));
    return best;
}

std::optional<std::pair<int, FacetOrdering>> weak_shelling_min_m(const SimplicialComplex& x,
                                                                 const OrderingCaps& caps) {
    if (x.is_void()) throw InputError("void complex");
    const int m = x.facet_count();
    if (m > caps.weak_dp_max_facets)
        throw CapExceeded("facet count " + std::to_string(m) +
                          " exceeds the weak-shelling DP cap of " +
                          std::to_string(caps.weak_dp_max_facets));
    if (m == 1) return std::make_pair(1, FacetOrdering{{0}});
    const std::vector<VertexSet>& f = x.facets();
    auto meets = meet_table(f);
    auto cost = [&](std::uint64_t prefix, int j) {
        VertexSet all;
        for (int i : MaskRange{prefix}) all = all | meets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (all.empty()) return 0;
        for (int i : MaskRange{prefix})
            if (meets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == all) return 0;
        return 1;
    };
    auto feasible = [&](std::uint64_t prefix, int j) { return weak_step_feasible(f, prefix, j); };
    return subset_dp(m, cost, feasible, 1, nullptr);
}

std::pair<int, FacetOrdering> gamma_min_order(const SimplicialComplex& x,
                                              const OrderingCaps& caps) {
    if (x.is_void()) throw InputError("void complex");
    const int m = x.facet_count();
    if (m > caps.dp_max_facets)
        throw CapExceeded("facet count " + std::to_string(m) + " exceeds the DP cap of " +
                          std::to_string(caps.dp_max_facets));
    if (m == 1) return {0, FacetOrdering{{0}}};
    const std::vector<VertexSet>& f = x.facets();
    auto meets = meet_table(f);
    auto cost = [&](std::uint64_t prefix, int j) {
        int conn = 0;
        for (int i : MaskRange{prefix})
            conn = std::max(conn, meets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].size());
        return (f[static_cast<std::size_t>(j)].size() - 1) - conn;
    };
    auto result = subset_dp(
        m, cost, [](std::uint64_t, int) { return true; }, 0, nullptr);
    return *result;
}

int gamma_min(const SimplicialComplex& x, const OrderingCaps& caps) {
    return gamma_min_order(x, caps).first;
}

}  // namespace leray
