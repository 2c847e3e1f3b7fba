#include "overlap/exact_search.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "overlap/closed_forms.hpp"

namespace overlap {

namespace {

struct BudgetHit {};

enum class PairNeed : uint8_t { Overlap, NotOverlap, Disjoint };

struct SetSearch {
    int n = 0;
    int m = 0;
    long long node_limit = 0;
    long long nodes = 0;
    std::vector<int> order;                    // depth -> vertex
    std::vector<std::vector<PairNeed>> need;   // [depth][earlier depth]
    std::vector<uint32_t> assigned;
    std::vector<uint32_t> banned_old;          // cf: elements of assigned non-neighbors
    bool containment_free = false;
    std::vector<uint32_t> result;

    bool overlap_ok(uint32_t a, uint32_t b) const {
        return (a & b) && (a & ~b) && (b & ~a);
    }

    bool admissible(int depth, uint32_t s) const {
        for (int e = 0; e < depth; ++e) {
            uint32_t t = assigned[e];
            switch (need[depth][e]) {
                case PairNeed::Overlap:
                    if (!overlap_ok(s, t)) return false;
                    break;
                case PairNeed::NotOverlap:
                    if (overlap_ok(s, t)) return false;
                    break;
                case PairNeed::Disjoint:
                    if (s & t) return false;
                    break;
            }
        }
        return true;
    }

    bool dfs(int depth, int used) {
        if (++nodes > node_limit) throw BudgetHit{};
        if (depth == n) {
            if (used != m) return false;
            result = assigned;
            return true;
        }
        uint32_t used_mask = (used == 32) ? ~0u : ((1u << used) - 1);
        uint32_t allowed = used_mask;
        if (containment_free) {
            uint32_t ban = 0;
            for (int e = 0; e < depth; ++e)
                if (need[depth][e] == PairNeed::Disjoint) ban |= assigned[e];
            allowed &= ~ban;
        }
        int max_new = m - used;
        for (int t = 0; t <= max_new; ++t) {
            uint32_t block = t == 0 ? 0 : (((1u << t) - 1) << used);
            uint32_t sub = allowed;
            while (true) {
                uint32_t s = sub | block;
                if (s && admissible(depth, s)) {
                    assigned[depth] = s;
                    if (dfs(depth + 1, used + t)) return true;
                }
                if (sub == 0) break;
                sub = (sub - 1) & allowed;
            }
        }
        return false;
    }
};

Representation masks_to_representation(const std::vector<int>& order,
                                       const std::vector<uint32_t>& masks, int m) {
    Representation r;
    r.sets.resize(order.size());
    for (size_t d = 0; d < order.size(); ++d) {
        ElementSet s;
        for (int e = 0; e < m; ++e)
            if (masks[d] >> e & 1) s.push_back(e);
        r.sets[order[d]] = std::move(s);
    }
    return r;
}

SearchOutcome subset_search(const Graph& g, const SearchBudget& budget,
                            bool containment_free) {
    if (budget.max_universe < 1)
        throw std::invalid_argument("search: max_universe >= 1 required");
    if (budget.max_universe > 30)
        throw std::invalid_argument("search: universes beyond 30 elements unsupported");
    SearchOutcome out;
    if (g.n == 0) {
        out.value = 0;
        out.witness = Representation{};
        out.status = SearchStatus::Exact;
        return out;
    }

    SetSearch s;
    s.n = g.n;
    s.node_limit = budget.node_limit;
    s.containment_free = containment_free;
    s.order.resize(g.n);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    s.need.assign(g.n, {});
    for (int d = 0; d < g.n; ++d) {
        s.need[d].resize(d);
        for (int e = 0; e < d; ++e) {
            if (g.adjacent(s.order[d], s.order[e]))
                s.need[d][e] = PairNeed::Overlap;
            else
                s.need[d][e] = containment_free ? PairNeed::Disjoint : PairNeed::NotOverlap;
        }
    }
    s.assigned.assign(g.n, 0);

    int m_start = g.edge_count() > 0 ? 3 : 1;
    try {
        for (int m = m_start; m <= budget.max_universe; ++m) {
            s.m = m;
            if (s.dfs(0, 0)) {
                out.value = m;
                out.witness = canonicalize(masks_to_representation(s.order, s.result, m));
                out.status = SearchStatus::Exact;
                out.nodes = s.nodes;
                return out;
            }
        }
    } catch (const BudgetHit&) {
        out.status = SearchStatus::ExceededBudget;
        out.nodes = s.nodes;
        return out;
    }
    out.status = SearchStatus::ExceededBudget;  // max_universe exhausted
    out.nodes = s.nodes;
    return out;
}

}  // namespace

SearchOutcome overlap_number_exact(const Graph& g, const SearchBudget& budget) {
    return subset_search(g, budget, false);
}

SearchOutcome cf_overlap_number_exact(const Graph& g, const SearchBudget& budget) {
    return subset_search(g, budget, true);
}

namespace {

struct CliqueCoverSearch {
    int n = 0;
    long long node_limit = 0;
    long long nodes = 0;
    std::vector<uint64_t> adj;                 // closed-off diagonal adjacency masks
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> best;
    std::vector<std::vector<int>> current;

    // All maximal cliques of the subgraph induced by cand, each unioned
    // with the fixed pair; classic pivotless Bron-Kerbosch is fine at this
    // scale but the pivot cuts the fanout.
    void maximal_cliques(uint64_t r, uint64_t p, uint64_t x,
                         std::vector<uint64_t>& out) {
        if (p == 0 && x == 0) {
            out.push_back(r);
            return;
        }
        uint64_t px = p | x;
        int pivot = __builtin_ctzll(px);
        uint64_t best_mask = p & ~adj[pivot];
        uint64_t rest = px & ~(uint64_t(1) << pivot);
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            uint64_t cand = p & ~adj[v];
            if (__builtin_popcountll(cand) < __builtin_popcountll(best_mask)) {
                pivot = v;
                best_mask = cand;
            }
        }
        uint64_t branch = best_mask;
        while (branch) {
            int v = __builtin_ctzll(branch);
            branch &= branch - 1;
            uint64_t bit = uint64_t(1) << v;
            maximal_cliques(r | bit, p & adj[v], x & adj[v], out);
            p &= ~bit;
            x |= bit;
        }
    }

    void dfs(std::vector<char>& cov, int covered_count) {
        if (++nodes > node_limit) throw BudgetHit{};
        if (covered_count == static_cast<int>(edges.size())) {
            if (best.empty() || current.size() < best.size()) best = current;
            return;
        }
        // Finishing needs at least one more clique.
        if (!best.empty() && current.size() + 1 >= best.size()) return;
        int pick = -1;
        for (size_t i = 0; i < edges.size(); ++i)
            if (!cov[i]) {
                pick = static_cast<int>(i);
                break;
            }
        auto [u, v] = edges[pick];
        std::vector<uint64_t> cliques;
        uint64_t common = adj[u] & adj[v];
        maximal_cliques((uint64_t(1) << u) | (uint64_t(1) << v), common, 0, cliques);
        for (uint64_t cmask : cliques) {
            std::vector<int> clique;
            for (int w = 0; w < n; ++w)
                if (cmask >> w & 1) clique.push_back(w);
            std::vector<int> newly;
            for (size_t i = 0; i < edges.size(); ++i)
                if (!cov[i] && (cmask >> edges[i].first & 1) &&
                    (cmask >> edges[i].second & 1))
                    newly.push_back(static_cast<int>(i));
            for (int i : newly) cov[i] = 1;
            current.push_back(clique);
            dfs(cov, covered_count + static_cast<int>(newly.size()));
            current.pop_back();
            for (int i : newly) cov[i] = 0;
        }
    }
};

}  // namespace

SearchOutcome intersection_number_exact(const Graph& g, const SearchBudget& budget) {
    if (g.n > 63)
        throw std::invalid_argument("intersection_number_exact: n <= 63 required");
    SearchOutcome out;
    if (g.edge_count() == 0) {
        Representation r;
        r.sets.assign(g.n, {});
        out.value = 0;
        out.witness = r;
        out.status = SearchStatus::Exact;
        return out;
    }
    CliqueCoverSearch s;
    s.n = g.n;
    s.node_limit = budget.node_limit;
    s.edges = g.edges;
    s.adj.assign(g.n, 0);
    for (auto& [u, v] : g.edges) {
        s.adj[u] |= uint64_t(1) << v;
        s.adj[v] |= uint64_t(1) << u;
    }
    std::vector<char> cov(g.edges.size(), 0);
    try {
        s.dfs(cov, 0);
    } catch (const BudgetHit&) {
        out.status = SearchStatus::ExceededBudget;
        out.nodes = s.nodes;
        return out;
    }
    Representation r;
    r.sets.assign(g.n, {});
    for (size_t i = 0; i < s.best.size(); ++i)
        for (int v : s.best[i]) r.sets[v].push_back(static_cast<int>(i));
    out.value = static_cast<int>(s.best.size());
    out.witness = canonicalize(r);
    out.status = SearchStatus::Exact;
    out.nodes = s.nodes;
    return out;
}

namespace {

std::vector<int> checked_targets(const Graph& g, std::vector<int> targets) {
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (int v : targets)
        if (v < 0 || v >= g.n)
            throw std::invalid_argument("extension: target vertex out of range");
    return targets;
}

template <typename Match>
std::optional<ElementSet> first_matching_subset(const Representation& r,
                                                const std::vector<int>& targets,
                                                bool allow_empty, Match match) {
    ElementSet universe = r.universe();
    int u = static_cast<int>(universe.size());
    int n = r.vertex_count();
    std::vector<char> wanted(n, 0);
    for (int v : targets) wanted[v] = 1;

    auto try_set = [&](const ElementSet& s) {
        for (int v = 0; v < n; ++v)
            if (match(s, r.sets[v]) != static_cast<bool>(wanted[v])) return false;
        return true;
    };

    if (allow_empty) {
        ElementSet empty;
        bool ok = true;
        for (int v = 0; v < n; ++v)
            if (wanted[v]) {  // empty set never overlaps or compares
                ok = false;
                break;
            }
        if (ok) return empty;
    }
    std::vector<int> idx;
    for (int k = 1; k <= u; ++k) {
        idx.assign(k, 0);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            ElementSet s;
            s.reserve(k);
            for (int i : idx) s.push_back(universe[i]);
            if (try_set(s)) return s;
            int i = k - 1;
            while (i >= 0 && idx[i] == u - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ElementSet> overlap_extension_solve(const Graph& g, const Representation& r,
                                                  std::vector<int> targets) {
    if (!verify(g, r).valid)
        throw std::invalid_argument("overlap_extension_solve: invalid representation");
    auto ts = checked_targets(g, std::move(targets));
    return first_matching_subset(r, ts, true, [](const ElementSet& s, const ElementSet& t) {
        return !s.empty() && classify_pair(s, t) == PairRelation::Overlap;
    });
}

std::optional<ElementSet> containment_extension_solve(const Graph& g,
                                                      const Representation& r,
                                                      std::vector<int> targets) {
    if (!verify_containment(g, r).valid)
        throw std::invalid_argument(
            "containment_extension_solve: not a containment representation");
    auto ts = checked_targets(g, std::move(targets));
    return first_matching_subset(r, ts, false, [](const ElementSet& s, const ElementSet& t) {
        if (s.empty()) return false;
        PairRelation rel = classify_pair(s, t);
        return rel == PairRelation::LeftInRight || rel == PairRelation::RightInLeft ||
               rel == PairRelation::Equal;
    });
}

}  // namespace overlap
