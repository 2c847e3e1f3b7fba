#include "overlap/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace overlap {

Bigint binomial_exact(unsigned long n, unsigned long k) {
    Bigint out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Bigint milner(int p, int m) {
    if (m < 1) throw std::invalid_argument("milner: m >= 1 required");
    if (p < 0) throw std::invalid_argument("milner: p >= 0 required");
    unsigned long k = static_cast<unsigned long>((m + p + 1) / 2);
    return binomial_exact(static_cast<unsigned long>(m), k);
}

Bigint milner_s1_recurrence(int m) {
    if (m < 1) throw std::invalid_argument("milner_s1_recurrence: m >= 1 required");
    Bigint s = 1;  // S(1,1)
    for (int i = 2; i <= m; ++i) {
        if (i % 2 == 1)
            s = s * (2 * i) / (i - 1);
        else
            s = s * (2 * i) / (i + 2);
    }
    return s;
}

int clique_overlap_number(const Bigint& n) {
    if (n < 1) throw std::invalid_argument("clique_overlap_number: n >= 1 required");
    Bigint s = 1;
    int m = 1;
    while (s < n) {
        ++m;
        if (m % 2 == 1)
            s = s * (2 * m) / (m - 1);
        else
            s = s * (2 * m) / (m + 2);
    }
    return m;
}

int clique_overlap_number(long long n) { return clique_overlap_number(Bigint(static_cast<long>(n))); }

namespace {

// First n k-subsets of {0..m-1} in lexicographic order.
std::vector<ElementSet> lex_subsets(int m, int k, long long n) {
    std::vector<ElementSet> out;
    ElementSet cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (static_cast<long long>(out.size()) < n) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == m - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

SizedRepresentation clique_representation(int n) {
    if (n < 1) throw std::invalid_argument("clique_representation: n >= 1 required");
    int m = clique_overlap_number(static_cast<long long>(n));
    int k = (m + 2) / 2;
    SizedRepresentation out;
    out.representation.sets = lex_subsets(m, k, n);
    out.claimed_size = m;
    out.class_tag.tag = n == 1 ? ClassTag::SingleVertex : ClassTag::Clique;
    return out;
}

SizedRepresentation kpartite_representation(const std::vector<int>& part_sizes) {
    if (part_sizes.empty())
        throw std::invalid_argument("kpartite_representation: no parts");
    for (int s : part_sizes)
        if (s < 1) throw std::invalid_argument("kpartite_representation: empty part");
    int k = static_cast<int>(part_sizes.size());
    SizedRepresentation base = clique_representation(k);
    SizedRepresentation out;
    out.claimed_size = base.claimed_size;
    out.class_tag.tag = ClassTag::CompleteMultipartite;
    int v = 0;
    for (int i = 0; i < k; ++i) {
        std::vector<int> part;
        for (int j = 0; j < part_sizes[i]; ++j) {
            out.representation.sets.push_back(base.representation.sets[i]);
            part.push_back(v++);
        }
        out.class_tag.parts.push_back(std::move(part));
    }
    return out;
}

SizedRepresentation path_representation(int n) {
    if (n < 3)
        throw std::invalid_argument("path_representation: n >= 3 required (phi(P_2) = 3 via clique_representation)");
    SizedRepresentation out;
    for (int i = 0; i + 1 < n; ++i) out.representation.sets.push_back({i, i + 1});
    ElementSet last(n - 1);
    std::iota(last.begin(), last.end(), 0);
    out.representation.sets.push_back(std::move(last));
    out.claimed_size = n;
    out.class_tag.tag = ClassTag::Path;
    out.class_tag.order.resize(n);
    std::iota(out.class_tag.order.begin(), out.class_tag.order.end(), 0);
    return out;
}

SizedRepresentation cycle_representation(int n) {
    if (n < 4)
        throw std::invalid_argument("cycle_representation: n >= 4 required (C_3 is K_3)");
    SizedRepresentation out;
    for (int i = 0; i + 2 < n; ++i) out.representation.sets.push_back({i, i + 1});
    ElementSet a(n - 2), b(n - 2);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 1);
    out.representation.sets.push_back(std::move(a));
    out.representation.sets.push_back(std::move(b));
    out.claimed_size = n - 1;
    out.class_tag.tag = ClassTag::Cycle;
    out.class_tag.order.resize(n);
    std::iota(out.class_tag.order.begin(), out.class_tag.order.end(), 0);
    return out;
}

SizedRepresentation caterpillar_representation(const Graph& g,
                                               const std::vector<int>& spine,
                                               const std::vector<std::vector<int>>& leaves) {
    int k = static_cast<int>(spine.size());
    if (k < 1) throw std::invalid_argument("caterpillar: empty spine");
    if (leaves.size() != spine.size())
        throw std::invalid_argument("caterpillar: one leaf list per spine vertex required");
    std::vector<int> role(g.n, -1);  // spine position or n + spine position for leaves
    for (int i = 0; i < k; ++i) {
        int v = spine[i];
        if (v < 0 || v >= g.n || role[v] != -1)
            throw std::invalid_argument("caterpillar: bad spine vertex");
        role[v] = i;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(spine[i], spine[j]) != (j == i + 1))
                throw std::invalid_argument("caterpillar: spine not an induced path");
    int covered = k;
    for (int i = 0; i < k; ++i)
        for (int l : leaves[i]) {
            if (l < 0 || l >= g.n || role[l] != -1)
                throw std::invalid_argument("caterpillar: bad leaf vertex");
            if (g.degree(l) != 1 || !g.adjacent(l, spine[i]))
                throw std::invalid_argument("caterpillar: leaf with degree > 1 or detached leaf");
            role[l] = g.n + i;
            ++covered;
        }
    if (covered != g.n)
        throw std::invalid_argument("caterpillar: spine and leaves must cover the graph");
    if (leaves.front().empty() || leaves.back().empty())
        throw std::invalid_argument("caterpillar: spine ends must carry a leaf (spine = non-leaf vertices)");
    if (g.edge_count() != g.n - 1)
        throw std::invalid_argument("caterpillar: not a tree");

    SizedRepresentation out;
    out.representation.sets.resize(g.n);
    for (int i = 0; i < k; ++i) {
        out.representation.sets[spine[i]] = {i + 1, i + 2};
        ElementSet leaf_set(i + 2);
        std::iota(leaf_set.begin(), leaf_set.end(), 0);
        for (int l : leaves[i]) out.representation.sets[l] = leaf_set;
    }
    out.claimed_size = k + 2;
    out.class_tag.tag = ClassTag::Caterpillar;
    out.class_tag.spine = spine;
    out.class_tag.leaves = leaves;
    return out;
}

SizedRepresentation compose_components(const std::vector<SizedRepresentation>& reps) {
    if (reps.empty()) throw std::invalid_argument("compose_components: empty list");
    if (reps.size() == 1) return reps[0];

    SizedRepresentation out;
    out.class_tag.tag = ClassTag::Disconnected;
    Representation acc;
    int vertex_base = 0;
    for (size_t i = 0; i < reps.size(); ++i) {
        const Representation& part = reps[i].representation;
        if (part.sets.empty())
            throw std::invalid_argument("compose_components: component without vertices");
        std::vector<int> block(part.sets.size());
        std::iota(block.begin(), block.end(), vertex_base);
        vertex_base += static_cast<int>(part.sets.size());
        out.class_tag.comps.push_back(std::move(block));

        // Shift this component's elements past everything used so far.
        ElementSet used = acc.universe();
        int offset = used.empty() ? 0 : used.back() + 1;
        Representation shifted;
        for (const auto& s : part.sets) {
            ElementSet t;
            t.reserve(s.size());
            for (int e : s) t.push_back(e + offset);
            shifted.sets.push_back(std::move(t));
        }
        if (i == 0) {
            acc = std::move(shifted);
            continue;
        }
        // The whole accumulated universe stands in for one element of the
        // incoming component: the smallest element of its first vertex.
        int replaced = shifted.sets.front().front();
        for (auto& s : shifted.sets) {
            if (!std::binary_search(s.begin(), s.end(), replaced)) {
                acc.sets.push_back(std::move(s));
                continue;
            }
            ElementSet t = used;
            for (int e : s)
                if (e != replaced) t.push_back(e);
            std::sort(t.begin(), t.end());
            acc.sets.push_back(std::move(t));
        }
    }
    out.representation = std::move(acc);
    out.claimed_size = 0;
    for (const auto& r : reps) out.claimed_size += r.claimed_size;
    out.claimed_size -= static_cast<int>(reps.size()) - 1;
    return out;
}

SizedRepresentation ecc_overlap_representation(const Graph& g) {
    std::vector<std::vector<int>> cliques;
    std::vector<std::vector<char>> covered(g.n, std::vector<char>(g.n, 0));
    for (auto& [u, v] : g.edges) {
        if (covered[u][v]) continue;
        std::vector<int> clique{u, v};
        for (int w = 0; w < g.n; ++w) {
            if (w == u || w == v) continue;
            bool all = true;
            for (int c : clique)
                if (!g.adjacent(w, c)) {
                    all = false;
                    break;
                }
            if (all) clique.push_back(w);
        }
        std::sort(clique.begin(), clique.end());
        for (size_t a = 0; a < clique.size(); ++a)
            for (size_t b = a + 1; b < clique.size(); ++b)
                covered[clique[a]][clique[b]] = 1;
        cliques.push_back(std::move(clique));
    }
    int c = static_cast<int>(cliques.size());
    SizedRepresentation out;
    out.representation.sets.resize(g.n);
    for (int i = 0; i < c; ++i)
        for (int v : cliques[i]) out.representation.sets[v].push_back(i);
    for (int v = 0; v < g.n; ++v) out.representation.sets[v].push_back(c + v);
    out.claimed_size = c + g.n;
    out.class_tag = classify(g);
    return out;
}

double binomial_lower_bound(int n, int k) {
    if (k < 1 || k >= n)
        throw std::invalid_argument("binomial_lower_bound: 1 <= k < n required");
    double dn = n, dk = k;
    return std::sqrt(1.0 / (8.0 * std::numbers::pi * dk)) *
           std::pow(dn / dk, dk) * std::pow(dn / (dn - dk), dn - dk);
}

}  // namespace overlap
