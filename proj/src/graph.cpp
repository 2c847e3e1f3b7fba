#include "overlap/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace overlap {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: duplicate edge");
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

bool Graph::adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

int Graph::degree(int v) const {
    int d = 0;
    for (auto& [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n);
    for (auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    return adj;
}

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph::from_edges(n, std::move(e));
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n >= 1 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph::from_edges(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({0, n - 1});
    return Graph::from_edges(n, std::move(e));
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star_graph: need >= 1 leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph::from_edges(leaves + 1, std::move(e));
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
    if (part_sizes.empty())
        throw std::invalid_argument("complete_multipartite: no parts");
    for (int s : part_sizes)
        if (s < 1) throw std::invalid_argument("complete_multipartite: empty part");
    int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
    std::vector<int> part_of(n);
    int v = 0;
    for (size_t p = 0; p < part_sizes.size(); ++p)
        for (int i = 0; i < part_sizes[p]; ++i) part_of[v++] = static_cast<int>(p);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part_of[u] != part_of[w]) e.push_back({u, w});
    return Graph::from_edges(n, std::move(e));
}

Graph caterpillar_graph(const std::vector<int>& leaf_counts) {
    int k = static_cast<int>(leaf_counts.size());
    if (k < 1) throw std::invalid_argument("caterpillar_graph: empty spine");
    for (int c : leaf_counts)
        if (c < 0) throw std::invalid_argument("caterpillar_graph: negative leaf count");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.push_back({i, i + 1});
    int next = k;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < leaf_counts[i]; ++j) e.push_back({i, next++});
    return Graph::from_edges(next, std::move(e));
}

std::vector<std::vector<int>> components(const Graph& g) {
    auto adj = g.adjacency_lists();
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> stack{s}, members;
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : adj[v])
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vs) {
    if (vs.empty()) throw std::invalid_argument("induced_subgraph: empty vertex selection");
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs)
        if (v < 0 || v >= g.n)
            throw std::invalid_argument("induced_subgraph: unknown vertex id");
    std::vector<int> new_id(g.n, -1);
    for (size_t i = 0; i < vs.size(); ++i) new_id[vs[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> e;
    for (auto& [a, b] : g.edges)
        if (new_id[a] != -1 && new_id[b] != -1) e.push_back({new_id[a], new_id[b]});
    InducedSubgraph out;
    out.graph = Graph::from_edges(static_cast<int>(vs.size()), std::move(e));
    out.vertex_map = std::move(vs);
    return out;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty()) throw std::invalid_argument("disjoint_union: no parts");
    int n = 0;
    std::vector<std::pair<int, int>> e;
    for (const Graph& g : parts) {
        for (auto& [a, b] : g.edges) e.push_back({a + n, b + n});
        n += g.n;
    }
    return Graph::from_edges(n, std::move(e));
}

Graph vertex_multiply(const Graph& g, int v, int t) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex_multiply: bad vertex");
    if (t < 1) throw std::invalid_argument("vertex_multiply: multiplicity >= 1 required");
    std::vector<int> copies{v};
    for (int i = 1; i < t; ++i) copies.push_back(g.n + i - 1);
    auto nb = g.neighbors(v);
    std::vector<std::pair<int, int>> e;
    for (auto& [a, b] : g.edges)
        if (a != v && b != v) e.push_back({a, b});
    for (int c : copies)
        for (int w : nb) e.push_back({c, w});
    return Graph::from_edges(g.n + t - 1, std::move(e));
}

Graph add_pendants(const Graph& g) {
    auto e = g.edges;
    for (int i = 0; i < g.n; ++i) e.push_back({i, g.n + i});
    return Graph::from_edges(2 * g.n, std::move(e));
}

std::string to_string(ClassTag tag) {
    switch (tag) {
        case ClassTag::SingleVertex: return "SingleVertex";
        case ClassTag::Clique: return "Clique";
        case ClassTag::CompleteMultipartite: return "CompleteMultipartite";
        case ClassTag::Cycle: return "Cycle";
        case ClassTag::Path: return "Path";
        case ClassTag::Caterpillar: return "Caterpillar";
        case ClassTag::Disconnected: return "Disconnected";
        case ClassTag::Other: return "Other";
    }
    return "Other";
}

std::vector<int> GraphClass::part_sizes() const {
    std::vector<int> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.push_back(static_cast<int>(p.size()));
    return out;
}

namespace {

// Parts of a complete multipartite graph are the components of the
// complement; check membership is consistent with all edges.
bool try_multipartite(const Graph& g, std::vector<std::vector<int>>& parts) {
    std::vector<int> part_of(g.n, -1);
    parts.clear();
    for (int s = 0; s < g.n; ++s) {
        if (part_of[s] != -1) continue;
        std::vector<int> members;
        for (int v = 0; v < g.n; ++v)
            if (v == s || !g.adjacent(s, v)) {
                if (part_of[v] != -1) return false;
                part_of[v] = static_cast<int>(parts.size());
                members.push_back(v);
            }
        parts.push_back(std::move(members));
    }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if ((part_of[u] != part_of[v]) != g.adjacent(u, v)) return false;
    return true;
}

// Orders the vertices of a graph known to be a path or cycle.
std::vector<int> walk_order(const Graph& g, int start) {
    auto adj = g.adjacency_lists();
    std::vector<char> seen(g.n, 0);
    std::vector<int> order{start};
    seen[start] = 1;
    int cur = start;
    while (static_cast<int>(order.size()) < g.n) {
        int next = -1;
        for (int w : adj[cur])
            if (!seen[w]) {
                next = w;
                break;
            }
        if (next == -1) break;
        seen[next] = 1;
        order.push_back(next);
        cur = next;
    }
    return order;
}

bool try_path(const Graph& g, std::vector<int>& order) {
    if (g.n < 2 || g.edge_count() != g.n - 1) return false;
    std::vector<int> ends;
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (d == 0 || d > 2) return false;
        if (d == 1) ends.push_back(v);
    }
    if (ends.size() != 2) return false;
    order = walk_order(g, ends[0]);
    return static_cast<int>(order.size()) == g.n;
}

bool try_cycle(const Graph& g, std::vector<int>& order) {
    if (g.n < 3 || g.edge_count() != g.n) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    order = walk_order(g, 0);
    if (static_cast<int>(order.size()) != g.n) return false;
    // Walk towards the smaller neighbor of 0 first.
    if (order.size() > 2 && order[1] > order.back())
        std::reverse(order.begin() + 1, order.end());
    return true;
}

bool try_caterpillar(const Graph& g, std::vector<int>& spine,
                     std::vector<std::vector<int>>& leaves) {
    if (g.edge_count() != g.n - 1 || components(g).size() != 1) return false;
    std::vector<int> spine_set;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 2) spine_set.push_back(v);
    if (spine_set.empty()) return false;
    auto sub = induced_subgraph(g, spine_set);
    if (sub.graph.n == 1) {
        spine = spine_set;
    } else {
        std::vector<int> sub_order;
        if (!try_path(sub.graph, sub_order)) return false;
        spine.clear();
        for (int v : sub_order) spine.push_back(sub.vertex_map[v]);
    }
    std::vector<int> spine_pos(g.n, -1);
    for (size_t i = 0; i < spine.size(); ++i) spine_pos[spine[i]] = static_cast<int>(i);
    leaves.assign(spine.size(), {});
    for (int v = 0; v < g.n; ++v) {
        if (spine_pos[v] != -1) continue;
        auto nb = g.neighbors(v);
        if (nb.size() != 1 || spine_pos[nb[0]] == -1) return false;
        leaves[spine_pos[nb[0]]].push_back(v);
    }
    return true;
}

}  // namespace

GraphClass classify(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("classify: empty graph");
    GraphClass c;
    if (g.n == 1) {
        c.tag = ClassTag::SingleVertex;
        return c;
    }
    if (g.edge_count() == g.n * (g.n - 1) / 2) {
        c.tag = ClassTag::Clique;
        return c;
    }
    if (try_multipartite(g, c.parts)) {
        c.tag = ClassTag::CompleteMultipartite;
        return c;
    }
    c.parts.clear();
    if (try_cycle(g, c.order)) {
        c.tag = ClassTag::Cycle;
        return c;
    }
    if (try_path(g, c.order)) {
        c.tag = ClassTag::Path;
        return c;
    }
    c.order.clear();
    if (try_caterpillar(g, c.spine, c.leaves)) {
        c.tag = ClassTag::Caterpillar;
        return c;
    }
    c.spine.clear();
    c.leaves.clear();
    auto comps = components(g);
    if (comps.size() > 1) {
        c.tag = ClassTag::Disconnected;
        c.comps = std::move(comps);
        return c;
    }
    c.tag = ClassTag::Other;
    return c;
}

}  // namespace overlap
