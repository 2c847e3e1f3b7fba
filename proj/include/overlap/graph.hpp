#pragma once

#include <string>
#include <utility>
#include <vector>

namespace overlap {

// Simple undirected graph on vertex ids 0..n-1. Edges are stored
// normalized: u < v, sorted lexicographically, no duplicates.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    // Validates and normalizes an edge list. Throws std::invalid_argument
    // on self-loops, out-of-range endpoints or duplicate edges.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<std::vector<int>> adjacency_lists() const;
    int edge_count() const { return static_cast<int>(edges.size()); }

    bool operator==(const Graph&) const = default;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);           // n >= 3
Graph star_graph(int leaves);       // K_{1,t}, center 0, t >= 1
Graph complete_multipartite(const std::vector<int>& part_sizes);
// Spine vertices 0..k-1 in path order, then the leaves of spine vertex i
// (leaf_counts[i] of them) in spine order.
Graph caterpillar_graph(const std::vector<int>& leaf_counts);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;    // new id -> old id, increasing
};

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vs);

Graph disjoint_union(const std::vector<Graph>& parts);

// Replaces v by t nonadjacent twins, each adjacent to exactly N(v).
// One twin keeps id v, the other t-1 get ids n, n+1, ...
Graph vertex_multiply(const Graph& g, int v, int t);

// Attaches one new pendant vertex n+i to each vertex i.
Graph add_pendants(const Graph& g);

enum class ClassTag {
    SingleVertex,
    Clique,
    CompleteMultipartite,
    Cycle,
    Path,
    Caterpillar,
    Disconnected,
    Other,
};

std::string to_string(ClassTag tag);

struct GraphClass {
    ClassTag tag = ClassTag::Other;
    // CompleteMultipartite: parts as sorted vertex lists, ordered by
    // smallest member. part_sizes() gives the sizes in the same order.
    std::vector<std::vector<int>> parts;
    // Path / Cycle: vertices in traversal order. Paths start at the
    // smaller-id endpoint; cycles start at vertex 0 towards its smaller
    // neighbor.
    std::vector<int> order;
    // Caterpillar: spine in path order (starting at the smaller-id end)
    // and the sorted leaf list of each spine vertex.
    std::vector<int> spine;
    std::vector<std::vector<int>> leaves;
    // Disconnected: same shape as components(g).
    std::vector<std::vector<int>> comps;

    std::vector<int> part_sizes() const;
};

// Classifies g for closed-form dispatch. Precedence: SingleVertex, Clique,
// CompleteMultipartite, Cycle, Path, Caterpillar, Disconnected, Other.
GraphClass classify(const Graph& g);

}  // namespace overlap
