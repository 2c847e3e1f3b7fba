#pragma once

#include <string>
#include <vector>

#include "overlap/graph.hpp"

namespace overlap {

// Element set: strictly increasing list of nonnegative element ids.
using ElementSet = std::vector<int>;

ElementSet make_set(std::vector<int> elems);  // sorts, dedups
bool is_subset(const ElementSet& a, const ElementSet& b);
ElementSet set_union(const ElementSet& a, const ElementSet& b);
ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
bool sets_intersect(const ElementSet& a, const ElementSet& b);

enum class PairRelation { Overlap, LeftInRight, RightInLeft, Equal, Disjoint };

std::string to_string(PairRelation r);

// Relation of two nonempty sets. Overlap means: common element plus a
// private element on each side. Throws std::invalid_argument on empty input.
PairRelation classify_pair(const ElementSet& a, const ElementSet& b);

struct Representation {
    std::vector<ElementSet> sets;  // sets[v] belongs to vertex v

    int vertex_count() const { return static_cast<int>(sets.size()); }
    ElementSet universe() const;
};

// Number of distinct elements used.
int size(const Representation& r);

struct Violation {
    int u, v;               // u < v
    bool expected_edge;     // true: edge lacked overlap; false: nonedge overlapped
    PairRelation observed;
};

struct VerifyReport {
    bool valid = false;
    std::vector<Violation> violations;  // ordered by (u, v)
};

// Checks r against g: adjacency iff overlap. Requires one nonempty set per
// vertex (std::invalid_argument otherwise).
VerifyReport verify(const Graph& g, const Representation& r);

// Containment representation check: adjacency iff one set properly
// contains the other. Same input requirements as verify.
VerifyReport verify_containment(const Graph& g, const Representation& r);

// Nonadjacent unordered pairs whose sets are in containment (Equal
// included). Throws std::invalid_argument if verify(g, r) fails.
int containment_count(const Graph& g, const Representation& r);

// The graph a representation induces: edge iff the two sets overlap.
Graph graph_from_representation(const Representation& r);

// Sub-representation on vs (sorted, deduplicated); vertex ids relabeled
// 0..|vs|-1 in order. Throws on empty vs or unknown ids.
Representation restrict_to(const Representation& r, std::vector<int> vs);

// Renames elements to 0..size-1 by first appearance, scanning vertices in
// id order and each set in ascending element order.
Representation canonicalize(const Representation& r);

struct ContainmentWitness {
    int v, u;      // S_u is a subset of S_v, u outside N[v]
    int element;   // element of the component of u in g - N[v] missing from S_v
};

// Checks the consequence of containment between nonadjacent vertices: when
// S_u is a subset of S_v and u lies outside N[v], every set in u's component
// of g - N[v] must sit inside S_v. Returns the violating triples; always
// empty when verify(g, r) is valid.
std::vector<ContainmentWitness> check_containment_component(const Graph& g,
                                                            const Representation& r);

}  // namespace overlap
