#pragma once

#include <gmpxx.h>

#include <vector>

#include "overlap/graph.hpp"
#include "overlap/representation.hpp"

namespace overlap {

using Bigint = mpz_class;

// Exact binomial coefficient.
Bigint binomial_exact(unsigned long n, unsigned long k);

// Largest family of subsets of an m-element universe that is an antichain
// with pairwise intersections of size >= p: binomial(m, floor((m+p+1)/2)).
Bigint milner(int p, int m);

// S(1,m) via the doubling recurrence; equals milner(1, m).
Bigint milner_s1_recurrence(int m);

// min{ m >= 1 : n <= S(1,m) }.
int clique_overlap_number(long long n);
int clique_overlap_number(const Bigint& n);

struct SizedRepresentation {
    Representation representation;
    int claimed_size = 0;
    GraphClass class_tag;
};

// First n subsets of {0..m-1} of cardinality floor((m+2)/2) in
// lexicographic order, m = clique_overlap_number(n).
SizedRepresentation clique_representation(int n);

// clique_representation(k) with the i-th set copied to every vertex of
// part i; parts in caller order, vertices within a part consecutive.
SizedRepresentation kpartite_representation(const std::vector<int>& part_sizes);

// Size-n representation of P_n, n >= 3 (phi(P_2) = 3 via clique machinery).
SizedRepresentation path_representation(int n);

// Size n-1 representation of C_n, n >= 4 (C_3 is K_3).
SizedRepresentation cycle_representation(int n);

// Size k+2 representation of a caterpillar given against its host graph;
// spine in path order, leaves[i] lists the leaves of spine[i].
SizedRepresentation caterpillar_representation(const Graph& g,
                                               const std::vector<int>& spine,
                                               const std::vector<std::vector<int>>& leaves);

// Merges per-component representations into one for the disjoint union
// (components in order, vertex blocks consecutive). Universes are made
// disjoint internally; size comes out to sum of sizes - (k-1).
SizedRepresentation compose_components(const std::vector<SizedRepresentation>& reps);

// Intersection representation from a greedy edge-clique cover plus one
// fresh private element per vertex. Valid for every graph; size is
// #cliques + n <= floor(n^2/4) + n.
SizedRepresentation ecc_overlap_representation(const Graph& g);

// sqrt(1/(8 pi k)) * (n/k)^k * (n/(n-k))^(n-k), a lower bound for
// binomial(n, k); requires 1 <= k < n.
double binomial_lower_bound(int n, int k);

}  // namespace overlap
