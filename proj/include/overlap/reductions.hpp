#pragma once

#include <array>
#include <optional>
#include <vector>

#include "overlap/closed_forms.hpp"
#include "overlap/exact_search.hpp"
#include "overlap/graph.hpp"
#include "overlap/representation.hpp"

namespace overlap {

// Literals are encoded as elements: variable i gives 2i (positive) and
// 2i+1 (negated).
constexpr int pos_lit(int var) { return 2 * var; }
constexpr int neg_lit(int var) { return 2 * var + 1; }
constexpr int lit_var(int lit) { return lit / 2; }
constexpr bool lit_negated(int lit) { return lit % 2 != 0; }

enum class CnfMode { Standard3Sat, NotAllEqual };

using Clause = std::array<int, 3>;  // encoded literals

struct CnfInstance {
    int num_vars = 0;
    std::vector<Clause> clauses;
    CnfMode mode = CnfMode::Standard3Sat;
};

// Exhaustive solver, num_vars <= 24. Standard: a true literal per clause;
// NotAllEqual: a true and a false literal per clause.
std::optional<std::vector<bool>> brute_sat(const CnfInstance& f);

enum class ExtensionKind { Overlap, Containment };

struct ExtensionInstance {
    Graph graph;
    Representation representation;
    std::vector<int> target;
    ExtensionKind kind = ExtensionKind::Overlap;
    // Bookkeeping for the back-map: the source formula, and whether the
    // instance is one of the fixed trivial ones for pre-solved formulas.
    CnfInstance source;
    bool presolved = false;
};

// NAE-3SAT to Overlap Extension: S_{v_i} = {x_i, not x_i}, S_{w_j} = c_j,
// edges from the induced overlap graph, A = all vertices. Formulas with
// fewer than 4 variables are brute-forced into a fixed trivial instance.
ExtensionInstance nae3sat_to_overlap_extension(const CnfInstance& f);

// Reads the truth assignment off a valid extension set (literal in s means
// true). Throws std::invalid_argument when s is not a valid extension.
std::vector<bool> extension_to_nae_assignment(const ExtensionInstance& inst,
                                              const ElementSet& s);

// 3SAT to Containment Extension: S_{v_i} = {x_i, not x_i},
// S_{w_j} = (L minus c_j) plus a marker element, S_z = {marker}, A = {z}.
// The marker is element 2*num_vars.
ExtensionInstance threesat_to_containment_extension(const CnfInstance& f);

// Intersection Number to CF-Overlap Number: (add_pendants(g), k + 2n).
std::pair<Graph, long long> intersection_to_cf_overlap(const Graph& g, long long k);

// Gadget B_i: perfect matching on 2n+2 vertices plus three mutually
// nonadjacent universal vertices x, y, z (ids 2n+2, 2n+3, 2n+4).
// The index only names the copy; every copy is the same graph.
Graph build_gadget_B(int n, int index = 0);

struct LContainmentInstance {
    Graph graph;
    long long k = 0;
    int l = 0;
};

// CF-Overlap Number to L-Containment: appends 2l gadgets B(n) and sets
// k' = k + 7*l*(n+1). Graphs with n < 4 are pre-solved by the cf oracle
// into a trivial instance.
LContainmentInstance cf_to_lcontainment(const Graph& g, long long k, int l);

struct GadgetRepresentations {
    SizedRepresentation one_containment;   // size 3(n+1), one Equal pair (x, z)
    SizedRepresentation containment_free;  // size 4(n+1)
};

GadgetRepresentations gadget_representations(int n);

}  // namespace overlap
