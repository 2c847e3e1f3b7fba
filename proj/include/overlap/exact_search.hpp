#pragma once

#include <optional>
#include <vector>

#include "overlap/graph.hpp"
#include "overlap/representation.hpp"

namespace overlap {

struct SearchBudget {
    int max_universe = 14;               // largest m to attempt
    long long node_limit = 1'000'000'000;  // search-tree node cap
};

enum class SearchStatus { Exact, ExceededBudget };

struct SearchOutcome {
    std::optional<int> value;
    std::optional<Representation> witness;  // canonical when present
    SearchStatus status = SearchStatus::ExceededBudget;
    long long nodes = 0;
};

// Minimum overlap representation size by backtracking over canonical
// assignments (new elements appear as consecutive fresh labels), sweeping
// the universe size m upward from 3 (1 for edgeless graphs).
SearchOutcome overlap_number_exact(const Graph& g, const SearchBudget& budget = {});

// Same search restricted to containment-free assignments: nonadjacent
// pairs must be disjoint.
SearchOutcome cf_overlap_number_exact(const Graph& g, const SearchBudget& budget = {});

// Minimum edge-clique cover by branch and bound on uncovered edges; the
// witness is the cover as an intersection representation (isolated
// vertices keep empty sets there).
SearchOutcome intersection_number_exact(const Graph& g, const SearchBudget& budget = {});

// First subset S of r's universe, in (cardinality, lexicographic) order
// and including the empty set, overlapping S_v exactly for v in targets.
// Throws std::invalid_argument unless verify(g, r) passes.
std::optional<ElementSet> overlap_extension_solve(const Graph& g, const Representation& r,
                                                  std::vector<int> targets);

// First nonempty S comparable (subset, superset or equal) with S_v exactly
// for v in targets. Requires r to be a containment representation of g.
std::optional<ElementSet> containment_extension_solve(const Graph& g,
                                                      const Representation& r,
                                                      std::vector<int> targets);

}  // namespace overlap
