#pragma once

#include <string>

#include "overlap/closed_forms.hpp"
#include "overlap/exact_search.hpp"
#include "overlap/graph.hpp"
#include "overlap/representation.hpp"

namespace overlap {

struct SolveResult {
    int value = 0;
    Representation witness;
    std::string method;    // e.g. "closed-form: path", "components"
    bool exact = true;     // false only for the ECC upper-bound fallback
};

// Overlap number with witness: closed forms where classify recognizes the
// graph, component composition for disconnected graphs, exact search
// otherwise. When the search budget runs out the result degrades to the
// edge-clique-cover upper bound (exact = false). The witness is re-verified
// before returning.
SolveResult solve_auto(const Graph& g, const SearchBudget& budget = {});

}  // namespace overlap
