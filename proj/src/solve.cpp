#include "overlap/solve.hpp"

#include <stdexcept>

namespace overlap {

namespace {

SolveResult checked(const Graph& g, SolveResult result) {
    if (!verify(g, result.witness).valid)
        throw std::logic_error("solve_auto: witness failed re-verification (" +
                               result.method + ")");
    return result;
}

// Spreads a per-class representation (indexed by construction order) onto
// the actual vertex ids.
Representation spread(int n, const std::vector<int>& to_vertex,
                      const Representation& r) {
    Representation out;
    out.sets.resize(n);
    for (size_t i = 0; i < to_vertex.size(); ++i) out.sets[to_vertex[i]] = r.sets[i];
    return out;
}

}  // namespace

SolveResult solve_auto(const Graph& g, const SearchBudget& budget) {
    if (g.n < 1) throw std::invalid_argument("solve_auto: empty graph");
    GraphClass c = classify(g);
    switch (c.tag) {
        case ClassTag::SingleVertex: {
            SizedRepresentation r = clique_representation(1);
            return checked(g, {r.claimed_size, r.representation,
                               "closed-form: single vertex", true});
        }
        case ClassTag::Clique: {
            SizedRepresentation r = clique_representation(g.n);
            return checked(g, {r.claimed_size, r.representation, "closed-form: clique", true});
        }
        case ClassTag::CompleteMultipartite: {
            SizedRepresentation r = kpartite_representation(c.part_sizes());
            std::vector<int> to_vertex;
            for (const auto& part : c.parts)
                to_vertex.insert(to_vertex.end(), part.begin(), part.end());
            return checked(g, {r.claimed_size, spread(g.n, to_vertex, r.representation),
                               "closed-form: complete multipartite", true});
        }
        case ClassTag::Cycle: {
            SizedRepresentation r = cycle_representation(g.n);
            return checked(g, {r.claimed_size, spread(g.n, c.order, r.representation),
                               "closed-form: cycle", true});
        }
        case ClassTag::Path: {
            SizedRepresentation r = path_representation(g.n);
            return checked(g, {r.claimed_size, spread(g.n, c.order, r.representation),
                               "closed-form: path", true});
        }
        case ClassTag::Caterpillar: {
            SizedRepresentation r = caterpillar_representation(g, c.spine, c.leaves);
            return checked(g, {r.claimed_size, r.representation,
                               "closed-form: caterpillar", true});
        }
        case ClassTag::Disconnected: {
            std::vector<SizedRepresentation> parts;
            std::vector<int> to_vertex;
            bool exact = true;
            for (const auto& comp : c.comps) {
                auto sub = induced_subgraph(g, comp);
                SolveResult inner = solve_auto(sub.graph, budget);
                exact = exact && inner.exact;
                parts.push_back({inner.witness, inner.value, classify(sub.graph)});
                for (int v : sub.vertex_map) to_vertex.push_back(v);
            }
            SizedRepresentation composed = compose_components(parts);
            return checked(g, {composed.claimed_size,
                               spread(g.n, to_vertex, composed.representation),
                               "components", exact});
        }
        case ClassTag::Other:
            break;
    }
    SearchOutcome found = overlap_number_exact(g, budget);
    if (found.status == SearchStatus::Exact)
        return checked(g, {*found.value, *found.witness, "exact search", true});
    SizedRepresentation ecc = ecc_overlap_representation(g);
    return checked(g, {ecc.claimed_size, ecc.representation,
                       "upper bound: edge-clique cover", false});
}

}  // namespace overlap
