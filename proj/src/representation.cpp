#include "overlap/representation.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>

namespace overlap {

ElementSet make_set(std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return elems;
}

bool is_subset(const ElementSet& a, const ElementSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

bool sets_intersect(const ElementSet& a, const ElementSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

std::string to_string(PairRelation r) {
    switch (r) {
        case PairRelation::Overlap: return "Overlap";
        case PairRelation::LeftInRight: return "LeftInRight";
        case PairRelation::RightInLeft: return "RightInLeft";
        case PairRelation::Equal: return "Equal";
        case PairRelation::Disjoint: return "Disjoint";
    }
    return "Disjoint";
}

PairRelation classify_pair(const ElementSet& a, const ElementSet& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("classify_pair: empty set");
    bool a_in_b = is_subset(a, b);
    bool b_in_a = is_subset(b, a);
    if (a_in_b && b_in_a) return PairRelation::Equal;
    if (a_in_b) return PairRelation::LeftInRight;
    if (b_in_a) return PairRelation::RightInLeft;
    if (sets_intersect(a, b)) return PairRelation::Overlap;
    return PairRelation::Disjoint;
}

ElementSet Representation::universe() const {
    ElementSet u;
    for (const auto& s : sets) u = set_union(u, s);
    return u;
}

int size(const Representation& r) { return static_cast<int>(r.universe().size()); }

namespace {

void require_assignments(const Graph& g, const Representation& r, const char* who) {
    if (r.vertex_count() != g.n)
        throw std::invalid_argument(std::string(who) + ": set count != vertex count");
    for (const auto& s : r.sets)
        if (s.empty())
            throw std::invalid_argument(std::string(who) + ": empty vertex set");
}

VerifyReport verify_with(const Graph& g, const Representation& r, const char* who,
                         PairRelation edge_means_a, PairRelation edge_means_b) {
    require_assignments(g, r, who);
    VerifyReport rep;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            PairRelation rel = classify_pair(r.sets[u], r.sets[v]);
            bool positive = rel == edge_means_a || rel == edge_means_b;
            if (positive != g.adjacent(u, v))
                rep.violations.push_back({u, v, g.adjacent(u, v), rel});
        }
    rep.valid = rep.violations.empty();
    return rep;
}

}  // namespace

VerifyReport verify(const Graph& g, const Representation& r) {
    return verify_with(g, r, "verify", PairRelation::Overlap, PairRelation::Overlap);
}

VerifyReport verify_containment(const Graph& g, const Representation& r) {
    return verify_with(g, r, "verify_containment", PairRelation::LeftInRight,
                       PairRelation::RightInLeft);
}

int containment_count(const Graph& g, const Representation& r) {
    if (!verify(g, r).valid)
        throw std::invalid_argument("containment_count: invalid representation");
    int count = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (g.adjacent(u, v)) continue;
            PairRelation rel = classify_pair(r.sets[u], r.sets[v]);
            if (rel != PairRelation::Disjoint && rel != PairRelation::Overlap) ++count;
        }
    return count;
}

Graph graph_from_representation(const Representation& r) {
    int n = r.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (classify_pair(r.sets[u], r.sets[v]) == PairRelation::Overlap)
                e.push_back({u, v});
    return Graph::from_edges(n, std::move(e));
}

Representation restrict_to(const Representation& r, std::vector<int> vs) {
    if (vs.empty()) throw std::invalid_argument("restrict: empty vertex set");
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    Representation out;
    for (int v : vs) {
        if (v < 0 || v >= r.vertex_count())
            throw std::invalid_argument("restrict: unknown vertex id");
        out.sets.push_back(r.sets[v]);
    }
    return out;
}

Representation canonicalize(const Representation& r) {
    std::map<int, int> new_id;  // old element -> first-appearance rank
    int next = 0;
    for (const auto& s : r.sets)
        for (int e : s)
            if (new_id.emplace(e, next).second) ++next;
    Representation out;
    out.sets.reserve(r.sets.size());
    for (const auto& s : r.sets) {
        ElementSet t;
        t.reserve(s.size());
        for (int e : s) t.push_back(new_id.at(e));
        std::sort(t.begin(), t.end());
        out.sets.push_back(std::move(t));
    }
    return out;
}

std::vector<ContainmentWitness> check_containment_component(const Graph& g,
                                                            const Representation& r) {
    require_assignments(g, r, "check_containment_component");
    std::vector<ContainmentWitness> out;
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> outside;
        for (int u = 0; u < g.n; ++u)
            if (u != v && !g.adjacent(u, v)) outside.push_back(u);
        if (outside.empty()) continue;
        auto sub = induced_subgraph(g, outside);
        for (const auto& comp : components(sub.graph)) {
            ElementSet comp_union;
            for (int w : comp) comp_union = set_union(comp_union, r.sets[sub.vertex_map[w]]);
            for (int w : comp) {
                int u = sub.vertex_map[w];
                if (!is_subset(r.sets[u], r.sets[v])) continue;
                if (is_subset(comp_union, r.sets[v])) continue;
                int witness = -1;
                for (int e : comp_union)
                    if (!std::binary_search(r.sets[v].begin(), r.sets[v].end(), e)) {
                        witness = e;
                        break;
                    }
                out.push_back({v, u, witness});
            }
        }
    }
    return out;
}

}  // namespace overlap
