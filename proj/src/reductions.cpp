#include "overlap/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace overlap {

namespace {

void validate_cnf(const CnfInstance& f, bool reject_duplicates) {
    if (f.num_vars < 0) throw std::invalid_argument("cnf: negative variable count");
    for (const Clause& c : f.clauses) {
        for (int lit : c)
            if (lit < 0 || lit_var(lit) >= f.num_vars)
                throw std::invalid_argument("cnf: literal out of range");
        if (reject_duplicates &&
            (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]))
            throw std::invalid_argument("cnf: duplicate literal in clause");
    }
}

bool lit_true(int lit, const std::vector<bool>& assignment) {
    bool v = assignment[lit_var(lit)];
    return lit_negated(lit) ? !v : v;
}

ExtensionInstance trivial_instance(ExtensionKind kind, bool yes, CnfInstance source) {
    // K_1 with the one-element representation; the target set flips the
    // answer. Under overlap semantics nothing can overlap {0}, so A = {0}
    // is a NO and A = {} a YES; comparability inverts that.
    ExtensionInstance inst;
    inst.graph = empty_graph(1);
    inst.representation.sets = {{0}};
    bool target_vertex = (kind == ExtensionKind::Overlap) ? !yes : yes;
    if (target_vertex) inst.target = {0};
    inst.kind = kind;
    inst.source = std::move(source);
    inst.presolved = true;
    return inst;
}

}  // namespace

std::optional<std::vector<bool>> brute_sat(const CnfInstance& f) {
    validate_cnf(f, false);
    if (f.num_vars > 24)
        throw std::invalid_argument("brute_sat: num_vars <= 24 required");
    int n = f.num_vars;
    for (long long bits = 0; bits < (1LL << n); ++bits) {
        std::vector<bool> a(n);
        for (int i = 0; i < n; ++i) a[i] = (bits >> i) & 1;
        bool ok = true;
        for (const Clause& c : f.clauses) {
            int t = 0, fcount = 0;
            for (int lit : c) (lit_true(lit, a) ? t : fcount) += 1;
            bool sat = f.mode == CnfMode::NotAllEqual ? (t > 0 && fcount > 0) : t > 0;
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) return a;
    }
    return std::nullopt;
}

ExtensionInstance nae3sat_to_overlap_extension(const CnfInstance& f) {
    if (f.mode != CnfMode::NotAllEqual)
        throw std::invalid_argument("nae3sat_to_overlap_extension: NAE mode required");
    validate_cnf(f, false);
    // Pre-solved formulas go through brute_sat, which tolerates repeated
    // literals; the set construction below needs all three distinct.
    if (f.num_vars < 4)
        return trivial_instance(ExtensionKind::Overlap, brute_sat(f).has_value(), f);
    validate_cnf(f, true);

    ExtensionInstance inst;
    inst.kind = ExtensionKind::Overlap;
    inst.source = f;
    for (int i = 0; i < f.num_vars; ++i)
        inst.representation.sets.push_back({pos_lit(i), neg_lit(i)});
    for (const Clause& c : f.clauses)
        inst.representation.sets.push_back(make_set({c[0], c[1], c[2]}));
    inst.graph = graph_from_representation(inst.representation);
    inst.target.resize(inst.graph.n);
    std::iota(inst.target.begin(), inst.target.end(), 0);
    return inst;
}

std::vector<bool> extension_to_nae_assignment(const ExtensionInstance& inst,
                                              const ElementSet& s) {
    if (inst.kind != ExtensionKind::Overlap)
        throw std::invalid_argument("extension_to_nae_assignment: overlap instance required");
    std::vector<char> wanted(inst.graph.n, 0);
    for (int v : inst.target) wanted.at(v) = 1;
    for (int v = 0; v < inst.graph.n; ++v) {
        bool overlaps = !s.empty() &&
                        classify_pair(s, inst.representation.sets[v]) == PairRelation::Overlap;
        if (overlaps != static_cast<bool>(wanted[v]))
            throw std::invalid_argument("extension_to_nae_assignment: not a valid extension");
    }
    if (inst.presolved) {
        auto a = brute_sat(inst.source);
        if (!a)
            throw std::invalid_argument("extension_to_nae_assignment: not a valid extension");
        return *a;
    }
    std::vector<bool> a(inst.source.num_vars);
    for (int i = 0; i < inst.source.num_vars; ++i)
        a[i] = std::binary_search(s.begin(), s.end(), pos_lit(i));
    return a;
}

ExtensionInstance threesat_to_containment_extension(const CnfInstance& f) {
    if (f.mode != CnfMode::Standard3Sat)
        throw std::invalid_argument(
            "threesat_to_containment_extension: Standard3Sat mode required");
    validate_cnf(f, false);
    if (f.num_vars < 4)
        return trivial_instance(ExtensionKind::Containment, brute_sat(f).has_value(), f);
    validate_cnf(f, true);

    int n = f.num_vars;
    int marker = 2 * n;
    ExtensionInstance inst;
    inst.kind = ExtensionKind::Containment;
    inst.source = f;
    for (int i = 0; i < n; ++i)
        inst.representation.sets.push_back({pos_lit(i), neg_lit(i)});
    for (const Clause& c : f.clauses) {
        ElementSet s;
        for (int lit = 0; lit < 2 * n; ++lit)
            if (lit != c[0] && lit != c[1] && lit != c[2]) s.push_back(lit);
        s.push_back(marker);
        inst.representation.sets.push_back(std::move(s));
    }
    inst.representation.sets.push_back({marker});
    int z = inst.representation.vertex_count() - 1;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u <= z; ++u)
        for (int v = u + 1; v <= z; ++v) {
            PairRelation rel =
                classify_pair(inst.representation.sets[u], inst.representation.sets[v]);
            if (rel == PairRelation::LeftInRight || rel == PairRelation::RightInLeft)
                edges.push_back({u, v});
        }
    inst.graph = Graph::from_edges(z + 1, std::move(edges));
    inst.target = {z};
    return inst;
}

std::pair<Graph, long long> intersection_to_cf_overlap(const Graph& g, long long k) {
    return {add_pendants(g), k + 2 * g.n};
}

Graph build_gadget_B(int n, int index) {
    (void)index;
    if (n < 4) throw std::invalid_argument("build_gadget_B: n >= 4 required");
    int matched = 2 * n + 2;
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j <= n; ++j) edges.push_back({2 * j, 2 * j + 1});
    for (int u = matched; u < matched + 3; ++u)
        for (int v = 0; v < matched; ++v) edges.push_back({v, u});
    return Graph::from_edges(matched + 3, std::move(edges));
}

LContainmentInstance cf_to_lcontainment(const Graph& g, long long k, int l) {
    if (k < 0 || l < 0)
        throw std::invalid_argument("cf_to_lcontainment: budgets must be nonnegative");
    if (g.n < 4) {
        auto cf = cf_overlap_number_exact(g);
        bool yes = cf.status == SearchStatus::Exact && *cf.value <= k;
        // Trivial fixed instances: K_1 answers (k=1, l=0) yes, (k=0, l=0) no.
        return {empty_graph(1), yes ? 1 : 0, 0};
    }
    std::vector<Graph> parts{g};
    for (int i = 0; i < 2 * l; ++i) parts.push_back(build_gadget_B(g.n, i + 1));
    return {disjoint_union(parts), k + 7LL * l * (g.n + 1), l};
}

GadgetRepresentations gadget_representations(int n) {
    if (n < 4) throw std::invalid_argument("gadget_representations: n >= 4 required");
    Graph b = build_gadget_B(n);
    GraphClass tag = classify(b);
    int edges = n + 1;
    GadgetRepresentations out;

    // Size 3(n+1): per matching edge j a shared element and one private per
    // endpoint; x and z take all shared elements (the single containment),
    // y takes all privates.
    {
        Representation r;
        r.sets.resize(b.n);
        ElementSet shared, privates;
        for (int j = 0; j < edges; ++j) {
            r.sets[2 * j] = {3 * j, 3 * j + 1};
            r.sets[2 * j + 1] = {3 * j, 3 * j + 2};
            shared.push_back(3 * j);
            privates.push_back(3 * j + 1);
            privates.push_back(3 * j + 2);
        }
        std::sort(privates.begin(), privates.end());
        r.sets[2 * edges] = shared;      // x
        r.sets[2 * edges + 1] = privates;  // y
        r.sets[2 * edges + 2] = shared;  // z
        out.one_containment = {std::move(r), 3 * edges, tag};
    }

    // Size 4(n+1): two shared elements per edge, split so every universal
    // pair overlaps.
    {
        Representation r;
        r.sets.resize(b.n);
        ElementSet xs, ys, zs;
        for (int j = 0; j < edges; ++j) {
            r.sets[2 * j] = {4 * j, 4 * j + 1, 4 * j + 2};
            r.sets[2 * j + 1] = {4 * j, 4 * j + 1, 4 * j + 3};
            xs.push_back(4 * j);
            ys.push_back(4 * j + 1);
            zs.push_back(4 * j + 2);
            zs.push_back(4 * j + 3);
        }
        std::sort(zs.begin(), zs.end());
        r.sets[2 * edges] = xs;
        r.sets[2 * edges + 1] = ys;
        r.sets[2 * edges + 2] = zs;
        out.containment_free = {std::move(r), 4 * edges, tag};
    }
    return out;
}

}  // namespace overlap
