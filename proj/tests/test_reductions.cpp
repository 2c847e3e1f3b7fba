#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "overlap/exact_search.hpp"
#include "overlap/graph.hpp"
#include "overlap/reductions.hpp"
#include "overlap/representation.hpp"

using namespace overlap;

namespace {

Clause clause(int a, int b, int c) { return {a, b, c}; }

// All eight sign patterns over three variables; NAE- and 3SAT-unsatisfiable.
std::vector<Clause> all_sign_patterns(int v0, int v1, int v2) {
    std::vector<Clause> out;
    for (int bits = 0; bits < 8; ++bits)
        out.push_back(clause(2 * v0 + (bits & 1), 2 * v1 + ((bits >> 1) & 1),
                             2 * v2 + ((bits >> 2) & 1)));
    return out;
}

bool nae_satisfies(const CnfInstance& f, const std::vector<bool>& a) {
    for (const Clause& c : f.clauses) {
        int t = 0, fl = 0;
        for (int lit : c) {
            bool v = a[lit_var(lit)];
            (lit_negated(lit) ? !v : v) ? ++t : ++fl;
        }
        if (f.mode == CnfMode::NotAllEqual) {
            if (t == 0 || fl == 0) return false;
        } else if (t == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("literal encoding") {
    CHECK(pos_lit(3) == 6);
    CHECK(neg_lit(3) == 7);
    CHECK(lit_var(7) == 3);
    CHECK(lit_negated(7));
    CHECK_FALSE(lit_negated(6));
}

TEST_CASE("brute_sat") {
    CnfInstance nae{3, {clause(pos_lit(0), pos_lit(1), pos_lit(2))}, CnfMode::NotAllEqual};
    auto a = brute_sat(nae);
    REQUIRE(a.has_value());
    CHECK(nae_satisfies(nae, *a));

    // (x0)(¬x0) padded by literal repetition: standard-unsatisfiable.
    CnfInstance contra{1,
                       {clause(pos_lit(0), pos_lit(0), pos_lit(0)),
                        clause(neg_lit(0), neg_lit(0), neg_lit(0))},
                       CnfMode::Standard3Sat};
    CHECK_FALSE(brute_sat(contra).has_value());

    CnfInstance full{3, all_sign_patterns(0, 1, 2), CnfMode::NotAllEqual};
    CHECK_FALSE(brute_sat(full).has_value());
    CnfInstance full_std{3, all_sign_patterns(0, 1, 2), CnfMode::Standard3Sat};
    CHECK_FALSE(brute_sat(full_std).has_value());

    CnfInstance huge{25, {}, CnfMode::Standard3Sat};
    CHECK_THROWS_AS(brute_sat(huge), std::invalid_argument);
    CnfInstance bad{1, {clause(0, 1, 5)}, CnfMode::Standard3Sat};
    CHECK_THROWS_AS(brute_sat(bad), std::invalid_argument);
}

TEST_CASE("nae3sat_to_overlap_extension builds the paper instance") {
    CnfInstance f{4, {clause(pos_lit(0), pos_lit(1), pos_lit(2))}, CnfMode::NotAllEqual};
    auto inst = nae3sat_to_overlap_extension(f);
    CHECK_FALSE(inst.presolved);
    CHECK(inst.kind == ExtensionKind::Overlap);
    REQUIRE(inst.graph.n == 5);
    CHECK(inst.representation.sets[0] == ElementSet{0, 1});
    CHECK(inst.representation.sets[3] == ElementSet{6, 7});
    CHECK(inst.representation.sets[4] == ElementSet{0, 2, 4});
    CHECK(inst.target == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(verify(inst.graph, inst.representation).valid);

    auto s = overlap_extension_solve(inst.graph, inst.representation, inst.target);
    REQUIRE(s.has_value());
    // The extension picks exactly one literal per variable and a mixed
    // (not none, not all) slice of the clause.
    for (int i = 0; i < 4; ++i) {
        bool pos = std::binary_search(s->begin(), s->end(), pos_lit(i));
        bool neg = std::binary_search(s->begin(), s->end(), neg_lit(i));
        CHECK(pos != neg);
    }
    int in_clause = 0;
    for (int lit : {pos_lit(0), pos_lit(1), pos_lit(2)})
        in_clause += std::binary_search(s->begin(), s->end(), lit) ? 1 : 0;
    CHECK(in_clause >= 1);
    CHECK(in_clause <= 2);

    auto assignment = extension_to_nae_assignment(inst, *s);
    CHECK(nae_satisfies(f, assignment));

    CHECK_THROWS_AS(nae3sat_to_overlap_extension(
                        CnfInstance{4, {}, CnfMode::Standard3Sat}),
                    std::invalid_argument);
    CHECK_THROWS_AS(nae3sat_to_overlap_extension(
                        CnfInstance{4,
                                    {clause(pos_lit(0), pos_lit(0), pos_lit(1))},
                                    CnfMode::NotAllEqual}),
                    std::invalid_argument);
}

TEST_CASE("unsatisfiable NAE formula yields no extension") {
    CnfInstance f{4, all_sign_patterns(0, 1, 2), CnfMode::NotAllEqual};
    CHECK_FALSE(brute_sat(f).has_value());
    auto inst = nae3sat_to_overlap_extension(f);
    CHECK_FALSE(inst.presolved);
    CHECK(verify(inst.graph, inst.representation).valid);
    CHECK_FALSE(
        overlap_extension_solve(inst.graph, inst.representation, inst.target)
            .has_value());
}

TEST_CASE("small NAE formulas are pre-solved into trivial instances") {
    // One variable, all-equal clause: NAE-unsatisfiable.
    CnfInstance no{1, {clause(0, 0, 0)}, CnfMode::NotAllEqual};
    auto noinst = nae3sat_to_overlap_extension(no);
    CHECK(noinst.presolved);
    CHECK(noinst.graph == empty_graph(1));
    CHECK(noinst.target == std::vector<int>{0});
    CHECK_FALSE(
        overlap_extension_solve(noinst.graph, noinst.representation, noinst.target)
            .has_value());

    CnfInstance yes{2, {clause(pos_lit(0), pos_lit(1), neg_lit(1))}, CnfMode::NotAllEqual};
    auto yesinst = nae3sat_to_overlap_extension(yes);
    CHECK(yesinst.presolved);
    CHECK(yesinst.target.empty());
    auto s = overlap_extension_solve(yesinst.graph, yesinst.representation,
                                     yesinst.target);
    REQUIRE(s.has_value());
    auto assignment = extension_to_nae_assignment(yesinst, *s);
    CHECK(nae_satisfies(yes, assignment));
}

TEST_CASE("extension_to_nae_assignment reads literals directly") {
    CnfInstance f{4, {clause(pos_lit(0), pos_lit(1), pos_lit(2))}, CnfMode::NotAllEqual};
    auto inst = nae3sat_to_overlap_extension(f);
    ElementSet s{pos_lit(0), neg_lit(1), neg_lit(2), pos_lit(3)};
    auto a = extension_to_nae_assignment(inst, s);
    CHECK(a == std::vector<bool>{true, false, false, true});

    // A set holding both literals of a variable contains S_{v_i}; that is
    // never a valid extension.
    CHECK_THROWS_AS(
        extension_to_nae_assignment(inst, ElementSet{0, 1, 2, 4, 6}),
        std::invalid_argument);
}

TEST_CASE("threesat_to_containment_extension") {
    CnfInstance f{4,
                  {clause(pos_lit(0), pos_lit(1), pos_lit(2)),
                   clause(neg_lit(0), pos_lit(2), neg_lit(3))},
                  CnfMode::Standard3Sat};
    auto inst = threesat_to_containment_extension(f);
    CHECK_FALSE(inst.presolved);
    CHECK(inst.kind == ExtensionKind::Containment);
    REQUIRE(inst.graph.n == 4 + 2 + 1);
    int z = inst.graph.n - 1;
    CHECK(inst.target == std::vector<int>{z});
    CHECK(inst.representation.sets[z] == ElementSet{8});
    for (int j = 0; j < 2; ++j)
        CHECK(inst.representation.sets[4 + j].size() == 2 * 4 - 2);
    CHECK(verify_containment(inst.graph, inst.representation).valid);
    // z sits inside every clause set.
    CHECK(inst.graph.adjacent(4, z));
    CHECK(inst.graph.adjacent(5, z));

    auto s = containment_extension_solve(inst.graph, inst.representation,
                                         inst.target);
    REQUIRE(s.has_value());
    CHECK(std::binary_search(s->begin(), s->end(), 8));
    // The literal part is consistent and satisfies the formula.
    std::vector<bool> a(4, false);
    for (int i = 0; i < 4; ++i) {
        bool pos = std::binary_search(s->begin(), s->end(), pos_lit(i));
        bool neg = std::binary_search(s->begin(), s->end(), neg_lit(i));
        CHECK_FALSE((pos && neg));
        a[i] = pos;
    }
    CHECK(nae_satisfies(f, a));  // Standard mode: at least one true literal

    // Repeating a clause creates an Equal pair, which stays nonadjacent
    // under containment semantics.
    CnfInstance dup{4,
                    {clause(pos_lit(0), pos_lit(1), pos_lit(2)),
                     clause(pos_lit(0), pos_lit(1), pos_lit(2))},
                    CnfMode::Standard3Sat};
    auto dinst = threesat_to_containment_extension(dup);
    CHECK_FALSE(dinst.graph.adjacent(4, 5));
    CHECK(verify_containment(dinst.graph, dinst.representation).valid);

    CHECK_THROWS_AS(threesat_to_containment_extension(
                        CnfInstance{4, {}, CnfMode::NotAllEqual}),
                    std::invalid_argument);
}

TEST_CASE("unsatisfiable 3SAT yields no containment extension") {
    // Eight sign patterns over x1,x2,x3 plus a tautological clause touching
    // x0 to reach four variables.
    auto clauses = all_sign_patterns(1, 2, 3);
    clauses.push_back(clause(pos_lit(0), pos_lit(1), neg_lit(1)));
    CnfInstance f{4, clauses, CnfMode::Standard3Sat};
    CHECK_FALSE(brute_sat(f).has_value());
    auto inst = threesat_to_containment_extension(f);
    CHECK_FALSE(inst.presolved);
    CHECK_FALSE(containment_extension_solve(inst.graph, inst.representation,
                                            inst.target)
                    .has_value());
}

TEST_CASE("small 3SAT formulas are pre-solved, with inverted trivial targets") {
    CnfInstance yes{2, {clause(pos_lit(0), pos_lit(1), neg_lit(1))},
                    CnfMode::Standard3Sat};
    auto yesinst = threesat_to_containment_extension(yes);
    CHECK(yesinst.presolved);
    CHECK(yesinst.target == std::vector<int>{0});
    CHECK(containment_extension_solve(yesinst.graph, yesinst.representation,
                                      yesinst.target)
              .has_value());

    CnfInstance no{1,
                   {clause(pos_lit(0), pos_lit(0), pos_lit(0)),
                    clause(neg_lit(0), neg_lit(0), neg_lit(0))},
                   CnfMode::Standard3Sat};
    auto noinst = threesat_to_containment_extension(no);
    CHECK(noinst.presolved);
    CHECK(noinst.target.empty());
    CHECK_FALSE(containment_extension_solve(noinst.graph, noinst.representation,
                                            noinst.target)
                    .has_value());
}

TEST_CASE("intersection_to_cf_overlap") {
    auto [net, k1] = intersection_to_cf_overlap(complete_graph(3), 1);
    CHECK(net == add_pendants(complete_graph(3)));
    CHECK(k1 == 7);
    CHECK(*cf_overlap_number_exact(net).value == 7);
    CHECK(*intersection_number_exact(complete_graph(3)).value + 6 == 7);

    auto [g2, k2] = intersection_to_cf_overlap(path_graph(3), 2);
    CHECK(g2.n == 6);
    CHECK(k2 == 8);
    CHECK(*cf_overlap_number_exact(g2).value == 8);

    // Edgeless corner: the arithmetic is k + 2n, but cf(K_2) = 3; the
    // decision-level equivalence only covers the pendant regime.
    auto [k2graph, k0] = intersection_to_cf_overlap(complete_graph(1), 0);
    CHECK(k2graph == complete_graph(2));
    CHECK(k0 == 2);
    CHECK(*cf_overlap_number_exact(k2graph).value == 3);
}

TEST_CASE("build_gadget_B") {
    Graph b4 = build_gadget_B(4);
    CHECK(b4.n == 13);
    CHECK(b4.edge_count() == 35);
    for (int u : {10, 11, 12}) {
        CHECK(b4.degree(u) == 10);
        for (int v : {10, 11, 12})
            if (u != v) CHECK_FALSE(b4.adjacent(u, v));
    }
    for (int v = 0; v < 10; ++v) CHECK(b4.degree(v) == 4);
    CHECK(b4.adjacent(0, 1));
    CHECK_FALSE(b4.adjacent(1, 2));

    for (int n = 4; n <= 10; ++n) {
        Graph b = build_gadget_B(n, n);
        CHECK(b.n == 2 * n + 5);
        CHECK(b.edge_count() == 7 * n + 7);
    }
    CHECK_THROWS_AS(build_gadget_B(3), std::invalid_argument);
}

TEST_CASE("cf_to_lcontainment") {
    Graph c4 = cycle_graph(4);
    auto zero = cf_to_lcontainment(c4, 9, 0);
    CHECK(zero.graph == c4);
    CHECK(zero.k == 9);
    CHECK(zero.l == 0);

    auto one = cf_to_lcontainment(c4, 10, 1);
    CHECK(one.k == 10 + 7 * 1 * 5);
    CHECK(one.graph.n == 4 + 2 * 13);
    CHECK(one.l == 1);
    CHECK(components(one.graph).size() == 3);

    auto two = cf_to_lcontainment(complete_graph(5), 1, 2);
    CHECK(two.k == 1 + 7 * 2 * 6);
    CHECK(two.graph.n == 5 + 4 * 15);
    CHECK(components(two.graph).size() == 5);

    // cf(P_3) = 4: budget 10 is a YES, budget 3 a NO; both collapse to the
    // fixed trivial instances.
    auto triv_yes = cf_to_lcontainment(path_graph(3), 10, 2);
    CHECK(triv_yes.graph == empty_graph(1));
    CHECK(triv_yes.k == 1);
    CHECK(triv_yes.l == 0);
    auto triv_no = cf_to_lcontainment(path_graph(3), 3, 2);
    CHECK(triv_no.graph == empty_graph(1));
    CHECK(triv_no.k == 0);
    CHECK(triv_no.l == 0);

    CHECK_THROWS_AS(cf_to_lcontainment(c4, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(cf_to_lcontainment(c4, 1, -1), std::invalid_argument);
}

TEST_CASE("gadget_representations") {
    for (int n = 4; n <= 6; ++n) {
        Graph b = build_gadget_B(n);
        auto reps = gadget_representations(n);

        CHECK(reps.one_containment.claimed_size == 3 * (n + 1));
        CHECK(size(reps.one_containment.representation) == 3 * (n + 1));
        CHECK(verify(b, reps.one_containment.representation).valid);
        CHECK(containment_count(b, reps.one_containment.representation) == 1);
        // The single containment pair is x against z (an Equal pair).
        CHECK(classify_pair(reps.one_containment.representation.sets[2 * n + 2],
                            reps.one_containment.representation.sets[2 * n + 4]) ==
              PairRelation::Equal);

        CHECK(reps.containment_free.claimed_size == 4 * (n + 1));
        CHECK(size(reps.containment_free.representation) == 4 * (n + 1));
        CHECK(verify(b, reps.containment_free.representation).valid);
        CHECK(containment_count(b, reps.containment_free.representation) == 0);
    }
    CHECK_THROWS_AS(gadget_representations(3), std::invalid_argument);
}

}  // TEST_SUITE
