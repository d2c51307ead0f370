#include <doctest.h>

#include <random>
#include <set>

#include "bowtie/characterize.hpp"
#include "bowtie/errors.hpp"
#include "bowtie/realizer.hpp"
#include "bowtie/verify.hpp"
#include "brute_force.hpp"
#include "families.hpp"

using namespace bowtie;

namespace {

DegreeSequence seq(std::vector<int> v) { return DegreeSequence(std::move(v)); }

void check_realization(const DegreeSequence& s, const Realization& r) {
    CAPTURE(format_sequence(s));
    CHECK(degree_sequence(r.graph) == s);
    CHECK(is_valid_witness(r.graph, r.witness));
    CHECK(testing::brute_least_witness(r.graph).has_value());
    CHECK(r.depth >= 0);
    CHECK(r.depth <= static_cast<int>(s.size()) - 5);
}

} // namespace

TEST_CASE("validate rejects bad parameters") {
    CHECK_NOTHROW(validate({Family::F1_433, 7}));
    CHECK_THROWS_AS(validate({Family::F1_433, 6}), BadParams);
    CHECK_THROWS_AS(validate({Family::F1_433, 7, 1}), BadParams);
    CHECK_THROWS_AS(validate({Family::F2_43, 5}), BadParams);
    CHECK_THROWS_AS(validate({Family::F4_432, 7, 3, 2, 0}), BadParams); // a odd
    CHECK_THROWS_AS(validate({Family::F4_432, 8, 2, 3, 0}), BadParams); // n mismatch
    CHECK_THROWS_AS(validate({Family::F11_4321, 6, 1, 2, 2}), BadParams); // a + b < 4
    CHECK_THROWS_AS(validate({Family::F18_431, 8, 4, 0, 3}), BadParams); // a + c odd
    CHECK_THROWS_AS(validate({Family::SQ_42, 6}), BadParams);
    CHECK_THROWS_AS(validate({Family::S_42, 7}), BadParams);
    CHECK_THROWS_AS(validate({Family::S_4221, 8, 4, 0, 3}), BadParams);
    CHECK_THROWS_AS(family_sequence({Family::C3_TAIL, 5}), BadParams);
    CHECK_THROWS_AS(construct_family({Family::C3_TAIL, 5}), BadParams);
}

TEST_CASE("family_sequence and match_family") {
    CHECK(family_sequence({Family::F3_4, 7}) == seq({4, 3, 3, 3, 3, 3, 3}));
    CHECK(family_sequence({Family::C3_TAIL, 6}) == seq({4, 3, 2, 2, 2, 1}));
    CHECK(family_sequence({Family::S_42, 8}) == seq({4, 2, 2, 2, 2, 2, 2, 2}));
    CHECK(family_sequence({Family::S_4221, 7, 4, 0, 2}) == seq({4, 2, 2, 2, 2, 1, 1}));

    CHECK(match_family(seq({4, 3, 3, 3, 3, 3, 3})) == FamilyPattern{Family::F3_4, 7});
    CHECK(match_family(seq({4, 3, 2, 2, 2, 1})) == FamilyPattern{Family::C3_TAIL, 6});
    CHECK(match_family(seq({4, 4, 3, 3, 2})) == FamilyPattern{Family::F4_432, 5, 2, 1, 0});
    CHECK_FALSE(match_family(seq({5, 5, 2, 2, 2, 2})).has_value());
    CHECK_FALSE(match_family(seq({4, 4, 4, 4, 4})).has_value());
}

TEST_CASE("every family member matches its own pattern (n <= 30)") {
    for (const auto& p : testing::all_family_patterns(30)) {
        const auto s = family_sequence(p);
        CAPTURE(format_sequence(s));
        CHECK(static_cast<int>(s.size()) == p.n);
        CHECK(check_potentially(s).potentially);
        const auto m = match_family(s);
        REQUIRE(m.has_value());
        // C3_TAIL coincides with an F11 member at n = 6
        CHECK(family_sequence(*m) == s);
    }
}

TEST_CASE("construct_family builds a bowtie on vertices 0..4 (n <= 30)") {
    const auto patterns = testing::all_family_patterns(30);
    std::set<Family> seen;
    for (const auto& p : patterns) {
        const auto g = construct_family(p);
        CAPTURE(family_name(p.id));
        CAPTURE(format_sequence(family_sequence(p)));
        CHECK(degree_sequence(g) == family_sequence(p));
        CHECK(is_valid_witness(g, BowtieWitness{0, {1, 2}, {3, 4}}));
        seen.insert(p.id);
    }
    CHECK(seen.size() == std::size(kAllFamilies));
}

TEST_CASE("named family constructions") {
    for (const FamilyPattern& p : {FamilyPattern{Family::F3_4, 7}, FamilyPattern{Family::C3_TAIL, 6},
                                   FamilyPattern{Family::S_42, 8}}) {
        const auto g = construct_family(p);
        CHECK(degree_sequence(g) == family_sequence(p));
        CHECK(contains_bowtie(g).has_value());
        CHECK(testing::brute_least_witness(g).has_value());
    }
}

TEST_CASE("reattach") {
    // (5,3,2^5) lays off to (4,2^5)
    const auto trace = lay_off(seq({5, 3, 2, 2, 2, 2, 2}));
    CHECK_THROWS_AS(reattach(construct_family({Family::S_42, 5}), trace), TraceMismatch);

    const auto inner = havel_hakimi_realize(trace.child);
    const auto g = reattach(inner, trace);
    CHECK(degree_sequence(g) == trace.parent);
    CHECK(g.vertex_count() == 7);

    const auto t2 = lay_off(seq({4, 3, 2, 2, 1}));
    const auto g2 = reattach(havel_hakimi_realize(t2.child), t2);
    CHECK(degree_sequence(g2) == seq({4, 3, 2, 2, 1}));

    // same child, different parent
    const auto t3 = lay_off(seq({3, 3, 3, 2, 1}));
    REQUIRE(t3.child == t2.child);
    CHECK(degree_sequence(reattach(havel_hakimi_realize(t3.child), t3)) == seq({3, 3, 3, 2, 1}));
}

TEST_CASE("reattach keeps existing edges and the bowtie") {
    std::mt19937 rng(3);
    for (int t = 0; t < 500; ++t) {
        const int n = 7 + t % 10;
        const auto s = degree_sequence(testing::random_graph_without_isolated(n, 0.4, rng));
        const auto trace = lay_off(s);
        if (trace.child.size() < 5 || !check_potentially(trace.child).potentially) continue;
        const auto inner = realize_with_bowtie(trace.child);
        const auto g = reattach(inner, trace);
        CHECK(degree_sequence(g) == s);
        for (const auto& [u, v] : inner.edges()) CHECK(g.has_edge(u, v));
        CHECK(contains_bowtie(g).has_value());
    }
}

TEST_CASE("realize (4,2^4) yields the bowtie") {
    const auto r = realize_with_bowtie_traced(seq({4, 2, 2, 2, 2}));
    CHECK(r.route == Route::Oracle);
    CHECK(r.graph.edge_count() == 6);
    check_realization(seq({4, 2, 2, 2, 2}), r);
}

TEST_CASE("realize rejects sequences the checker rejects") {
    CHECK_THROWS_AS(realize_with_bowtie(seq({4, 4, 2, 2, 2})), NotPotentially);
    CHECK_THROWS_AS(realize_with_bowtie(seq({3, 3, 1, 1})), NotPotentially);
    CHECK_THROWS_AS(realize_with_bowtie(seq({4, 2, 2, 2, 2}), RealizeOptions{11}), TooLarge);
}

TEST_CASE("realize every accepted sequence, exhaustive n <= 8") {
    for (int n = 5; n <= 8; ++n) {
        std::size_t accepted = 0;
        enumerate_graphic_sequences(n, [&](const DegreeSequence& s) {
            if (!check_potentially(s).potentially) return true;
            ++accepted;
            check_realization(s, realize_with_bowtie_traced(s));
            return true;
        });
        CHECK(accepted > 0);
    }
}

TEST_CASE("family route with a low oracle threshold") {
    const auto s = seq({4, 4, 4, 3, 3, 3, 3, 3, 3});
    const auto r = realize_with_bowtie_traced(s, RealizeOptions{5});
    CHECK(r.route == Route::Family);
    REQUIRE(r.family);
    CHECK(r.family->id == Family::F1_433);
    CHECK(r.depth == 0);
    check_realization(s, r);

    const auto r2 = realize_with_bowtie_traced(seq({5, 3, 2, 2, 2, 2, 2}));
    CHECK(r2.route == Route::Oracle);
    check_realization(seq({5, 3, 2, 2, 2, 2, 2}), r2);
}

TEST_CASE("with the oracle at n <= 5, only four base sequences are out of reach") {
    const std::set<DegreeSequence> bases = {seq({5, 3, 2, 2, 2, 2, 2}), seq({5, 2, 2, 2, 2, 2, 1}),
                                            seq({5, 3, 2, 2, 2, 2, 2, 2}), seq({5, 2, 2, 2, 2, 2, 2, 1})};
    std::set<DegreeSequence> stuck;
    for (int n = 6; n <= 9; ++n) {
        enumerate_graphic_sequences(n, [&](const DegreeSequence& s) {
            if (!check_potentially(s).potentially) return true;
            try {
                check_realization(s, realize_with_bowtie_traced(s, RealizeOptions{5}));
            } catch (const InternalExhaustion&) {
                DegreeSequence cur = s;
                while (cur.size() > 5) {
                    const auto t = lay_off(cur);
                    if (!check_potentially(t.child).potentially) break;
                    cur = t.child;
                }
                stuck.insert(cur);
            }
            return true;
        });
    }
    CHECK(stuck == bases);
}

TEST_CASE("realize exhaustively for n = 9, 10 with the oracle capped at 8") {
    for (int n = 9; n <= 10; ++n) {
        enumerate_graphic_sequences(n, [&](const DegreeSequence& s) {
            if (!check_potentially(s).potentially) return true;
            const auto r = realize_with_bowtie_traced(s, RealizeOptions{8});
            CHECK(r.route != Route::Oracle);
            check_realization(s, r);
            return true;
        });
    }
}

TEST_CASE("realize random accepted sequences, n = 12..30") {
    std::mt19937 rng(77);
    std::size_t done = 0;
    for (int t = 0; t < 1500; ++t) {
        const int n = 12 + t % 19;
        SimpleGraph g = t % 2 ? testing::random_sparse_graph(n, 4, 3 * n, rng)
                              : testing::random_graph_without_isolated(n, 0.1 + 0.05 * (t % 9), rng);
        const auto s = degree_sequence(g);
        if (!check_potentially(s).potentially) continue;
        const auto r = realize_with_bowtie_traced(s);
        CHECK(degree_sequence(r.graph) == s);
        CHECK(is_valid_witness(r.graph, r.witness));
        CHECK(r.depth <= n - 5);
        ++done;
    }
    CHECK(done > 500);
}
