#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pefo/classify.hpp"
#include "pefo/fixtures.hpp"
#include "pefo/lattice.hpp"
#include "pefo/shape.hpp"
#include "test_support.hpp"

using namespace pefo;
using pefo::testing::u_structure;

TEST_CASE("stock structure verdicts") {
    SUBCASE("3-clique") {
        const Classification c = classify(fixture("clique", {3}));
        CHECK(c.verdict == Verdict::pspace_complete);
        CHECK(c.certainty == Certainty::theorem);
        CHECK(c.permutation_subgroup);
        CHECK(!c.a_witness);
        CHECK(!c.e_witness);
    }
    SUBCASE("2-clique plus isolated point") {
        const Classification c = classify(fixture("k2_plus_k1", {}));
        CHECK(c.verdict == Verdict::np_complete);
        CHECK(c.certainty == Certainty::theorem);
        REQUIRE(c.a_witness);
        CHECK(detect_shape(*c.a_witness).is_a_shop());
        CHECK(!c.e_witness);
    }
    SUBCASE("its complement") {
        const Classification c = classify(complement_digraph(fixture("k2_plus_k1", {})));
        CHECK(c.verdict == Verdict::conp_complete);
        CHECK(c.certainty == Certainty::theorem);
        CHECK(!c.a_witness);
        REQUIRE(c.e_witness);
        CHECK(detect_shape(*c.e_witness).is_e_shop());
    }
    SUBCASE("binary not-all-equal") {
        const Classification c = classify(fixture("nae", {2}));
        CHECK(c.verdict == Verdict::pspace_complete);
        CHECK(c.certainty == Certainty::theorem);
        CHECK(c.permutation_subgroup);
    }
    SUBCASE("a marked element on two points") {
        const Classification c = classify(u_structure());
        CHECK(c.verdict == Verdict::logspace);
        CHECK(c.certainty == Certainty::theorem);
        REQUIRE(c.a_witness);
        REQUIRE(c.e_witness);
        CHECK(*c.a_witness == Shop::parse("(01|1)"));
    }
    SUBCASE("one element is always easy") {
        const Classification c = classify(fixture("clique", {1}));
        CHECK(c.verdict == Verdict::logspace);
        CHECK(c.certainty == Certainty::theorem);
        CHECK(c.note.find("boolean sentence value") != std::string::npos);
    }
}

TEST_CASE("four-element structures surface the conjecture") {
    SUBCASE("an empty relation keeps everything and stays easy") {
        const Structure empty4(Signature({{"E", 2}}), 4, {{}});
        const Classification c = classify(empty4);
        CHECK(c.verdict == Verdict::logspace);
        CHECK(c.certainty == Certainty::theorem);
        CHECK(c.she_count == 41503);
    }
    SUBCASE("an A-shop-only structure gets a conjectured completeness") {
        // the 2-clique with two isolated points
        const Structure b(Signature({{"E", 2}}), 4, {{{0, 1}, {1, 0}}});
        const Classification c = classify(b);
        CHECK(c.verdict == Verdict::np_complete);
        CHECK(c.certainty == Certainty::conjectured_hardness);
    }
    SUBCASE("a permutation-subgroup monoid keeps the theorem grade") {
        const Classification c = classify(fixture("nae", {4}));
        CHECK(c.verdict == Verdict::pspace_complete);
        CHECK(c.certainty == Certainty::theorem);
        CHECK(c.permutation_subgroup);
    }
    SUBCASE("a block-bounded monoid keeps the theorem grade") {
        const Classification c = classify(fixture("multipartite", {2, 2}));
        CHECK(c.verdict == Verdict::pspace_complete);
        CHECK(c.certainty == Certainty::theorem);
        CHECK((c.permutation_subgroup || c.block_bound.has_value()));
    }
}

TEST_CASE("the fragment with equality") {
    CHECK(classify_with_equality(fixture("clique", {1})).verdict == Verdict::logspace);
    for (const Structure& b :
         {fixture("clique", {2}), fixture("clique", {3}), fixture("nae", {2}),
          fixture("nae", {3}), fixture("k2_plus_k1", {}), u_structure()}) {
        const Classification c = classify_with_equality(b);
        CHECK(c.verdict == Verdict::pspace_complete);
        CHECK(c.certainty == Certainty::theorem);
    }
}

TEST_CASE("boolean lattice labels") {
    const DsmLattice lattice = enumerate_dsms(2);
    REQUIRE(lattice.nodes.size() == 5);
    const Shop fe01 = Shop::forall_exists_at(2, 0, 1);
    const Shop fe10 = Shop::forall_exists_at(2, 1, 0);
    for (const Dsm& node : lattice.nodes) {
        const Classification c = classify_monoid(node);
        const bool has_fe = node.contains(fe01) || node.contains(fe10);
        CHECK(c.verdict == (has_fe ? Verdict::logspace : Verdict::pspace_complete));
        CHECK(c.certainty == Certainty::theorem);
        if (c.verdict == Verdict::pspace_complete) CHECK(c.permutation_subgroup);
    }
}

TEST_CASE("larger monoids never classify harder") {
    // Over all 16 two-element digraphs: inclusion of monoids means the
    // verdict can only drop (Logspace below everything, the completeness
    // verdicts above it).
    auto rank = [](Verdict v) { return v == Verdict::logspace ? 0 : 1; };
    std::vector<Structure> all;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<Tuple> edges;
        for (int p = 0; p < 4; ++p)
            if ((mask >> p) & 1) edges.push_back({p / 2, p % 2});
        all.emplace_back(Signature({{"E", 2}}), 2, std::vector<std::vector<Tuple>>{edges});
    }
    for (const Structure& b : all) {
        const Dsm db = she_monoid(b);
        for (const Structure& bp : all) {
            const Dsm dbp = she_monoid(bp);
            const bool included = std::all_of(db.members().begin(), db.members().end(),
                                              [&](const Shop& f) { return dbp.contains(f); });
            if (included)
                CHECK(rank(classify_monoid(dbp).verdict) <= rank(classify_monoid(db).verdict));
        }
    }
}

TEST_CASE("verdict bookkeeping invariants") {
    std::vector<Structure> samples{fixture("clique", {3}), fixture("k2_plus_k1", {}),
                                   complement_digraph(fixture("k2_plus_k1", {})),
                                   fixture("nae", {2}), u_structure(),
                                   fixture("multipartite", {2, 1}), fixture("clique", {2})};
    for (const Structure& b : samples) {
        const Classification c = classify(b);
        const bool both = c.a_witness && c.e_witness;
        CHECK((c.verdict == Verdict::logspace) == (both || b.domain_size() == 1));
        if (c.verdict == Verdict::np_complete) CHECK(!c.e_witness);
        if (c.verdict == Verdict::conp_complete) CHECK(!c.a_witness);
        if (b.domain_size() <= 3) CHECK(c.certainty == Certainty::theorem);
    }
}

TEST_CASE("report rendering") {
    const Classification c = classify(fixture("k2_plus_k1", {}));
    const std::string human = explain(c);
    CHECK(human.find("verdict: NP-complete") != std::string::npos);
    CHECK(human.find("certainty: theorem") != std::string::npos);
    CHECK(human.find("a-shop-witness: (") != std::string::npos);
    CHECK(human.find("e-shop-witness: none") != std::string::npos);

    const std::string machine = machine_report(c);
    CHECK(machine.find("verdict=NP-complete\n") != std::string::npos);
    CHECK(machine.find("she_count=8\n") != std::string::npos);

    CHECK(to_string(Verdict::conp_complete) == "coNP-complete");
    CHECK(to_string(Certainty::conjectured_hardness) == "conjectured-hardness");
}
