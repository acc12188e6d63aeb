#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "pefo/dsm.hpp"
#include "pefo/fixtures.hpp"
#include "pefo/lattice.hpp"
#include "pefo/random.hpp"
#include "test_support.hpp"

using namespace pefo;

namespace {

bool subset(const Dsm& a, const Dsm& b) {
    return std::all_of(a.members().begin(), a.members().end(),
                       [&](const Shop& f) { return b.contains(f); });
}

} // namespace

TEST_CASE("closure basics") {
    SUBCASE("closure of nothing is the trivial monoid") {
        const Dsm d = Dsm::closure(2, {});
        CHECK(d.size() == 1);
        CHECK(d.contains(Shop::identity(2)));
    }
    SUBCASE("worked two-element examples") {
        const Dsm d = Dsm::closure(2, {Shop::parse("(0|01)")});
        CHECK(d.members() == std::vector<Shop>{Shop::identity(2), Shop::parse("(0|01)")});

        // the one-point collapse with a full image generates everything
        CHECK(Dsm::closure(2, {Shop::parse("(01|0)")}).size() == 7);
    }
    SUBCASE("closure is extensive, monotone and idempotent") {
        Rng rng(5);
        const auto shops = enumerate_shops(3);
        for (int i = 0; i < 30; ++i) {
            const Shop& f = shops[static_cast<std::size_t>(rng.below(265))];
            const Shop& g = shops[static_cast<std::size_t>(rng.below(265))];
            const Dsm small = Dsm::closure(3, {f});
            const Dsm large = Dsm::closure(3, {f, g});
            CHECK(small.contains(f));
            CHECK(subset(small, large));
            CHECK(Dsm::closure(3, small.members()) == small);
        }
    }
    SUBCASE("every closure passes the invariant check") {
        Rng rng(6);
        const auto shops = enumerate_shops(3);
        for (int i = 0; i < 10; ++i) {
            const Shop& f = shops[static_cast<std::size_t>(rng.below(265))];
            CHECK(verify_dsm_closed(Dsm::closure(3, {f})));
        }
    }
    SUBCASE("construction rejects sets without the identity") {
        CHECK_THROWS_AS(Dsm(2, {Shop::parse("(1|0)")}), ValidationError);
    }
}

TEST_CASE("monoid inverse") {
    const Dsm d = Dsm::closure(2, {Shop::parse("(0|01)")});
    const Dsm inv = dsm_inverse(d);
    CHECK(inv == Dsm::closure(2, {Shop::parse("(01|1)")}));

    SUBCASE("involution") {
        const auto shops = enumerate_shops(3);
        Rng rng(8);
        for (int i = 0; i < 15; ++i) {
            const Dsm m = Dsm::closure(3, {shops[static_cast<std::size_t>(rng.below(265))]});
            CHECK(dsm_inverse(dsm_inverse(m)) == m);
        }
    }
    SUBCASE("groups are closed under inverse") {
        const Dsm s3 = she_monoid(fixture("clique", {3}));
        CHECK(dsm_inverse(s3) == s3);
        const Dsm trivial = Dsm::closure(3, {});
        CHECK(dsm_inverse(trivial) == trivial);
    }
}

TEST_CASE("permutation subgroup detection") {
    CHECK(is_permutation_subgroup(she_monoid(fixture("clique", {3}))));
    CHECK(is_permutation_subgroup(Dsm::closure(2, {})));
    CHECK(!is_permutation_subgroup(she_monoid(pefo::testing::u_structure())));
}

TEST_CASE("block permutation bounds") {
    SUBCASE("the two-cycle collapse is bounded by a swapped partition") {
        const auto bound = is_block_permutation_bounded(Dsm::closure(3, {Shop::parse("(12|0|0)")}));
        REQUIRE(bound);
        CHECK(bound->blocks == std::vector<std::vector<int>>{{0}, {1, 2}});
        // both the identity and the swap block maps occur among members
        CHECK(bound->block_maps
              == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    }
    SUBCASE("permutation groups are left to the subgroup test") {
        CHECK(!is_block_permutation_bounded(she_monoid(fixture("clique", {3}))));
    }
    SUBCASE("the full monoid is unbounded") {
        CHECK(!is_block_permutation_bounded(Dsm::closure(2, {Shop::full(2)})));
    }
}

TEST_CASE("minimal generators") {
    CHECK(minimal_generators(Dsm::closure(2, {}))
          == std::vector<Shop>{Shop::identity(2)});
    CHECK(minimal_generators(Dsm::closure(2, {Shop::parse("(0|01)")}))
          == std::vector<Shop>{Shop::parse("(0|01)")});
    SUBCASE("the symmetric group needs two generators") {
        const Dsm s3 = she_monoid(fixture("clique", {3}));
        const auto gens = minimal_generators(s3);
        CHECK(gens.size() == 2);
        CHECK(Dsm::closure(3, gens) == s3);
    }
    CHECK(generator_notation(Dsm::closure(2, {Shop::parse("(0|01)")})) == "<(0|01)>");
}

TEST_CASE("the two-element lattice") {
    const DsmLattice lattice = enumerate_dsms(2);
    REQUIRE(lattice.nodes.size() == 5);
    CHECK(lattice.edges.size() == 6);

    CHECK(lattice.nodes[lattice.bottom()] == Dsm::closure(2, {}));
    CHECK(lattice.nodes[lattice.top()].size() == 7);

    // the three intermediate nodes, as sets
    std::set<std::vector<Shop>> middles;
    for (int i = 1; i <= 3; ++i) middles.insert(lattice.nodes[static_cast<std::size_t>(i)].members());
    for (const char* gen : {"(0|01)", "(1|0)", "(01|1)"})
        CHECK(middles.count(Dsm::closure(2, {Shop::parse(gen)}).members()) == 1);

    SUBCASE("Hasse shape: bottom under the three middles, middles under the top") {
        const std::vector<std::pair<int, int>> expected{{0, 1}, {0, 2}, {0, 3},
                                                        {1, 4}, {2, 4}, {3, 4}};
        CHECK(lattice.edges == expected);
    }
}

TEST_CASE("the one-element lattice") {
    const DsmLattice lattice = enumerate_dsms(1);
    CHECK(lattice.nodes.size() == 1);
    CHECK(lattice.edges.empty());
}

TEST_CASE("the three-element lattice") {
    const DsmLattice lattice = enumerate_dsms(3);
    // regression baseline from the first verified enumeration
    CHECK(lattice.nodes.size() == 115);
    CHECK(lattice.edges.size() == 276);

    SUBCASE("every node is a closed monoid") {
        for (const Dsm& node : lattice.nodes) CHECK(verify_dsm_closed(node));
    }
    SUBCASE("pairwise intersections are again nodes") {
        std::set<std::vector<Shop>> node_sets;
        for (const Dsm& node : lattice.nodes) node_sets.insert(node.members());
        Rng rng(17);
        for (int t = 0; t < 200; ++t) {
            const Dsm& a = lattice.nodes[static_cast<std::size_t>(
                rng.below(static_cast<int>(lattice.nodes.size())))];
            const Dsm& b = lattice.nodes[static_cast<std::size_t>(
                rng.below(static_cast<int>(lattice.nodes.size())))];
            std::vector<Shop> meet;
            for (const Shop& f : a.members())
                if (b.contains(f)) meet.push_back(f);
            CHECK(node_sets.count(meet) == 1);
        }
    }
    SUBCASE("the permutation subgroups form a meet-closed six-node sublattice") {
        std::vector<const Dsm*> subgroup_nodes;
        for (const Dsm& node : lattice.nodes)
            if (is_permutation_subgroup(node)) subgroup_nodes.push_back(&node);
        CHECK(subgroup_nodes.size() == 6); // the subgroup count of the symmetric group on 3

        std::set<std::vector<Shop>> subgroup_sets;
        for (const Dsm* node : subgroup_nodes) subgroup_sets.insert(node->members());
        for (const Dsm* a : subgroup_nodes)
            for (const Dsm* b : subgroup_nodes) {
                std::vector<Shop> meet;
                for (const Shop& f : a->members())
                    if (b->contains(f)) meet.push_back(f);
                CHECK(subgroup_sets.count(meet) == 1);
            }
    }
    SUBCASE("the two-element subgroup lattice also sits inside its monoid lattice") {
        const DsmLattice small = enumerate_dsms(2);
        int subgroups = 0;
        for (const Dsm& node : small.nodes)
            if (is_permutation_subgroup(node)) ++subgroups;
        CHECK(subgroups == 2);
    }
}

TEST_CASE("quantifier-pattern inclusions") {
    // The one-shop closure of the combined pattern embeds in the closure of
    // its two halves, which equals the closure of either composition. Only
    // the inclusion is asserted; whether it is strict varies by domain size.
    for (int n = 2; n <= 3; ++n)
        for (int b = 0; b < n; ++b)
            for (int bp = 0; bp < n; ++bp) {
                if (b == bp) continue;
                const Dsm fe = Dsm::closure(n, {Shop::forall_exists_at(n, b, bp)});
                const Dsm both =
                    Dsm::closure(n, {Shop::forall_at(n, b), Shop::exists_at(n, bp)});
                const Dsm comp1 = Dsm::closure(
                    n, {compose(Shop::forall_at(n, b), Shop::exists_at(n, bp))});
                const Dsm comp2 = Dsm::closure(
                    n, {compose(Shop::exists_at(n, bp), Shop::forall_at(n, b))});
                CHECK(subset(fe, both));
                CHECK(both == comp1);
                CHECK(both == comp2);
                if (fe.size() != both.size())
                    MESSAGE("strict inclusion at n=", n, " b=", b, " b'=", bp);
            }

    SUBCASE("the coincident pattern generates everything") {
        CHECK(Dsm::closure(2, {Shop::forall_exists_at(2, 0, 0)}).size() == 7);
        CHECK(Dsm::closure(3, {Shop::forall_exists_at(3, 1, 1)}).size() == 265);
    }
}

TEST_CASE("DOT export") {
    const DsmLattice lattice = enumerate_dsms(2);
    std::map<int, std::string> labels{{0, "bottom"}};
    const std::string dot = export_dot(lattice, labels);
    CHECK(dot.find("digraph dsm_lattice {") == 0);
    CHECK(dot.find("n0 [label=\"<(0|1)>\\nbottom\"];") != std::string::npos);
    CHECK(dot.find("n0 -> n1;") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') >= 6);

    SUBCASE("byte-identical across runs") {
        CHECK(export_dot(lattice, labels) == dot);
        CHECK(export_dot(enumerate_dsms(2), labels) == dot);
    }
    SUBCASE("one node, no edges") {
        const std::string tiny = export_dot(enumerate_dsms(1));
        CHECK(tiny.find("n0") != std::string::npos);
        CHECK(tiny.find("->") == std::string::npos);
    }
}
