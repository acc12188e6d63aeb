#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pefo/dsm.hpp"
#include "pefo/fixtures.hpp"
#include "pefo/random.hpp"
#include "pefo/shape.hpp"
#include "pefo/shop.hpp"
#include "test_support.hpp"

using namespace pefo;

TEST_CASE("shop construction and notation") {
    CHECK(Shop::identity(2).to_string() == "(0|1)");
    CHECK(Shop::identity(3).to_string() == "(0|1|2)");
    CHECK(Shop::parse("(01|1|12)").to_string() == "(01|1|12)");
    CHECK(Shop::parse("(10|1|21)") == Shop::parse("(01|1|12)")); // digit order is free

    CHECK_THROWS_AS(Shop::parse("(0|)"), ParseError);
    CHECK_THROWS_AS(Shop::parse("(0|0)"), ParseError);  // not surjective
    CHECK_THROWS_AS(Shop::parse("(2|0)"), ParseError);  // element out of domain
    CHECK_THROWS_AS(Shop::parse("0|1"), ParseError);
    CHECK_THROWS_AS(Shop(2, {0b01, 0b00}), ValidationError); // empty image
    CHECK_THROWS_AS(Shop(2, {0b01, 0b01}), ValidationError); // misses element 1
}

TEST_CASE("special shop patterns") {
    CHECK(Shop::forall_at(3, 0).to_string() == "(012|1|2)");
    CHECK(Shop::exists_at(3, 0).to_string() == "(0|01|02)");
    CHECK(Shop::forall_exists_at(3, 0, 1).to_string() == "(012|1|1)");
    CHECK(Shop::forall_at(2, 0) == Shop::parse("(01|1)"));
    CHECK(Shop::full(2).to_string() == "(01|01)");
}

TEST_CASE("composition") {
    const Shop f = Shop::parse("(12|0|0)");
    CHECK(compose(f, f).to_string() == "(0|12|12)");

    const Shop ae = Shop::parse("(01|1)"); // both a forall and an exists pattern on two elements
    CHECK(compose(ae, ae) == ae);

    const Shop id3 = Shop::identity(3);
    CHECK(compose(f, id3) == f);
    CHECK(compose(id3, f) == f);

    CHECK_THROWS_AS(compose(Shop::identity(2), id3), ValidationError);

    SUBCASE("power") {
        CHECK(power(f, 1) == f);
        CHECK(power(f, 2) == compose(f, f));
        CHECK(power(f, 3) == compose(f, compose(f, f)));
        CHECK_THROWS_AS(power(f, 0), ValidationError);
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(Shop::parse("(01|1|12)")).to_string() == "(0|012|2)");
    CHECK(inverse(Shop::identity(4)) == Shop::identity(4));

    SUBCASE("named identities") {
        for (int n = 2; n <= 4; ++n)
            for (int b = 0; b < n; ++b) {
                CHECK(inverse(Shop::exists_at(n, b)) == Shop::forall_at(n, b));
                CHECK(inverse(Shop::forall_at(n, b)) == Shop::exists_at(n, b));
                for (int bp = 0; bp < n; ++bp)
                    if (b != bp)
                        CHECK(inverse(Shop::forall_exists_at(n, b, bp))
                              == Shop::forall_exists_at(n, bp, b));
            }
    }
}

TEST_CASE("subshops") {
    CHECK(is_subshop(Shop::identity(2), Shop::full(2)));
    CHECK(!is_subshop(Shop::parse("(01|1)"), Shop::parse("(0|01)")));
    CHECK(is_subshop(Shop::parse("(01|1)"), Shop::parse("(01|1)")));

    const auto subs_full = surjective_subshops(Shop::full(2));
    CHECK(subs_full.size() == 7);
    const auto subs = surjective_subshops(Shop::parse("(0|01)"));
    REQUIRE(subs.size() == 2);
    CHECK(subs[0] == Shop::identity(2));
    CHECK(subs[1] == Shop::parse("(0|01)"));
    CHECK(surjective_subshops(Shop::identity(3))
          == std::vector<Shop>{Shop::identity(3)});
}

TEST_CASE("enumeration") {
    CHECK(enumerate_shops(1).size() == 1);
    CHECK(enumerate_shops(2).size() == 7);
    CHECK(enumerate_shops(3).size() == 265);
    CHECK(count_shops(1) == 1);
    CHECK(count_shops(2) == 7);
    CHECK(count_shops(3) == 265);
    CHECK(count_shops(4) == 41503);
    CHECK_THROWS_AS(enumerate_shops(5), CapError);
    CHECK(enumerate_shops(2).front() == Shop::identity(2)); // canonical order

    SUBCASE("order is lexicographic on image masks") {
        const auto shops = enumerate_shops(2);
        for (std::size_t i = 1; i < shops.size(); ++i) CHECK(shops[i - 1] < shops[i]);
    }
}

TEST_CASE("preservation checking") {
    const Structure k3 = fixture("clique", {3});
    CHECK(is_she(Shop::identity(3), k3));
    CHECK(is_she(Shop::parse("(1|2|0)"), k3));
    CHECK(!is_she(Shop::parse("(01|1|12)"), k3)); // E(0,1) would force E(1,1)

    const Structure k2k1 = fixture("k2_plus_k1", {});
    CHECK(is_she(Shop::parse("(1|0|012)"), k2k1));

    CHECK(is_she(Shop::parse("(01|1)"), pefo::testing::u_structure()));
    CHECK(!is_she(Shop::parse("(1|01)"), pefo::testing::u_structure()));

    SUBCASE("identity preserves everything") {
        Rng rng(11);
        for (int i = 0; i < 20; ++i) {
            const Structure b = random_binary_structure(rng, 4);
            CHECK(is_she(Shop::identity(b.domain_size()), b));
        }
    }
}

TEST_CASE("monoids of the stock structures") {
    SUBCASE("the 3-clique admits exactly the six permutations") {
        const Dsm d = she_monoid(fixture("clique", {3}));
        REQUIRE(d.size() == 6);
        for (const Shop& f : d.members()) CHECK(is_permutation_shop(f));
    }
    SUBCASE("the not-all-equal structure admits exactly the symmetric group") {
        const Dsm d = she_monoid(fixture("nae", {2}));
        REQUIRE(d.size() == 2);
        CHECK(d.contains(Shop::identity(2)));
        CHECK(d.contains(Shop::parse("(1|0)")));
    }
    SUBCASE("the 2-clique-plus-point monoid is one-generated") {
        const Dsm d = she_monoid(fixture("k2_plus_k1", {}));
        CHECK(d == Dsm::closure(3, {Shop::parse("(1|0|012)")}));
        CHECK(d.size() == 8);
    }
    SUBCASE("a single element leaves only the identity") {
        const Dsm d = she_monoid(fixture("clique", {1}));
        CHECK(d.size() == 1);
    }
}

TEST_CASE("algebra laws") {
    SUBCASE("associativity, exhaustive on two elements") {
        const auto shops = enumerate_shops(2);
        for (const Shop& f : shops)
            for (const Shop& g : shops)
                for (const Shop& h : shops)
                    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    }
    SUBCASE("sampled laws on three elements") {
        const auto shops = enumerate_shops(3);
        Rng rng(42);
        for (int i = 0; i < 1000; ++i) {
            const Shop& f = shops[static_cast<std::size_t>(rng.below(265))];
            const Shop& g = shops[static_cast<std::size_t>(rng.below(265))];
            const Shop& h = shops[static_cast<std::size_t>(rng.below(265))];
            CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
            CHECK(compose(f, Shop::identity(3)) == f);
            CHECK(compose(Shop::identity(3), f) == f);
            CHECK(inverse(inverse(f)) == f);
            CHECK(inverse(compose(g, f)) == compose(inverse(f), inverse(g)));
        }
    }
}

TEST_CASE("full-image witnesses survive powers") {
    const auto shops = enumerate_shops(3);
    for (const Shop& f : shops) {
        const ShopShape s = detect_shape(f);
        for (int b : s.a_witnesses)
            for (int r = 1; r <= 6; ++r) CHECK(power(f, r).image(b) == f.full_mask());
        for (int b : s.e_witnesses)
            for (int r = 1; r <= 6; ++r) {
                const Shop p = power(f, r);
                for (int x = 0; x < 3; ++x) CHECK(p.maps(x, b));
            }
    }
}

TEST_CASE("composing A- and E-shops yields both witnesses") {
    // Over every preserving pair of the stock structures, both composition
    // orders report an A- and an E-witness, and some surjective sub-shop has
    // the full-image-plus-constant shape (the two marked elements may
    // coincide in degenerate cases).
    auto has_ae_subshop = [](const Shop& c) {
        const ShopShape s = detect_shape(c);
        for (int a : s.a_witnesses)
            for (int e = 0; e < c.domain_size(); ++e) {
                if (!c.maps(a, e)) continue;
                bool fits = true;
                for (int x = 0; x < c.domain_size() && fits; ++x)
                    if (x != a) fits = c.maps(x, e);
                if (fits) return true;
            }
        return false;
    };

    std::vector<Structure> structures{fixture("k2_plus_k1", {}),
                                      complement_digraph(fixture("k2_plus_k1", {})),
                                      pefo::testing::u_structure(),
                                      Structure(Signature({{"E", 2}}), 3, {{}})};
    for (const Structure& b : structures) {
        const Dsm d = she_monoid(b);
        std::vector<Shop> a_shops, e_shops;
        for (const Shop& f : d.members()) {
            const ShopShape s = detect_shape(f);
            if (s.is_a_shop()) a_shops.push_back(f);
            if (s.is_e_shop()) e_shops.push_back(f);
        }
        for (const Shop& fa : a_shops)
            for (const Shop& fe : e_shops)
                for (const Shop& c : {compose(fa, fe), compose(fe, fa)}) {
                    const ShopShape s = detect_shape(c);
                    CHECK(s.is_a_shop());
                    CHECK(s.is_e_shop());
                    CHECK(has_ae_subshop(c));
                    CHECK(is_she(c, b));
                }
    }
}
