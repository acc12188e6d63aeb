#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pefo/evaluate.hpp"
#include "pefo/fixtures.hpp"
#include "pefo/formula_parser.hpp"
#include "pefo/qe.hpp"
#include "pefo/random.hpp"
#include "test_support.hpp"

using namespace pefo;
using pefo::testing::u_structure;

TEST_CASE("substitution reductions") {
    SUBCASE("universal substitution") {
        const PrenexFormula p = reduce_forall(prenex(parse_formula("forall u exists v E(u,v)")), 0);
        REQUIRE(p.prefix.size() == 1);
        CHECK(p.prefix[0].quantifier == Quantifier::exists);
        CHECK(to_string(p.matrix) == "E(@0,v)");

        const PrenexFormula untouched = reduce_forall(prenex(parse_formula("exists v E(v,v)")), 0);
        CHECK(untouched.prefix.size() == 1);
        CHECK(to_string(untouched.matrix) == "E(v,v)");
    }
    SUBCASE("existential substitution") {
        const PrenexFormula p = reduce_exists(prenex(parse_formula("exists u exists v E(u,v)")), 0);
        CHECK(p.prefix.empty());
        CHECK(to_string(p.matrix) == "E(@0,@0)");

        const PrenexFormula untouched = reduce_exists(prenex(parse_formula("forall v E(v,v)")), 1);
        CHECK(untouched.prefix.size() == 1);
    }
    SUBCASE("combined substitution eliminates the whole prefix") {
        const PrenexFormula p =
            reduce_forall_exists(prenex(parse_formula("forall u exists v E(u,v)")), 0, 1);
        CHECK(p.prefix.empty());
        CHECK(to_string(p.matrix) == "E(@0,@1)");

        const PrenexFormula q =
            reduce_forall_exists(prenex(parse_formula("exists v forall u U(u)")), 0, 1);
        CHECK(to_string(q.matrix) == "U(@0)");
    }
}

TEST_CASE("A- and E-reductions") {
    SUBCASE("universals become the full-image element, existentials restrict") {
        const Shop g = Shop::parse("(012|1|2)");
        const PrenexFormula p = reduce_a(prenex(parse_formula("forall u exists v E(u,v)")), g);
        REQUIRE(p.prefix.size() == 1);
        CHECK(p.prefix[0] == PrefixEntry{Quantifier::exists, "v", std::vector<int>{1, 2}});
        CHECK(to_string(p.matrix) == "E(@0,v)");
        CHECK(p.to_string() == "exists v in {1,2} E(@0,v)");
    }
    SUBCASE("an all-existential prefix only gains restrictions") {
        const Shop g = Shop::parse("(012|1|2)");
        const PrenexFormula p = reduce_a(prenex(parse_formula("exists u exists v E(u,v)")), g);
        CHECK(p.prefix.size() == 2);
        for (const PrefixEntry& e : p.prefix) CHECK(e.restriction == std::vector<int>{1, 2});
        CHECK(to_string(p.matrix) == "E(u,v)");
    }
    SUBCASE("the dual reduction") {
        const Shop g = Shop::parse("(0|01|02)");
        const PrenexFormula p = reduce_e(prenex(parse_formula("exists v forall u E(u,v)")), g);
        REQUIRE(p.prefix.size() == 1);
        CHECK(p.prefix[0].quantifier == Quantifier::forall);
        CHECK(p.prefix[0].restriction == std::vector<int>{0, 1, 2});
        CHECK(to_string(p.matrix) == "E(u,@0)");
    }
    SUBCASE("form checks guard the inputs") {
        CHECK_THROWS_AS(reduce_a(prenex(parse_formula("forall u E(u,u)")), Shop::parse("(012|2|1)")),
                        ValidationError);
        CHECK_THROWS_AS(reduce_e(prenex(parse_formula("forall u E(u,u)")), Shop::parse("(012|1|2)")),
                        ValidationError);
    }
}

TEST_CASE("engine selection") {
    SUBCASE("a permutation group leaves only brute force") {
        CHECK(select_engine(she_monoid(fixture("clique", {3}))).kind == Engine::Kind::brute);
        CHECK(select_engine(she_monoid(fixture("nae", {2}))).kind == Engine::Kind::brute);
    }
    SUBCASE("an A-shop alone selects the A-reduction") {
        const Engine e = select_engine(she_monoid(fixture("k2_plus_k1", {})));
        CHECK(e.kind == Engine::Kind::a_reduce);
        REQUIRE(e.witness);
        CHECK(canonical_a_form(*e.witness));
    }
    SUBCASE("an E-shop alone selects the E-reduction") {
        const Engine e = select_engine(she_monoid(complement_digraph(fixture("k2_plus_k1", {}))));
        CHECK(e.kind == Engine::Kind::e_reduce);
    }
    SUBCASE("both shapes select the substitution engine") {
        const Engine e = select_engine(Dsm::closure(2, {Shop::parse("(01|1)")}));
        CHECK(e.kind == Engine::Kind::ae_logspace);
        CHECK(e.b == 0);
        CHECK(e.b_prime == 1);
    }
    SUBCASE("witnesses use least-index tie-breaking") {
        // The first member of the full two-element monoid that is an A-shop
        // (and an E-shop) is (0|01); composing it with itself keeps it, and
        // its least witnesses are 1 (full image) and 0 (common element).
        const Engine e = select_engine(Dsm::closure(2, {Shop::full(2)}));
        CHECK(e.kind == Engine::Kind::ae_logspace);
        CHECK(e.b == 1);
        CHECK(e.b_prime == 0);
        CHECK(e.witness == Shop::forall_exists_at(2, 1, 0));
    }
}

TEST_CASE("engine-driven evaluation") {
    const Structure k3 = fixture("clique", {3});
    CHECK(evaluate(k3, parse_formula("forall u forall v exists w (E(u,w) & E(v,w))")));
    CHECK(!evaluate(k3, parse_formula("forall u E(u,u)")));

    const Structure u = u_structure();
    CHECK(evaluate(u, parse_formula("forall u exists v U(v)")));
    CHECK(!evaluate(u, parse_formula("forall u U(u)")));

    const Structure nae2 = fixture("nae", {2});
    CHECK(!evaluate(nae2, parse_formula("forall u forall v forall w R_NAE(u,v,w)")));

    SUBCASE("explicit engines agree") {
        const FormulaPtr phi = parse_formula("forall u exists v E(u,v)");
        const Structure k2k1 = fixture("k2_plus_k1", {});
        const bool brute = evaluate(k2k1, phi, Engine::brute());
        const bool reduced = evaluate(k2k1, phi, select_engine(she_monoid(k2k1)));
        CHECK(brute == reduced);
        CHECK(!brute); // the isolated vertex has no outgoing edge
    }
    SUBCASE("substitution engines are usable directly when sound") {
        // the forall pattern at the marked element's complement preserves u_structure
        CHECK(evaluate(u, parse_formula("exists v U(v)"), Engine::exists_subst(2, 1)));
        CHECK(!evaluate(u, parse_formula("forall v U(v)"), Engine::forall_subst(2, 0)));
        CHECK(evaluate(u, parse_formula("forall u exists v U(v)"),
                       Engine::forall_exists_subst(2, 0, 1)));
    }
    SUBCASE("unsound pairings are refused") {
        CHECK_THROWS_WITH_AS(evaluate(k3, parse_formula("forall u E(u,u)"),
                                      Engine::forall_subst(3, 0)),
                             doctest::Contains("does not preserve"), ValidationError);
        CHECK_THROWS_AS(evaluate(u, parse_formula("exists v U(v)"), Engine::exists_subst(3, 1)),
                        ValidationError);
    }
    SUBCASE("non-sentences are refused") {
        CHECK_THROWS_AS(evaluate(k3, parse_formula("E(u,v)")), ValidationError);
    }
    SUBCASE("equality and constants fall back to brute force") {
        CHECK(evaluate(u, parse_formula("forall x exists y x = y")));
        CHECK(evaluate(u, parse_formula("U(@1)")));
        CHECK_THROWS_WITH_AS(evaluate(u, parse_formula("U(@1)"),
                                      Engine::forall_exists_subst(2, 0, 1)),
                             doctest::Contains("constant-free"), ValidationError);
    }
}

TEST_CASE("single-quantifier laws under the special patterns") {
    const Structure u = u_structure();
    // (01|1) preserves u_structure; it is the forall pattern at 0, the
    // exists pattern at 1 and the combined pattern at (0,1) all at once.
    Rng rng(31);
    FormulaGenOptions gen;
    gen.free_vars = {"x"};
    gen.max_quantifiers = 2;
    for (int i = 0; i < 80; ++i) {
        const FormulaPtr phi = random_formula(rng, u.signature(), 2, gen);
        const bool at0 = evaluate_bruteforce(u, substitute(phi, "x", Term::constant(0)));
        const bool at1 = evaluate_bruteforce(u, substitute(phi, "x", Term::constant(1)));
        const bool all =
            evaluate_bruteforce(u, Formula::quantified(Quantifier::forall, "x", phi));
        const bool some =
            evaluate_bruteforce(u, Formula::quantified(Quantifier::exists, "x", phi));
        CHECK(all == at0);  // forall x phi <=> phi(0)
        CHECK(some == at1); // exists x phi <=> phi(1)
        // the interpolation chain phi(0) => phi(c) => phi(1) for every c
        for (int c = 0; c < 2; ++c) {
            const bool at_c = evaluate_bruteforce(u, substitute(phi, "x", Term::constant(c)));
            CHECK((!at0 || at_c));
            CHECK((!at_c || at1));
        }
    }
}

TEST_CASE("restricted interpolation for canonical forms") {
    // On the 2-clique-plus-point the selected engine carries a canonical
    // A-shop; its tripartition drives the two interpolation implications.
    const Structure b = fixture("k2_plus_k1", {});
    const Engine engine = select_engine(she_monoid(b));
    REQUIRE(engine.kind == Engine::Kind::a_reduce);
    const auto form = canonical_a_form(*engine.witness);
    REQUIRE(form);

    Rng rng(57);
    FormulaGenOptions gen;
    gen.free_vars = {"x", "y"};
    gen.max_quantifiers = 2;
    std::vector<int> allowed = form->kept;
    allowed.push_back(form->b);
    for (int i = 0; i < 60; ++i) {
        const FormulaPtr phi_xy = random_formula(rng, b.signature(), 3, gen);
        for (int c : allowed) {
            // pin the side variable to an allowed element, leaving phi(x)
            const FormulaPtr phi = substitute(phi_xy, "y", Term::constant(c));

            const bool at_b =
                evaluate_bruteforce(b, substitute(phi, "x", Term::constant(form->b)));
            const bool all =
                evaluate_bruteforce(b, Formula::quantified(Quantifier::forall, "x", phi));
            CHECK((!at_b || all)); // phi(b) forces forall x phi

            const bool some =
                evaluate_bruteforce(b, Formula::quantified(Quantifier::exists, "x", phi));
            const bool some_kept = evaluate_bruteforce(
                b, Formula::quantified_in(Quantifier::exists, "x", form->kept, phi));
            CHECK((!some || some_kept)); // witnesses can be pulled into the kept part
        }
    }

    SUBCASE("the dual implications on the complement structure") {
        const Structure co = complement_digraph(b);
        const Engine dual = select_engine(she_monoid(co));
        REQUIRE(dual.kind == Engine::Kind::e_reduce);
        const auto e_form = canonical_e_form(*dual.witness);
        REQUIRE(e_form);

        Rng dual_rng(58);
        std::vector<int> dual_allowed = e_form->kept;
        dual_allowed.push_back(e_form->b);
        for (int i = 0; i < 60; ++i) {
            const FormulaPtr phi_xy = random_formula(dual_rng, co.signature(), 3, gen);
            for (int c : dual_allowed) {
                const FormulaPtr phi = substitute(phi_xy, "y", Term::constant(c));

                const bool all_kept = evaluate_bruteforce(
                    co, Formula::quantified_in(Quantifier::forall, "x", e_form->kept, phi));
                const bool all = evaluate_bruteforce(
                    co, Formula::quantified(Quantifier::forall, "x", phi));
                CHECK((!all_kept || all)); // the kept part carries the universal

                const bool some = evaluate_bruteforce(
                    co, Formula::quantified(Quantifier::exists, "x", phi));
                const bool at_b =
                    evaluate_bruteforce(co, substitute(phi, "x", Term::constant(e_form->b)));
                CHECK((!some || at_b)); // any witness collapses onto b
            }
        }
    }
}

TEST_CASE("engine evaluation matches brute force on random pairs") {
    Rng rng(1234);
    int reduced_runs = 0;
    for (int i = 0; i < 120; ++i) {
        const Structure b = random_binary_structure(rng, 3);
        const FormulaPtr sentence = random_formula(rng, b.signature(), b.domain_size());
        const Engine engine = select_engine(she_monoid(b));
        if (engine.kind != Engine::Kind::brute) ++reduced_runs;
        CHECK(evaluate(b, sentence, engine) == evaluate_bruteforce(b, sentence));
    }
    CHECK(reduced_runs > 20); // the sample must actually exercise reductions
}
