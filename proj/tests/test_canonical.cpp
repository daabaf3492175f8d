#include <doctest.h>

#include "falc/canonical.hpp"
#include "falc/fixtures.hpp"
#include "falc/semantics.hpp"
#include "helpers.hpp"

using namespace falc;

namespace {

mpz_class pow2z(unsigned long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

}  // namespace

TEST_SUITE("forced sequences") {
    TEST_CASE("values climb by the halving recurrence") {
        auto seq = forced_sequence_luk(3);
        REQUIRE(seq.size() == 3);
        CHECK(seq[0] == Degree(1, 2));
        CHECK(seq[1] == Degree(3, 4));
        CHECK(seq[2] == Degree(7, 8));

        auto prod = forced_sequence_product(3);
        REQUIRE(prod.size() == 3);
        CHECK(prod[0] == LogDyadic::pow2(mpq_class(-1)));
        CHECK(prod[1] == LogDyadic::pow2(mpq_class(-1, 2)));
        CHECK(prod[2] == LogDyadic::pow2(mpq_class(-1, 4)));

        CHECK(forced_sequence_luk(1)[0] == Degree(1, 2));
        CHECK(forced_sequence_product(1)[0].as_rational() == Degree(1, 2));
    }

    TEST_CASE("closed forms, strict growth, and the canonical valuation") {
        CanonicalModel luk(Family::Lukasiewicz);
        CanonicalModel prod(Family::Product);
        auto lseq = forced_sequence_luk(64);
        auto pseq = forced_sequence_product(64);
        for (unsigned long k = 1; k <= 64; ++k) {
            mpz_class den = pow2z(k);
            CHECK(lseq[k - 1] == Degree(mpq_class(den - 1, den)));
            CHECK(pseq[k - 1] ==
                  LogDyadic::pow2(mpq_class(mpz_class(-1), pow2z(k - 1))));
            // the forced sequence is the canonical valuation
            CHECK(lseq[k - 1] == luk.luk_value(LukNode::nat(k)));
            CHECK(pseq[k - 1] == prod.product_value(k));
            CHECK(lseq[k - 1] < Degree::one());
            CHECK(pseq[k - 1] < LogDyadic::one());
            if (k > 1) {
                CHECK(lseq[k - 2] < lseq[k - 1]);
                CHECK(pseq[k - 2] < pseq[k - 1]);
            }
        }
    }
}

TEST_SUITE("canonical evaluation") {
    TEST_CASE("quantifiers shift along the successor") {
        CanonicalModel luk(Family::Lukasiewicz);
        ConceptRef a = atomic("A");
        CHECK(luk.eval_luk(forall("R", a), LukNode::nat(2)) == Degree(7, 8));
        CHECK(luk.eval_luk(exists("R", a), LukNode::nat(2)) == Degree(7, 8));
        CHECK(luk.eval_luk(conj(a, a), LukNode::nat(1)) == Degree::zero());
        CHECK(luk.eval_luk(a, LukNode::infinity()) == Degree::one());
        CHECK(luk.eval_luk(forall("R", a), LukNode::infinity()) ==
              Degree::one());

        CanonicalModel prod(Family::Product);
        ConceptRef ax4_rhs = conj(forall("R", a), forall("R", a));
        CHECK(prod.eval_product(ax4_rhs, 1) == prod.product_value(1));
        CHECK(prod.eval_product(exists("R", a), 3) == prod.product_value(4));
    }

    TEST_CASE("unknown names evaluate to constants") {
        CanonicalModel luk(Family::Lukasiewicz);
        CHECK(luk.eval_luk(atomic("B"), LukNode::nat(5)) == Degree::zero());
        CHECK(luk.eval_luk(forall("S", bottom()), LukNode::nat(5)) ==
              Degree::one());
        CHECK(luk.eval_luk(exists("S", top()), LukNode::nat(5)) ==
              Degree::zero());
        CanonicalModel prod(Family::Product);
        CHECK(prod.eval_product(forall("S", bottom()), 2).is_one());
        CHECK(prod.eval_product(exists("S", top()), 2).is_zero());
    }

    TEST_CASE("the Product model rejects disjunction and infinity") {
        CanonicalModel prod(Family::Product);
        CHECK_THROWS_AS(
            prod.eval_product(disj(atomic("A"), atomic("A")), 1),
            UnsupportedEvaluation);
        CHECK_THROWS_AS(prod.eval_product(atomic("A"), 0), std::domain_error);
        CHECK_THROWS_AS(prod.export_luk_prefix(4), UnsupportedEvaluation);
    }

    TEST_CASE("infinity values are crisp for or-free concepts") {
        testing::Rng rng(71);
        CanonicalModel luk(Family::Lukasiewicz);
        for (int iter = 0; iter < 100; ++iter) {
            ConceptRef c = testing::random_concept(rng, {"A"}, {"R"}, 4,
                                                   /*allow_or=*/false);
            Degree v = luk.eval_luk(c, LukNode::infinity());
            CHECK((v == Degree::zero() || v == Degree::one()));
            // the infinity value matches the tail class
            bool is_one = v == Degree::one();
            CHECK(is_one ==
                  (tail_classify_luk(c) == LukTailClass::Cond2LimitOne));
        }
    }
}

TEST_SUITE("prefix verification") {
    TEST_CASE("both canonical models pass at depth 200") {
        for (Family f : {Family::Lukasiewicz, Family::Product}) {
            CanonicalModel model(f);
            PrefixReport report = verify_k2_prefix(model, 200);
            CHECK(report.all_pass);
            for (const PrefixIdentity& chk : report.checks) CHECK(chk.holds);
        }
    }

    TEST_CASE("a perturbed valuation fails the recurrence identity") {
        CanonicalModel model(Family::Lukasiewicz);
        model.override_luk_value(5, Degree(9, 10));
        PrefixReport report = verify_k2_prefix(model, 8);
        CHECK(!report.all_pass);
        // first failure: at node 4, A(4) = 15/16 but A(5) tnorm A(5) = 4/5
        const PrefixIdentity* first = nullptr;
        for (const PrefixIdentity& chk : report.checks)
            if (!chk.holds) {
                first = &chk;
                break;
            }
        REQUIRE(first);
        CHECK(first->node == "4");
        CHECK(first->lhs == "15/16");
        CHECK(first->rhs == "4/5");
    }

    TEST_CASE("prefix export carries the truncation caveat") {
        CanonicalModel model(Family::Lukasiewicz);
        std::string caveat;
        FiniteInterpretation prefix = model.export_luk_prefix(5, &caveat);
        CHECK(prefix.size() == 5);
        CHECK(prefix.concept_value("A", 0) == Degree(1, 2));
        CHECK(prefix.concept_value("A", 4) == Degree(31, 32));
        CHECK(prefix.role_value("R", 2, 3) == Degree::one());
        CHECK(prefix.role_value("R", 4, 4) == Degree::zero());
        CHECK(caveat.find("no successor") != std::string::npos);
        // the truncated prefix is *not* a model: the last node breaks
        // the successor axiom
        CHECK(!check_kb(prefix, Family::Lukasiewicz, k2()).overall);
    }
}

TEST_SUITE("tail classification") {
    TEST_CASE("base cases") {
        CHECK(tail_classify_luk(atomic("A")) == LukTailClass::Cond2LimitOne);
        CHECK(tail_classify_luk(neg(atomic("A"))) ==
              LukTailClass::Cond1LimitZero);
        CHECK(tail_classify_luk(top()) == LukTailClass::Cond2LimitOne);
        CHECK(tail_classify_luk(bottom()) == LukTailClass::Cond1LimitZero);
        CHECK(tail_classify_product(atomic("A")) ==
              ProductTailClass::PositiveNondecreasingSupOne);
        CHECK(tail_classify_product(neg(atomic("A"))) ==
              ProductTailClass::IdenticallyZero);
        CHECK(tail_classify_product(neg(bottom())) ==
              ProductTailClass::PositiveNondecreasingSupOne);
    }

    TEST_CASE("connective cases") {
        ConceptRef a = atomic("A");
        CHECK(tail_classify_luk(conj(a, neg(a))) ==
              LukTailClass::Cond1LimitZero);
        CHECK(tail_classify_luk(disj(a, neg(a))) ==
              LukTailClass::Cond2LimitOne);
        CHECK(tail_classify_luk(forall("R", conj(a, a))) ==
              LukTailClass::Cond2LimitOne);
        CHECK(tail_classify_luk(exists("R", neg(a))) ==
              LukTailClass::Cond1LimitZero);
        CHECK(tail_classify_product(conj(a, exists("R", a))) ==
              ProductTailClass::PositiveNondecreasingSupOne);
        CHECK(tail_classify_product(disj(neg(a), a)) ==
              ProductTailClass::PositiveNondecreasingSupOne);
        CHECK(tail_classify_product(conj(a, neg(a))) ==
              ProductTailClass::IdenticallyZero);
    }

    TEST_CASE("classification is consistent with prefix evaluation") {
        testing::Rng rng(83);
        CanonicalModel luk(Family::Lukasiewicz);
        CanonicalModel prod(Family::Product);
        for (int iter = 0; iter < 60; ++iter) {
            ConceptRef c_luk = testing::random_concept(rng, {"A"}, {"R"}, 4);
            TailConsistency tc = classify_vs_prefix(luk, c_luk, 64, 16);
            CHECK(tc.consistent);

            ConceptRef c_prod = testing::random_concept(rng, {"A"}, {"R"}, 4,
                                                        /*allow_or=*/false);
            TailConsistency pc = classify_vs_prefix(prod, c_prod, 64, 16);
            CHECK(pc.consistent);
        }
    }

    TEST_CASE("documented crossover nodes") {
        CanonicalModel luk(Family::Lukasiewicz);
        ConceptRef a = atomic("A");
        // A tnorm A climbs above 15/16 from node 5 on
        TailConsistency tc = classify_vs_prefix(luk, conj(a, a), 64, 16);
        CHECK(tc.consistent);
        CHECK(tc.tail_class == "Cond2");
        CHECK(tc.crossover == 5);

        CanonicalModel prod(Family::Product);
        TailConsistency pc = classify_vs_prefix(prod, a, 64, 16);
        CHECK(pc.consistent);
        CHECK(pc.tail_class == "PositiveNondecreasingSupOne");

        TailConsistency bot_luk = classify_vs_prefix(luk, bottom(), 64, 16);
        CHECK(bot_luk.consistent);
        TailConsistency bot_prod = classify_vs_prefix(prod, bottom(), 64, 16);
        CHECK(bot_prod.consistent);
        CHECK(bot_prod.tail_class == "IdenticallyZero");
    }

    TEST_CASE("the Product value at node 64 has the expected exponent") {
        CanonicalModel prod(Family::Product);
        LogDyadic v = prod.eval_product(atomic("A"), 64);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, 63);
        CHECK(v == LogDyadic::pow2(mpq_class(mpz_class(-1), den)));
    }
}
