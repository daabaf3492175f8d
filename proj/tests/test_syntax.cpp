#include <doctest.h>

#include "falc/axioms.hpp"
#include "falc/fixtures.hpp"
#include "falc/tbox_analysis.hpp"
#include "helpers.hpp"

using namespace falc;

TEST_SUITE("concepts") {
    TEST_CASE("structural equality and sharing") {
        ConceptRef a = atomic("A");
        ConceptRef c1 = conj(a, neg(a));
        ConceptRef c2 = conj(atomic("A"), neg(atomic("A")));
        CHECK(equal(c1, c2));
        CHECK(!equal(c1, conj(neg(a), a)));
        CHECK(node_count(c1) == 4);
        CHECK(equal(top(), top()));
        CHECK(!equal(top(), bottom()));
    }

    TEST_CASE("rendering with minimal parentheses") {
        ConceptRef c =
            conj(neg(atomic("A")), forall("R", disj(atomic("B"), bottom())));
        CHECK(to_text(c) == "not A and forall R . (B or Bot)");
        CHECK(to_unicode(c) == "¬A ⊓ ∀R.(B ⊔ ⊥)");
        CHECK(to_text(nfold_and(atomic("A"), 3)) == "A and A and A");
        // left operand at the same level gets parentheses (right-nesting)
        CHECK(to_text(conj(conj(atomic("A"), atomic("A")), atomic("B"))) ==
              "(A and A) and B");
        CHECK(to_text(exists("R", neg(top()))) == "exists R . not Top");
    }

    TEST_CASE("substitution") {
        ConceptRef c = conj(atomic("A"), forall("R", atomic("A")));
        ConceptRef replaced = substitute(c, "A", exists("S", atomic("B")));
        CHECK(to_text(replaced) ==
              "exists S . B and forall R . exists S . B");
        // untouched trees are shared, not copied
        ConceptRef same = substitute(c, "Z", top());
        CHECK(same.get() == c.get());
    }

    TEST_CASE("rewriting to the not/and/forall basis") {
        ConceptRef c = disj(atomic("A"), exists("R", atomic("B")));
        ConceptRef rewritten = rewrite_to_not_and_forall(c);
        CHECK(!contains_or(rewritten));
        CHECK(to_text(rewritten) ==
              "not (not A and not not forall R . not B)");
    }

    TEST_CASE("name collection") {
        std::set<std::string> cs, rs;
        collect_names(conj(atomic("A"), exists("R", forall("S", atomic("B")))),
                      cs, rs);
        CHECK(cs == std::set<std::string>{"A", "B"});
        CHECK(rs == std::set<std::string>{"R", "S"});
    }
}

TEST_SUITE("shorthand expansion") {
    TEST_CASE("equality assertion expands to a pair") {
        auto kb = expand_shorthands(
            {RawAxiom::concept_eq("a", atomic("A"), Degree(1, 2))});
        REQUIRE(kb.abox.size() == 2);
        CHECK(kb.abox[0] ==
              Axiom::concept_geq("a", atomic("A"), Degree(1, 2)));
        CHECK(kb.abox[1] ==
              Axiom::concept_leq("a", atomic("A"), Degree(1, 2)));
        CHECK(kb.tbox.empty());
    }

    TEST_CASE("equivalence expands to a tagged degree-1 pair") {
        ConceptRef l = forall("R", atomic("A"));
        ConceptRef r = exists("R", atomic("A"));
        auto kb = expand_shorthands({RawAxiom::equivalence(l, r)});
        REQUIRE(kb.tbox.size() == 2);
        CHECK(equal(kb.tbox[0].lhs, l));
        CHECK(equal(kb.tbox[0].rhs, r));
        CHECK(kb.tbox[0].bound.is_one());
        REQUIRE(kb.tbox[0].equiv);
        REQUIRE(kb.tbox[1].equiv);
        CHECK(kb.tbox[0].equiv->primary);
        CHECK(!kb.tbox[1].equiv->primary);
        CHECK(kb.tbox[0].equiv->group == kb.tbox[1].equiv->group);
    }

    TEST_CASE("core axioms pass through unchanged") {
        std::vector<RawAxiom> raws = {
            RawAxiom::concept_geq("a", atomic("A"), Degree(1, 3)),
            RawAxiom::role_geq("a", "b", "R", Degree(2, 3)),
            RawAxiom::gci(atomic("A"), atomic("B"), Degree(1, 2)),
        };
        auto kb = expand_shorthands(raws);
        CHECK(kb.abox.size() == 2);
        CHECK(kb.tbox.size() == 1);
        CHECK(!kb.tbox[0].equiv);
    }

    TEST_CASE("idempotent on its own output") {
        testing::Rng rng(7);
        auto grid = testing::farey_grid(4);
        for (int iter = 0; iter < 50; ++iter) {
            std::vector<RawAxiom> raws;
            std::size_t k = 1 + rng.below(5);
            for (std::size_t i = 0; i < k; ++i) {
                ConceptRef c =
                    testing::random_concept(rng, {"A", "B"}, {"R"}, 2);
                switch (rng.below(4)) {
                    case 0:
                        raws.push_back(RawAxiom::concept_eq(
                            "a", c, testing::random_degree(rng, grid)));
                        break;
                    case 1:
                        raws.push_back(RawAxiom::equivalence(c, atomic("B")));
                        break;
                    case 2:
                        raws.push_back(RawAxiom::concept_leq(
                            "b", c, testing::random_degree(rng, grid)));
                        break;
                    default:
                        raws.push_back(RawAxiom::gci(
                            c, atomic("A"), testing::random_degree(rng, grid)));
                }
            }
            KnowledgeBase once = expand_shorthands(raws);
            std::vector<RawAxiom> again;
            for (const Axiom& ax : once.abox)
                again.push_back(RawAxiom::from_core(ax));
            for (const Axiom& ax : once.tbox)
                again.push_back(RawAxiom::from_core(ax));
            CHECK(expand_shorthands(again) == once);
        }
    }

    TEST_CASE("signature is exactly the occurring names") {
        Signature sig = signature_of(k1());
        CHECK(sig.concepts ==
              std::set<std::string>{"Hotel", "Inn", "YoungPerson"});
        CHECK(sig.roles == std::set<std::string>{"likes"});
        CHECK(sig.individuals == std::set<std::string>{"jim", "mary"});
    }
}

TEST_SUITE("tbox analysis") {
    TEST_CASE("uses graph from definitions") {
        auto kb = expand_shorthands({RawAxiom::equivalence(
            atomic("A"), conj(forall("R", atomic("B")), atomic("C")))});
        UsesGraph g = uses_graph(kb.tbox);
        CHECK(g.direct.at("A") == std::set<std::string>{"B", "C"});
        CHECK(g.uses("A", "B"));
        CHECK(!g.uses("B", "A"));  // the reverse half contributes no edges
    }

    TEST_CASE("the no-finite-model fixture has a self-use") {
        UsesGraph g = uses_graph(k2().tbox);
        CHECK(g.uses("A", "A"));
        CHECK(g.cycle_through("A") == std::vector<std::string>{"A", "A"});
    }

    TEST_CASE("empty TBox gives an empty graph") {
        CHECK(uses_graph({}).direct.empty());
    }

    TEST_CASE("classification of the fixtures") {
        TBoxClassification k2c = classify_tbox(k2().tbox);
        CHECK(!k2c.acyclic);
        CHECK(!k2c.unfoldable);
        bool has_top_form = false, has_cycle = false, has_equiv_form = false;
        for (const Violation& v : k2c.violations) {
            if (v.kind == ViolationKind::Form &&
                v.detail.find("Top") != std::string::npos)
                has_top_form = true;
            if (v.kind == ViolationKind::Form &&
                v.detail.find("equivalence") != std::string::npos)
                has_equiv_form = true;
            if (v.kind == ViolationKind::Cycle)
                has_cycle = v.cycle == std::vector<std::string>{"A", "A"};
        }
        CHECK(has_top_form);
        CHECK(has_equiv_form);
        CHECK(has_cycle);

        TBoxClassification k1c = classify_tbox(k1().tbox);
        CHECK(k1c.acyclic);
        CHECK(!k1c.unfoldable);
        REQUIRE(k1c.violations.size() == 1);
        CHECK(k1c.violations[0].kind == ViolationKind::SubUnitDegree);
    }

    TEST_CASE("acyclic unfoldable chain") {
        auto kb = expand_shorthands(
            {RawAxiom::equivalence(atomic("A"), atomic("B")),
             RawAxiom::equivalence(atomic("B"), exists("R", atomic("C")))});
        TBoxClassification cls = classify_tbox(kb.tbox);
        CHECK(cls.acyclic);
        CHECK(cls.unfoldable);
        CHECK(cls.violations.empty());
    }

    TEST_CASE("an equivalence counts as one definition occurrence") {
        auto kb = expand_shorthands(
            {RawAxiom::equivalence(atomic("A"), atomic("C")),
             RawAxiom::gci(atomic("A"), atomic("D"), Degree::one())});
        TBoxClassification cls = classify_tbox(kb.tbox);
        CHECK(!cls.acyclic);
        bool multi = false;
        for (const Violation& v : cls.violations)
            multi = multi || v.kind == ViolationKind::MultiDefinition;
        CHECK(multi);

        // a single equivalence alone is fine
        auto single = expand_shorthands(
            {RawAxiom::equivalence(atomic("A"), atomic("C"))});
        CHECK(classify_tbox(single.tbox).acyclic);
    }

    TEST_CASE("long cycles carry their path") {
        auto kb = expand_shorthands(
            {RawAxiom::equivalence(atomic("A"), exists("R", atomic("B"))),
             RawAxiom::equivalence(atomic("B"), conj(atomic("C"), top())),
             RawAxiom::equivalence(atomic("C"), forall("R", atomic("A")))});
        TBoxClassification cls = classify_tbox(kb.tbox);
        CHECK(!cls.acyclic);
        bool found = false;
        for (const Violation& v : cls.violations)
            if (v.kind == ViolationKind::Cycle && !v.cycle.empty() &&
                v.cycle.front() == "A")
                found = v.cycle ==
                        std::vector<std::string>{"A", "B", "C", "A"};
        CHECK(found);
    }

    TEST_CASE("cycle detection agrees with an independent DFS") {
        testing::Rng rng(11);
        std::vector<std::string> names = {"A", "B", "C", "D"};
        for (int iter = 0; iter < 200; ++iter) {
            std::vector<RawAxiom> raws;
            std::set<std::string> defined;
            for (const std::string& name : names) {
                if (!rng.chance(0.7)) continue;
                if (!defined.insert(name).second) continue;
                ConceptRef rhs = testing::random_concept(rng, names, {"R"}, 2);
                raws.push_back(rng.chance(0.5)
                                   ? RawAxiom::equivalence(atomic(name), rhs)
                                   : RawAxiom::gci(atomic(name), rhs,
                                                   Degree::one()));
            }
            auto kb = expand_shorthands(raws);
            UsesGraph g = uses_graph(kb.tbox);

            // independent DFS cycle detector over the direct edges
            std::map<std::string, int> state;
            bool dfs_cycle = false;
            auto dfs = [&](auto&& self, const std::string& at) -> void {
                state[at] = 1;
                auto it = g.direct.find(at);
                if (it != g.direct.end())
                    for (const std::string& next : it->second) {
                        if (state[next] == 1) dfs_cycle = true;
                        else if (state[next] == 0) self(self, next);
                    }
                state[at] = 2;
            };
            for (const std::string& name : names)
                if (state[name] == 0) dfs(dfs, name);

            bool classified_cycle = false;
            for (const Violation& v : classify_tbox(kb.tbox).violations)
                classified_cycle |= v.kind == ViolationKind::Cycle;
            CHECK(classified_cycle == dfs_cycle);
        }
    }
}

TEST_SUITE("fixtures") {
    TEST_CASE("the no-finite-model KB expands to seven core axioms") {
        KnowledgeBase kb = k2();
        CHECK(kb.abox.size() == 2);
        CHECK(kb.tbox.size() == 5);
        CHECK(kb.abox[0] == Axiom::concept_geq("a", atomic("A"), Degree(1, 2)));
        CHECK(kb.abox[1] == Axiom::concept_leq("a", atomic("A"), Degree(1, 2)));
        CHECK(!kb.tbox[0].equiv);  // the bare successor axiom
        CHECK(kb.tbox[0].bound.is_one());
    }

    TEST_CASE("the assertional fixture has two facts and one inclusion") {
        KnowledgeBase kb = k1();
        CHECK(kb.abox.size() == 2);
        CHECK(kb.tbox.size() == 1);
        CHECK(kb.tbox[0].bound == Degree(1, 2));
    }
}
