#include "falc/fixtures.hpp"

namespace falc {

std::vector<RawAxiom> k1_raw() {
    return {
        RawAxiom::concept_geq("jim", atomic("YoungPerson"), Degree(1, 5)),
        RawAxiom::role_geq("jim", "mary", "likes", Degree(4, 5)),
        RawAxiom::gci(atomic("Inn"), atomic("Hotel"), Degree(1, 2)),
    };
}

std::vector<RawAxiom> k2_raw() {
    ConceptRef a = atomic("A");
    ConceptRef all_a = forall("R", a);
    ConceptRef some_a = exists("R", a);
    return {
        RawAxiom::concept_eq("a", a, Degree(1, 2)),
        RawAxiom::gci(top(), exists("R", top()), Degree::one()),
        RawAxiom::equivalence(all_a, some_a),
        RawAxiom::equivalence(a, conj(all_a, all_a)),
    };
}

KnowledgeBase k1() { return expand_shorthands(k1_raw()); }

KnowledgeBase k2() { return expand_shorthands(k2_raw()); }

}  // namespace falc
