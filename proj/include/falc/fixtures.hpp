#pragma once

#include "falc/axioms.hpp"

namespace falc {

/// Sugar-level axioms of the two bundled example knowledge bases.
/// kb1: a small assertional example with one graded inclusion.
/// kb2: the knowledge base that is witnessed-satisfiable but has no finite
/// model under the Lukasiewicz and Product families.
std::vector<RawAxiom> k1_raw();
std::vector<RawAxiom> k2_raw();

KnowledgeBase k1();
KnowledgeBase k2();

}  // namespace falc
