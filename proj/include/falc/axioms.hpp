#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "falc/concept.hpp"
#include "falc/degree.hpp"

namespace falc {

enum class AxiomKind { ConceptGeq, ConceptLeq, RoleGeq, GciGeq };

/// Marks a GCI that is one half of an expanded equivalence C == D.
/// `group` ties the two halves together; the primary half is C sub D.
struct EquivHalf {
    unsigned group = 0;
    bool primary = true;
    bool operator==(const EquivHalf&) const = default;
};

/// One core axiom. Which fields are meaningful depends on `kind`:
///   ConceptGeq / ConceptLeq   individual, lhs (the concept), bound
///   RoleGeq                   individual, individual2, role, bound
///   GciGeq                    lhs, rhs, bound, equiv
/// Role assertions only come in the >= form; there is no RoleLeq.
struct Axiom {
    AxiomKind kind;
    std::string individual;
    std::string individual2;
    std::string role;
    ConceptRef lhs;
    ConceptRef rhs;
    Degree bound;
    std::optional<EquivHalf> equiv;

    static Axiom concept_geq(std::string a, ConceptRef c, Degree d);
    static Axiom concept_leq(std::string a, ConceptRef c, Degree d);
    static Axiom role_geq(std::string a, std::string b, std::string r, Degree d);
    static Axiom gci(ConceptRef l, ConceptRef r, Degree d,
                     std::optional<EquivHalf> eq = std::nullopt);

    bool operator==(const Axiom& o) const;
};

/// Human-readable one-line rendering, ASCII or symbolic.
std::string axiom_text(const Axiom& ax, bool unicode = false);

/// Sugar-level axiom: the core forms plus the equality assertion
/// (a : C) = d and the concept equivalence C == D.
struct RawAxiom {
    enum class Kind { ConceptGeq, ConceptLeq, ConceptEq, RoleGeq, Gci, Equivalence };
    Kind kind;
    std::string individual;
    std::string individual2;
    std::string role;
    ConceptRef lhs;
    ConceptRef rhs;
    Degree bound;                     // unused for Equivalence
    std::optional<EquivHalf> equiv;   // carried through for Gci round-trips

    static RawAxiom concept_geq(std::string a, ConceptRef c, Degree d);
    static RawAxiom concept_leq(std::string a, ConceptRef c, Degree d);
    static RawAxiom concept_eq(std::string a, ConceptRef c, Degree d);
    static RawAxiom role_geq(std::string a, std::string b, std::string r, Degree d);
    static RawAxiom gci(ConceptRef l, ConceptRef r, Degree d);
    static RawAxiom equivalence(ConceptRef l, ConceptRef r);
    static RawAxiom from_core(const Axiom& ax);
};

struct KnowledgeBase {
    std::vector<Axiom> abox;  // ConceptGeq / ConceptLeq / RoleGeq only
    std::vector<Axiom> tbox;  // GciGeq only

    bool operator==(const KnowledgeBase& o) const = default;
};

/// Expands the sugar forms: (a:C) = d becomes the >= / <= pair, C == D
/// becomes the tagged pair of degree-1 GCIs, core forms pass through
/// unchanged. Idempotent on its own output (via RawAxiom::from_core).
KnowledgeBase expand_shorthands(const std::vector<RawAxiom>& raw);

struct Signature {
    std::set<std::string> concepts;
    std::set<std::string> roles;
    std::set<std::string> individuals;
};

/// Exactly the names syntactically occurring in the KB.
Signature signature_of(const KnowledgeBase& kb);

}  // namespace falc
