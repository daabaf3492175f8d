#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "falc/axioms.hpp"

namespace falc {

/// The "directly uses" relation of a TBox: A -> B when some axiom has the
/// atomic concept A alone on its left-hand side and B occurs on the right.
/// For an equivalence A == C only the stated direction contributes edges;
/// the expanded reverse half is skipped. Non-atomic left-hand sides
/// contribute nothing here (classification reports them as form
/// violations).
struct UsesGraph {
    std::map<std::string, std::set<std::string>> direct;

    /// Transitive closure from `name` (the "uses" relation).
    std::set<std::string> uses_set(const std::string& name) const;
    bool uses(const std::string& a, const std::string& b) const;

    /// A concrete name sequence A, ..., A witnessing A uses A, empty when
    /// there is none.
    std::vector<std::string> cycle_through(const std::string& name) const;
};

UsesGraph uses_graph(const std::vector<Axiom>& tbox);

enum class ViolationKind { Form, MultiDefinition, Cycle, SubUnitDegree };

std::string_view violation_kind_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string detail;               // one-line description
    std::vector<std::size_t> axioms;  // offending tbox indices
    std::vector<std::string> cycle;   // Cycle only: A1, A2, ..., A1
};

struct TBoxClassification {
    bool acyclic = false;
    bool unfoldable = false;
    std::vector<Violation> violations;
};

/// Checks the three acyclicity constraints (axiom form, single definition
/// per name, no name uses itself) and, on top of them, the unfoldable
/// requirement that every inclusion degree equals 1. Every failure is
/// enumerated. An equivalence counts as a single definition of its
/// left-hand name.
TBoxClassification classify_tbox(const std::vector<Axiom>& tbox);

}  // namespace falc
