#pragma once

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "falc/axioms.hpp"
#include "falc/interpretation.hpp"
#include "falc/operators.hpp"

namespace falc {

/// Raised when an axiom mentions an individual the interpretation does not
/// map.
class UnmappedIndividualError : public std::runtime_error {
public:
    explicit UnmappedIndividualError(const std::string& name)
        : std::runtime_error("individual not mapped by the interpretation: " +
                             name),
          individual(name) {}
    std::string individual;
};

/// Raised in strict mode when a concept or role name has no declared map.
class UnknownNameError : public std::runtime_error {
public:
    explicit UnknownNameError(const std::string& what)
        : std::runtime_error(what) {}
};

struct AxiomCheck {
    Axiom axiom;
    bool satisfied = false;
    Degree achieved;  // concept value, role value, or subsumption degree
    Degree required;
};

struct SatisfactionReport {
    std::vector<AxiomCheck> per_axiom;
    bool overall = true;
    std::vector<std::string> warnings;
};

struct QuantifierWitness {
    ConceptRef quantifier;
    std::size_t at;       // element where the quantifier was evaluated
    std::size_t witness;  // least element attaining the inf/sup
    Degree attained;
};

struct SubsumptionWitness {
    std::size_t element;
    Degree value;
};

/// Table-2 evaluation over a finite interpretation. Values of subconcepts
/// are memoized per (node, element) for the lifetime of the evaluator;
/// memoization is invisible in results. Undeclared concept/role names
/// evaluate as constant 0 and are reported once in `warnings()`, or raise
/// UnknownNameError in strict mode.
class Evaluator {
public:
    Evaluator(const FiniteInterpretation& interp, Family family,
              bool strict = false);

    Degree eval(const ConceptRef& c, std::size_t element);

    /// inf over the domain of C(x) => D(x).
    Degree subsumption(const ConceptRef& c, const ConceptRef& d);

    AxiomCheck check(const Axiom& ax);
    SatisfactionReport check_kb(const KnowledgeBase& kb);

    /// Witnesses for every universal/existential subconcept of c at every
    /// element it gets evaluated at, least-index tie-break. Finite domains
    /// always attain their inf/sup.
    std::vector<QuantifierWitness> witnesses(const ConceptRef& c,
                                             std::size_t element);
    SubsumptionWitness subsumption_witness(const ConceptRef& c,
                                           const ConceptRef& d);

    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    Degree eval_impl(const ConceptRef& c, std::size_t element);
    const Degree& concept_value(const std::string& name, std::size_t element);
    const Degree& role_value(const std::string& name, std::size_t from,
                             std::size_t to);
    void warn_unknown(const std::string& kind, const std::string& name);
    void collect_witnesses(const ConceptRef& c, std::size_t element,
                           std::vector<QuantifierWitness>& out,
                           std::set<std::pair<const ConceptNode*, std::size_t>>&
                               visited);

    const FiniteInterpretation& interp_;
    Family family_;
    bool strict_;
    std::vector<std::string> warnings_;
    std::set<std::string> warned_;

    struct KeyHash {
        std::size_t operator()(
            const std::pair<const ConceptNode*, std::size_t>& k) const {
            return std::hash<const ConceptNode*>{}(k.first) * 31 + k.second;
        }
    };
    std::unordered_map<std::pair<const ConceptNode*, std::size_t>, Degree,
                       KeyHash>
        memo_;
    // Memo keys are node addresses, so every evaluated tree must stay
    // alive as long as the memo does.
    std::vector<ConceptRef> retained_;
};

// Convenience entry points.
Degree eval_concept(const FiniteInterpretation& interp, Family f,
                    const ConceptRef& c, std::size_t element,
                    bool strict = false);
Degree subsumption_degree(const FiniteInterpretation& interp, Family f,
                          const ConceptRef& c, const ConceptRef& d);
AxiomCheck check_axiom(const FiniteInterpretation& interp, Family f,
                       const Axiom& ax);
SatisfactionReport check_kb(const FiniteInterpretation& interp, Family f,
                            const KnowledgeBase& kb, bool strict = false);

}  // namespace falc
