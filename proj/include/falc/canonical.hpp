#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "falc/concept.hpp"
#include "falc/degree.hpp"
#include "falc/interpretation.hpp"
#include "falc/log_dyadic.hpp"
#include "falc/operators.hpp"

namespace falc {

/// Raised when an evaluation is asked for something the value system of a
/// canonical model cannot represent (disjunction or the infinity node
/// under the Product model).
class UnsupportedEvaluation : public std::runtime_error {
public:
    explicit UnsupportedEvaluation(const std::string& what)
        : std::runtime_error(what) {}
};

/// A node of the Lukasiewicz canonical model: a positive natural index or
/// the distinguished infinity node.
struct LukNode {
    bool at_infinity = false;
    unsigned long index = 1;  // meaningful when !at_infinity; >= 1

    static LukNode nat(unsigned long i) { return {false, i}; }
    static LukNode infinity() { return {true, 0}; }
};

/// The two infinite witnessed models of the no-finite-model knowledge
/// base, represented parametrically: node space 1,2,3,... (plus infinity
/// for Lukasiewicz), the crisp functional successor role R, the atomic
/// concept A with closed-form valuation
///
///   Lukasiewicz  A(i) = (2^i - 1) / 2^i,  A(infinity) = 1
///   Product      A(i) = 2^(-1 / 2^(i-1))
///
/// and the individual a at node 1. Quantifiers evaluate through the unique
/// successor, so no infinite sup/inf is ever approximated: off-successor
/// pairs contribute exactly 1 to every inf and 0 to every sup.
class CanonicalModel {
public:
    explicit CanonicalModel(Family family);

    Family family() const { return family_; }

    static constexpr const char* kAtom = "A";
    static constexpr const char* kRole = "R";
    static constexpr const char* kIndividual = "a";

    /// Closed-form valuation of A.
    Degree luk_value(LukNode node) const;
    LogDyadic product_value(unsigned long node) const;

    /// Exact evaluation of an arbitrary concept at a node. The Product
    /// model rejects disjunction (its value system is not closed under the
    /// Product t-conorm) and has no infinity node.
    Degree eval_luk(const ConceptRef& c, LukNode node) const;
    LogDyadic eval_product(const ConceptRef& c, unsigned long node) const;

    /// Diagnostic knob: override A at chosen finite nodes to watch the
    /// recurrence identities fail (Lukasiewicz model only).
    void override_luk_value(unsigned long node, Degree value);

    /// Exports the first `depth` nodes as a finite interpretation for
    /// inspection (Lukasiewicz only: the Product valuation is irrational).
    /// The truncation necessarily breaks the successor axiom at the last
    /// node; `caveat` receives that warning.
    FiniteInterpretation export_luk_prefix(unsigned long depth,
                                           std::string* caveat = nullptr) const;

private:
    Family family_;
    std::map<unsigned long, Degree> luk_overrides_;
};

/// The degree sequence every witnessed model of the counterexample KB is
/// forced to realize: 1/2, then strictly increasing below 1.
/// Lukasiewicz values follow a(k+1) = (a(k) + 1) / 2 from a(1) = 1/2;
/// Product exponents halve from -1.
std::vector<Degree> forced_sequence_luk(std::size_t n);
std::vector<LogDyadic> forced_sequence_product(std::size_t n);

enum class LukTailClass { Cond1LimitZero, Cond2LimitOne };
enum class ProductTailClass { IdenticallyZero, PositiveNondecreasingSupOne };

std::string_view tail_class_name(LukTailClass c);
std::string_view tail_class_name(ProductTailClass c);

/// Structural classification of a concept's behavior along the model's
/// node sequence. Lukasiewicz concepts are first rewritten to the
/// {not, and, forall} basis; every concept lands in exactly one class.
LukTailClass tail_classify_luk(const ConceptRef& c);
ProductTailClass tail_classify_product(const ConceptRef& c);

struct PrefixIdentity {
    std::string node;   // "1", "2", ..., "inf"
    std::string axiom;  // which axiom's identity
    std::string lhs, rhs;
    bool holds = false;
};

struct PrefixReport {
    unsigned long depth = 0;
    bool all_pass = true;
    std::vector<PrefixIdentity> checks;
};

/// Checks the defining identities of the counterexample KB at every node
/// i <= depth (plus infinity for Lukasiewicz), exactly: A(1) = 1/2, every
/// node has a degree-1 successor, the value/existential restriction of A
/// coincide, and A(i) equals the squared (t-norm) value of A(i+1).
PrefixReport verify_k2_prefix(const CanonicalModel& model, unsigned long depth);

struct TailConsistency {
    bool consistent = false;
    std::string tail_class;
    std::optional<unsigned long> crossover;  // first node of the settled tail
    std::string detail;
};

/// Confronts tail_classify with actual evaluation at nodes 1..depth:
/// limit-one classes must stay >= 1 - 1/tolerance_denominator from some
/// node on, limit-zero classes must stay <= 1/tolerance_denominator (or be
/// identically zero), and the Product positive class must also be
/// nondecreasing.
TailConsistency classify_vs_prefix(const CanonicalModel& model,
                                   const ConceptRef& c, unsigned long depth,
                                   unsigned long tolerance_denominator);

}  // namespace falc
