#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "falc/axioms.hpp"
#include "falc/interpretation.hpp"
#include "falc/operators.hpp"

namespace falc {

class TransformError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedFamilyError : public TransformError {
public:
    using TransformError::TransformError;
};

/// Session-local fresh atomic names: primes appended to a base name
/// ("A" -> A', A'2, A'3, ...), checked against the signature and against
/// everything generated earlier in the session. The parser rejects primed
/// names in user input, so user atoms cannot collide with generated ones.
class FreshNames {
public:
    explicit FreshNames(const Signature& sig);
    std::string fresh(const std::string& base);

private:
    std::set<std::string> used_;
};

/// The one-variable sub-unit-degree absorber for the Lukasiewicz family:
/// for alpha = p/q in lowest terms, the concept
///     (p-fold and of A') and not (q-fold and of A')
/// has Lukasiewicz value max(0, max(0, p*x - (p-1)) - max(0, q*x - (q-1)))
/// at A' = x, which stays within [0, 1-alpha] and attains 1-alpha at
/// x = (q-1)/q.
struct GadgetSpec {
    Degree alpha;
    std::string atom;
    ConceptRef gadget;
    Degree witness_input;  // (q-1)/q
    Degree bound;          // 1 - alpha
};

GadgetSpec synthesize_gadget(const Degree& alpha, std::string atom_name = "A'");

struct GadgetReport {
    bool pass = false;
    Degree max_value;
    Degree attained_at;
    std::optional<Degree> counterexample;
    unsigned long points_checked = 0;
};

/// Evaluates the gadget at every k/(sweep_n * q), at both kink inputs
/// (p-1)/p and (q-1)/q, and at the endpoints, asserting the [0, 1-alpha]
/// bound everywhere and equality at the witness input. The value is
/// piecewise linear and every breakpoint is among the checked inputs, so
/// the scan is a complete proof of the bound, not a sample. Requires
/// sweep_n >= 1.
GadgetReport verify_gadget(const GadgetSpec& g, unsigned long sweep_n);

struct TransformStep {
    enum class Kind {
        DropVacuous,       // degree-0 inclusion removed
        Gadgetize,         // sub-unit inclusion absorbed into a degree-1 one
        EncodeTnorm,       // C sub D >= 1 becomes C == A and D
        EncodeMin,         // C sub D >= 1 becomes C == min{A, D}
        ExpandDefinition,  // defined names substituted into a definition
        SubstituteAbox,    // defined names substituted into an assertion
        DropDefinition     // definition eliminated after substitution
    };
    Kind kind;
    Axiom before;
    std::vector<Axiom> after;
    std::vector<std::string> fresh_names;
    std::optional<Degree> witness_value;  // Gadgetize only
};

struct TransformTrace {
    std::vector<TransformStep> steps;
    std::size_t axioms_before = 0, axioms_after = 0;
    std::size_t nodes_before = 0, nodes_after = 0;
    /// Unfolding only: every defined name with its fully substituted
    /// definition (no defined names remain on the right-hand sides).
    std::vector<std::pair<std::string, ConceptRef>> final_definitions;
};

std::string step_kind_name(TransformStep::Kind k);

/// One rewrite per line: kind, axiom before, axiom(s) after, fresh names.
std::string serialize_trace(const TransformTrace& trace);

/// Mechanically re-applies a trace to its input; reproduces the output of
/// the transformation that recorded it.
KnowledgeBase replay_trace(const KnowledgeBase& input,
                           const TransformTrace& trace);

/// Lukasiewicz only: every sub-unit inclusion degree is absorbed by a
/// fresh gadget atom, so the output TBox is unfoldable whenever the input
/// was acyclic. Degree-0 inclusions are dropped as vacuous. The ABox is
/// untouched.
std::pair<KnowledgeBase, TransformTrace> acyclic_to_unfoldable(
    const KnowledgeBase& kb, Family family);

enum class GciEncoding { Tnorm, Min };

/// Replaces the degree-1 inclusion kb.tbox[tbox_index] by the equivalence
/// C == A and D with a fresh atom (t-norm form). Works for the families
/// with a residuated implication; under Zadeh's Kleene-Dienes implication
/// degree-1 equivalences at fractional values are unsatisfiable, so the
/// encoding would not preserve satisfiability and is rejected.
KnowledgeBase encode_gci_tnorm(const KnowledgeBase& kb, std::size_t tbox_index,
                               Family family, FreshNames& fresh,
                               TransformStep* step = nullptr);

/// Same, with C == min{A, D}: A and D for Goedel (its conjunction is min),
/// A and (not A or D) for Lukasiewicz. Rejected for Product (min is not
/// expressible without an implication constructor) and Zadeh (as above).
KnowledgeBase encode_gci_min(const KnowledgeBase& kb, std::size_t tbox_index,
                             Family family, FreshNames& fresh,
                             TransformStep* step = nullptr);

/// Eliminates an unfoldable TBox: every degree-1 inclusion becomes a
/// definition via the chosen encoding, definitions are expanded
/// leaves-first so each applies exactly once, and the fully substituted
/// definitions replace their names throughout the ABox. Output has an
/// empty TBox. Expansion can grow the KB exponentially on definition
/// chains; that is inherent to the elimination.
std::pair<KnowledgeBase, TransformTrace> unfold_to_abox(const KnowledgeBase& kb,
                                                        GciEncoding encoding,
                                                        Family family);

/// Extends a model of the transformation input to one of its output by
/// replaying the trace: gadget atoms take the constant witness input,
/// t-norm-encoding atoms take implication(D(x), C(x)), min-encoding atoms
/// take C(x). Substitution steps change nothing.
FiniteInterpretation extend_model_for_trace(const TransformTrace& trace,
                                            FiniteInterpretation model,
                                            Family family);

/// The reverse direction for unfolding: given a model of the unfolded
/// ABox, assigns every defined name the value of its fully substituted
/// definition, which yields a model of the unfolding input.
FiniteInterpretation redefine_for_unfold(const TransformTrace& trace,
                                         FiniteInterpretation astar_model,
                                         Family family);

}  // namespace falc
