#pragma once

#include <memory>
#include <set>
#include <string>

namespace falc {

enum class ConceptKind { Top, Bottom, Atomic, And, Or, Not, Forall, Exists };

class ConceptNode;
using ConceptRef = std::shared_ptr<const ConceptNode>;

/// Immutable concept tree. Concept and role names live in disjoint
/// namespaces; the same string in concept and role position denotes two
/// different things. Equality is structural; trees share freely.
class ConceptNode {
public:
    ConceptKind kind;
    std::string name;  // Atomic: concept name; Forall/Exists: role name
    ConceptRef left;   // And/Or left operand; Not/Forall/Exists operand
    ConceptRef right;  // And/Or right operand
    std::size_t hash;  // structural, cached

    ConceptNode(ConceptKind k, std::string n, ConceptRef l, ConceptRef r);
};

ConceptRef top();
ConceptRef bottom();
ConceptRef atomic(std::string name);
ConceptRef conj(ConceptRef a, ConceptRef b);
ConceptRef disj(ConceptRef a, ConceptRef b);
ConceptRef neg(ConceptRef a);
ConceptRef forall(std::string role, ConceptRef a);
ConceptRef exists(std::string role, ConceptRef a);

/// Right-nested n-fold conjunction of c with itself (n >= 1).
ConceptRef nfold_and(const ConceptRef& c, unsigned n);

bool equal(const ConceptRef& a, const ConceptRef& b);
std::size_t node_count(const ConceptRef& c);
bool contains_or(const ConceptRef& c);

void collect_names(const ConceptRef& c, std::set<std::string>& concepts,
                   std::set<std::string>& roles);

/// Replaces every occurrence of the atomic concept `name` by `replacement`.
ConceptRef substitute(const ConceptRef& c, const std::string& name,
                      const ConceptRef& replacement);

/// Rewrites disjunction and existential restriction away using the
/// involutive-negation identities C or D = not(not C and not D) and
/// exists R.C = not forall R.not C. Value-preserving under Lukasiewicz
/// and Zadeh negation.
ConceptRef rewrite_to_not_and_forall(const ConceptRef& c);

/// ASCII rendering with minimal parentheses ("not A and forall R . B").
std::string to_text(const ConceptRef& c);
/// Symbolic rendering of the same shape ("¬A ⊓ ∀R.B").
std::string to_unicode(const ConceptRef& c);

}  // namespace falc
