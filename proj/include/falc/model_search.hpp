#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "falc/axioms.hpp"
#include "falc/interpretation.hpp"
#include "falc/semantics.hpp"

namespace falc {

/// Bounds of the brute-force search: domain sizes 1..max_size, membership
/// degrees drawn from the grid {k/d : d in denominators, 0 <= k <= d}.
/// The grid always contains 0 and 1. With crisp_roles, role entries range
/// over {0, 1} while concept entries keep the full grid.
struct SearchBounds {
    std::size_t max_size = 1;
    std::vector<unsigned long> denominators{1, 2};
    std::optional<unsigned long long> node_budget;
    bool crisp_roles = false;
};

struct SearchStats {
    unsigned long long enumerated = 0;  // leaf candidates visited
    unsigned long long pruned = 0;      // candidates removed by propagation
    double elapsed_seconds = 0.0;
};

enum class SearchStatus { Sat, UnsatWithinBounds, BudgetExhausted };

/// A Sat outcome carries a model that has been re-verified through
/// check_kb before being returned. UnsatWithinBounds is exactly what it
/// says: a claim about the searched sizes and grid, nothing beyond them.
struct SearchOutcome {
    SearchStatus status = SearchStatus::UnsatWithinBounds;
    std::optional<FiniteInterpretation> model;
    SearchStats stats;
    std::string note;
};

using SearchProgress =
    std::function<void(std::size_t domain_size, const SearchStats&)>;

/// Exhaustive enumeration in deterministic lexicographic order (individual
/// assignments, then concept maps, then role maps; names sorted, grid
/// ascending), returning the first verified model. Sound pruning only:
/// assertion axioms on atomic concepts and role assertions restrict the
/// allowed grid cells before enumeration; GCIs are evaluated, never
/// propagated.
SearchOutcome sat_search(const KnowledgeBase& kb, Family f,
                         const SearchBounds& bounds,
                         const SearchProgress& progress = {});

struct Refutation {
    bool satisfied = false;
    std::optional<AxiomCheck> first_violation;
    SatisfactionReport report;
};

/// Diagnoses a candidate interpretation against a KB: the first violated
/// axiom with achieved vs required values, or a confirmation.
Refutation refute_candidate(const KnowledgeBase& kb, Family f,
                            const FiniteInterpretation& interp);

/// The sorted degree grid for a denominator set.
std::vector<Degree> degree_grid(const std::vector<unsigned long>& denominators);

}  // namespace falc
