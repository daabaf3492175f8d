#pragma once

// Shared test utilities: degree grids, independent reference evaluation,
// and randomized generators. Everything here is deliberately written
// straight from the definitions, independent of the library's evaluation
// paths, so it can serve as an oracle for them.

#include <random>
#include <set>
#include <vector>

#include "falc/axioms.hpp"
#include "falc/degree.hpp"
#include "falc/interpretation.hpp"
#include "falc/operators.hpp"

namespace falc::testing {

/// All rationals in [0,1] with denominator <= max_den, ascending.
inline std::vector<Degree> farey_grid(long max_den) {
    std::set<Degree> s;
    for (long q = 1; q <= max_den; ++q)
        for (long p = 0; p <= q; ++p) s.insert(Degree(p, q));
    return {s.begin(), s.end()};
}

/// Direct transcription of the operator table on raw rationals, written
/// separately from the library implementation.
namespace table {

inline mpq_class clamp01(const mpq_class& v) {
    if (sgn(v) < 0) return 0;
    if (cmp(v, 1) > 0) return 1;
    return v;
}

inline mpq_class tnorm(Family f, const mpq_class& a, const mpq_class& b) {
    switch (f) {
        case Family::Zadeh:
        case Family::Goedel: return cmp(a, b) < 0 ? a : b;
        case Family::Lukasiewicz: return clamp01(a + b - 1);
        case Family::Product: return a * b;
    }
    return 0;
}

inline mpq_class tconorm(Family f, const mpq_class& a, const mpq_class& b) {
    switch (f) {
        case Family::Zadeh:
        case Family::Goedel: return cmp(a, b) > 0 ? a : b;
        case Family::Lukasiewicz: return clamp01(a + b);
        case Family::Product: return a + b - a * b;
    }
    return 0;
}

inline mpq_class negation(Family f, const mpq_class& a) {
    switch (f) {
        case Family::Zadeh:
        case Family::Lukasiewicz: return 1 - a;
        case Family::Product:
        case Family::Goedel: return sgn(a) == 0 ? 1 : 0;
    }
    return 0;
}

inline mpq_class implication(Family f, const mpq_class& a, const mpq_class& b) {
    switch (f) {
        case Family::Zadeh: {
            mpq_class na = 1 - a;
            return cmp(na, b) > 0 ? na : b;
        }
        case Family::Lukasiewicz: return clamp01(1 - a + b);
        case Family::Product:
            if (cmp(a, b) <= 0) return 1;
            return b / a;
        case Family::Goedel:
            if (cmp(a, b) <= 0) return 1;
            return b;
    }
    return 0;
}

}  // namespace table

/// Naive recursive concept evaluation straight from the semantics table,
/// no memoization, no sharing with the library evaluator.
inline mpq_class naive_eval(const FiniteInterpretation& interp, Family f,
                            const ConceptRef& c, std::size_t x) {
    auto concept_val = [&](const std::string& n, std::size_t e) -> mpq_class {
        return interp.has_concept(n) ? interp.concept_value(n, e).value()
                                     : mpq_class(0);
    };
    auto role_val = [&](const std::string& n, std::size_t i,
                        std::size_t j) -> mpq_class {
        return interp.has_role(n) ? interp.role_value(n, i, j).value()
                                  : mpq_class(0);
    };
    switch (c->kind) {
        case ConceptKind::Top: return 1;
        case ConceptKind::Bottom: return 0;
        case ConceptKind::Atomic: return concept_val(c->name, x);
        case ConceptKind::And:
            return table::tnorm(f, naive_eval(interp, f, c->left, x),
                                naive_eval(interp, f, c->right, x));
        case ConceptKind::Or:
            return table::tconorm(f, naive_eval(interp, f, c->left, x),
                                  naive_eval(interp, f, c->right, x));
        case ConceptKind::Not:
            return table::negation(f, naive_eval(interp, f, c->left, x));
        case ConceptKind::Forall: {
            mpq_class out = 1;
            for (std::size_t y = 0; y < interp.size(); ++y) {
                mpq_class v = table::implication(
                    f, role_val(c->name, x, y), naive_eval(interp, f, c->left, y));
                if (cmp(v, out) < 0) out = v;
            }
            return out;
        }
        case ConceptKind::Exists: {
            mpq_class out = 0;
            for (std::size_t y = 0; y < interp.size(); ++y) {
                mpq_class v = table::tnorm(f, role_val(c->name, x, y),
                                           naive_eval(interp, f, c->left, y));
                if (cmp(v, out) > 0) out = v;
            }
            return out;
        }
    }
    return 0;
}

/// Closed-form Lukasiewicz value of the sub-unit absorber at input x:
/// max(0, max(0, p x - (p-1)) - max(0, q x - (q-1))).
inline mpq_class gadget_formula(long p, long q, const mpq_class& x) {
    mpq_class vp = table::clamp01(p * x - (p - 1));
    mpq_class vq = table::clamp01(q * x - (q - 1));
    mpq_class d = vp - vq;
    return sgn(d) < 0 ? mpq_class(0) : d;
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::size_t below(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine);
    }
    bool chance(double p) {
        return std::uniform_real_distribution<>(0, 1)(engine) < p;
    }
};

/// Random concept over the given atom and role pools.
inline ConceptRef random_concept(Rng& rng, const std::vector<std::string>& atoms,
                                 const std::vector<std::string>& roles,
                                 unsigned depth, bool allow_or = true) {
    if (depth == 0 || rng.chance(0.25)) {
        std::size_t pick = rng.below(atoms.size() + 2);
        if (pick == atoms.size()) return top();
        if (pick == atoms.size() + 1) return bottom();
        return atomic(atoms[pick]);
    }
    switch (rng.below(allow_or ? 5 : 4)) {
        case 0:
            return conj(random_concept(rng, atoms, roles, depth - 1, allow_or),
                        random_concept(rng, atoms, roles, depth - 1, allow_or));
        case 1:
            return neg(random_concept(rng, atoms, roles, depth - 1, allow_or));
        case 2:
            return forall(roles[rng.below(roles.size())],
                          random_concept(rng, atoms, roles, depth - 1, allow_or));
        case 3:
            return exists(roles[rng.below(roles.size())],
                          random_concept(rng, atoms, roles, depth - 1, allow_or));
        default:
            return disj(random_concept(rng, atoms, roles, depth - 1, allow_or),
                        random_concept(rng, atoms, roles, depth - 1, allow_or));
    }
}

inline Degree random_degree(Rng& rng, const std::vector<Degree>& grid) {
    return grid[rng.below(grid.size())];
}

/// Random interpretation over fixed pools of names.
inline FiniteInterpretation random_interpretation(
    Rng& rng, std::size_t max_elements, const std::vector<std::string>& atoms,
    const std::vector<std::string>& roles,
    const std::vector<std::string>& individuals,
    const std::vector<Degree>& grid) {
    std::size_t n = 1 + rng.below(max_elements);
    std::vector<std::string> domain;
    for (std::size_t i = 0; i < n; ++i)
        domain.push_back("e" + std::to_string(i + 1));
    FiniteInterpretation interp(std::move(domain));
    for (const std::string& a : individuals)
        interp.set_individual(a, rng.below(n));
    for (const std::string& c : atoms) {
        interp.set_concept_default(c, Degree::zero());
        for (std::size_t e = 0; e < n; ++e)
            interp.set_concept_value(c, e, random_degree(rng, grid));
    }
    for (const std::string& r : roles) {
        interp.set_role_default(r, Degree::zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                interp.set_role_value(r, i, j, random_degree(rng, grid));
    }
    return interp;
}

/// Random acyclic KB over atoms {A, B}, role R, individuals {a, b}. The
/// TBox defines A (over B) and/or B (over constants only), so the "uses"
/// relation cannot reach back. Degrees stay in {1/2, 1}: the Lukasiewicz
/// connectives keep denominator-2 values on the denominator-2 grid, and
/// so do the model-lifting formulas, which makes bounded-search verdicts
/// exactly comparable before and after the TBox transformations. At most
/// one inclusion-form axiom keeps the post-transformation signature small
/// enough for exhaustive search.
inline KnowledgeBase random_acyclic_kb(Rng& rng) {
    auto deg = [&] { return rng.chance(0.5) ? Degree(1, 2) : Degree::one(); };
    std::vector<RawAxiom> raws;

    std::size_t n_abox = 1 + rng.below(3);
    for (std::size_t i = 0; i < n_abox; ++i) {
        std::string indiv = rng.chance(0.5) ? "a" : "b";
        if (rng.chance(0.2)) {
            raws.push_back(RawAxiom::role_geq("a", "b", "R", deg()));
            continue;
        }
        ConceptRef c = random_concept(rng, {"A", "B"}, {"R"}, 2);
        if (rng.chance(0.3))
            raws.push_back(RawAxiom::concept_leq(indiv, c, deg()));
        else
            raws.push_back(RawAxiom::concept_geq(indiv, c, deg()));
    }

    bool used_inclusion = false;
    if (rng.chance(0.8)) {  // define A over B and constants
        ConceptRef rhs = random_concept(rng, {"B"}, {"R"}, 2);
        if (rng.chance(0.5)) {
            raws.push_back(RawAxiom::gci(atomic("A"), rhs, deg()));
            used_inclusion = true;
        } else {
            raws.push_back(RawAxiom::equivalence(atomic("A"), rhs));
        }
    }
    if (rng.chance(0.5)) {  // define B over constants only
        ConceptRef rhs = random_concept(rng, {}, {"R"}, 1);
        if (!used_inclusion && rng.chance(0.5))
            raws.push_back(RawAxiom::gci(atomic("B"), rhs, deg()));
        else
            raws.push_back(RawAxiom::equivalence(atomic("B"), rhs));
    }
    return expand_shorthands(raws);
}

}  // namespace falc::testing
