#include "falc/axioms.hpp"

#include <stdexcept>

namespace falc {

Axiom Axiom::concept_geq(std::string a, ConceptRef c, Degree d) {
    Axiom ax{AxiomKind::ConceptGeq, std::move(a), "", "", std::move(c), nullptr,
             std::move(d), std::nullopt};
    return ax;
}

Axiom Axiom::concept_leq(std::string a, ConceptRef c, Degree d) {
    Axiom ax{AxiomKind::ConceptLeq, std::move(a), "", "", std::move(c), nullptr,
             std::move(d), std::nullopt};
    return ax;
}

Axiom Axiom::role_geq(std::string a, std::string b, std::string r, Degree d) {
    Axiom ax{AxiomKind::RoleGeq, std::move(a), std::move(b), std::move(r),
             nullptr, nullptr, std::move(d), std::nullopt};
    return ax;
}

Axiom Axiom::gci(ConceptRef l, ConceptRef r, Degree d,
                 std::optional<EquivHalf> eq) {
    Axiom ax{AxiomKind::GciGeq, "", "", "", std::move(l), std::move(r),
             std::move(d), eq};
    return ax;
}

bool Axiom::operator==(const Axiom& o) const {
    return kind == o.kind && individual == o.individual &&
           individual2 == o.individual2 && role == o.role &&
           equal(lhs, o.lhs) && equal(rhs, o.rhs) && bound == o.bound &&
           equiv == o.equiv;
}

std::string axiom_text(const Axiom& ax, bool unicode) {
    auto concept_str = [&](const ConceptRef& c) {
        return unicode ? to_unicode(c) : to_text(c);
    };
    switch (ax.kind) {
        case AxiomKind::ConceptGeq:
            return "(" + ax.individual + " : " + concept_str(ax.lhs) + ") >= " +
                   ax.bound.str();
        case AxiomKind::ConceptLeq:
            return "(" + ax.individual + " : " + concept_str(ax.lhs) + ") <= " +
                   ax.bound.str();
        case AxiomKind::RoleGeq:
            return "((" + ax.individual + " , " + ax.individual2 + ") : " +
                   ax.role + ") >= " + ax.bound.str();
        case AxiomKind::GciGeq: {
            const char* sub = unicode ? " ⊑ " : " sub ";
            if (ax.bound.is_one())
                return concept_str(ax.lhs) + sub + concept_str(ax.rhs);
            return "(" + concept_str(ax.lhs) + sub + concept_str(ax.rhs) +
                   ") >= " + ax.bound.str();
        }
    }
    throw std::logic_error("bad axiom kind");
}

RawAxiom RawAxiom::concept_geq(std::string a, ConceptRef c, Degree d) {
    return RawAxiom{Kind::ConceptGeq, std::move(a), "", "", std::move(c),
                    nullptr, std::move(d), std::nullopt};
}

RawAxiom RawAxiom::concept_leq(std::string a, ConceptRef c, Degree d) {
    return RawAxiom{Kind::ConceptLeq, std::move(a), "", "", std::move(c),
                    nullptr, std::move(d), std::nullopt};
}

RawAxiom RawAxiom::concept_eq(std::string a, ConceptRef c, Degree d) {
    return RawAxiom{Kind::ConceptEq, std::move(a), "", "", std::move(c),
                    nullptr, std::move(d), std::nullopt};
}

RawAxiom RawAxiom::role_geq(std::string a, std::string b, std::string r,
                            Degree d) {
    return RawAxiom{Kind::RoleGeq, std::move(a), std::move(b), std::move(r),
                    nullptr, nullptr, std::move(d), std::nullopt};
}

RawAxiom RawAxiom::gci(ConceptRef l, ConceptRef r, Degree d) {
    return RawAxiom{Kind::Gci, "", "", "", std::move(l), std::move(r),
                    std::move(d), std::nullopt};
}

RawAxiom RawAxiom::equivalence(ConceptRef l, ConceptRef r) {
    return RawAxiom{Kind::Equivalence, "", "", "", std::move(l), std::move(r),
                    Degree::one(), std::nullopt};
}

RawAxiom RawAxiom::from_core(const Axiom& ax) {
    switch (ax.kind) {
        case AxiomKind::ConceptGeq:
            return concept_geq(ax.individual, ax.lhs, ax.bound);
        case AxiomKind::ConceptLeq:
            return concept_leq(ax.individual, ax.lhs, ax.bound);
        case AxiomKind::RoleGeq:
            return role_geq(ax.individual, ax.individual2, ax.role, ax.bound);
        case AxiomKind::GciGeq: {
            RawAxiom raw = gci(ax.lhs, ax.rhs, ax.bound);
            raw.equiv = ax.equiv;
            return raw;
        }
    }
    throw std::logic_error("bad axiom kind");
}

KnowledgeBase expand_shorthands(const std::vector<RawAxiom>& raw) {
    KnowledgeBase kb;
    unsigned next_group = 0;
    // Pre-tagged GCIs keep their pairing but get renumbered in encounter
    // order so expansion output is stable.
    std::vector<unsigned> group_map;

    auto renumber = [&](const EquivHalf& half) {
        while (group_map.size() <= half.group) group_map.push_back(0);
        if (half.primary) group_map[half.group] = next_group++;
        return EquivHalf{group_map[half.group], half.primary};
    };

    for (const RawAxiom& r : raw) {
        switch (r.kind) {
            case RawAxiom::Kind::ConceptGeq:
                kb.abox.push_back(Axiom::concept_geq(r.individual, r.lhs, r.bound));
                break;
            case RawAxiom::Kind::ConceptLeq:
                kb.abox.push_back(Axiom::concept_leq(r.individual, r.lhs, r.bound));
                break;
            case RawAxiom::Kind::ConceptEq:
                kb.abox.push_back(Axiom::concept_geq(r.individual, r.lhs, r.bound));
                kb.abox.push_back(Axiom::concept_leq(r.individual, r.lhs, r.bound));
                break;
            case RawAxiom::Kind::RoleGeq:
                kb.abox.push_back(
                    Axiom::role_geq(r.individual, r.individual2, r.role, r.bound));
                break;
            case RawAxiom::Kind::Gci:
                kb.tbox.push_back(Axiom::gci(
                    r.lhs, r.rhs, r.bound,
                    r.equiv ? std::optional<EquivHalf>(renumber(*r.equiv))
                            : std::nullopt));
                break;
            case RawAxiom::Kind::Equivalence: {
                unsigned g = next_group++;
                kb.tbox.push_back(
                    Axiom::gci(r.lhs, r.rhs, Degree::one(), EquivHalf{g, true}));
                kb.tbox.push_back(
                    Axiom::gci(r.rhs, r.lhs, Degree::one(), EquivHalf{g, false}));
                break;
            }
        }
    }
    return kb;
}

Signature signature_of(const KnowledgeBase& kb) {
    Signature sig;
    auto visit = [&](const Axiom& ax) {
        if (!ax.individual.empty()) sig.individuals.insert(ax.individual);
        if (!ax.individual2.empty()) sig.individuals.insert(ax.individual2);
        if (!ax.role.empty()) sig.roles.insert(ax.role);
        if (ax.lhs) collect_names(ax.lhs, sig.concepts, sig.roles);
        if (ax.rhs) collect_names(ax.rhs, sig.concepts, sig.roles);
    };
    for (const Axiom& ax : kb.abox) visit(ax);
    for (const Axiom& ax : kb.tbox) visit(ax);
    return sig;
}

}  // namespace falc
