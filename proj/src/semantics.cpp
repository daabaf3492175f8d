#include "falc/semantics.hpp"

namespace falc {

Evaluator::Evaluator(const FiniteInterpretation& interp, Family family,
                     bool strict)
    : interp_(interp), family_(family), strict_(strict) {}

void Evaluator::warn_unknown(const std::string& kind, const std::string& name) {
    if (strict_)
        throw UnknownNameError("unknown " + kind + " name: " + name);
    if (warned_.insert(kind + ":" + name).second)
        warnings_.push_back(kind + " " + name +
                            " has no declared map; treated as constant 0");
}

const Degree& Evaluator::concept_value(const std::string& name,
                                       std::size_t element) {
    if (!interp_.has_concept(name)) {
        warn_unknown("concept", name);
        return Degree::zero();
    }
    return interp_.concept_value(name, element);
}

const Degree& Evaluator::role_value(const std::string& name, std::size_t from,
                                    std::size_t to) {
    if (!interp_.has_role(name)) {
        warn_unknown("role", name);
        return Degree::zero();
    }
    return interp_.role_value(name, from, to);
}

Degree Evaluator::eval(const ConceptRef& c, std::size_t element) {
    retained_.push_back(c);
    return eval_impl(c, element);
}

Degree Evaluator::eval_impl(const ConceptRef& c, std::size_t element) {
    if (element >= interp_.size())
        throw std::out_of_range("evaluation element outside the domain");
    auto key = std::make_pair(c.get(), element);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Degree out;
    switch (c->kind) {
        case ConceptKind::Top:
            out = Degree::one();
            break;
        case ConceptKind::Bottom:
            out = Degree::zero();
            break;
        case ConceptKind::Atomic:
            out = concept_value(c->name, element);
            break;
        case ConceptKind::And:
            out = tnorm(family_, eval_impl(c->left, element),
                        eval_impl(c->right, element));
            break;
        case ConceptKind::Or:
            out = tconorm(family_, eval_impl(c->left, element),
                          eval_impl(c->right, element));
            break;
        case ConceptKind::Not:
            out = negation(family_, eval_impl(c->left, element));
            break;
        case ConceptKind::Forall: {
            // inf over the finite domain, taken in domain order.
            out = Degree::one();
            for (std::size_t y = 0; y < interp_.size(); ++y) {
                Degree v = implication(family_, role_value(c->name, element, y),
                                       eval(c->left, y));
                if (v < out) out = v;
            }
            break;
        }
        case ConceptKind::Exists: {
            out = Degree::zero();
            for (std::size_t y = 0; y < interp_.size(); ++y) {
                Degree v = tnorm(family_, role_value(c->name, element, y),
                                 eval(c->left, y));
                if (out < v) out = v;
            }
            break;
        }
    }
    return memo_.emplace(key, std::move(out)).first->second;
}

Degree Evaluator::subsumption(const ConceptRef& c, const ConceptRef& d) {
    Degree out = Degree::one();
    for (std::size_t x = 0; x < interp_.size(); ++x) {
        Degree v = implication(family_, eval(c, x), eval(d, x));
        if (v < out) out = v;
    }
    return out;
}

AxiomCheck Evaluator::check(const Axiom& ax) {
    AxiomCheck out;
    out.axiom = ax;
    out.required = ax.bound;
    switch (ax.kind) {
        case AxiomKind::ConceptGeq:
        case AxiomKind::ConceptLeq: {
            auto x = interp_.individual(ax.individual);
            if (!x) throw UnmappedIndividualError(ax.individual);
            out.achieved = eval(ax.lhs, *x);
            out.satisfied = ax.kind == AxiomKind::ConceptGeq
                                ? out.achieved >= ax.bound
                                : out.achieved <= ax.bound;
            break;
        }
        case AxiomKind::RoleGeq: {
            auto x = interp_.individual(ax.individual);
            if (!x) throw UnmappedIndividualError(ax.individual);
            auto y = interp_.individual(ax.individual2);
            if (!y) throw UnmappedIndividualError(ax.individual2);
            out.achieved = role_value(ax.role, *x, *y);
            out.satisfied = out.achieved >= ax.bound;
            break;
        }
        case AxiomKind::GciGeq:
            out.achieved = subsumption(ax.lhs, ax.rhs);
            out.satisfied = out.achieved >= ax.bound;
            break;
    }
    return out;
}

SatisfactionReport Evaluator::check_kb(const KnowledgeBase& kb) {
    SatisfactionReport report;
    for (const Axiom& ax : kb.abox) {
        report.per_axiom.push_back(check(ax));
        report.overall = report.overall && report.per_axiom.back().satisfied;
    }
    for (const Axiom& ax : kb.tbox) {
        report.per_axiom.push_back(check(ax));
        report.overall = report.overall && report.per_axiom.back().satisfied;
    }
    report.warnings = warnings_;
    return report;
}

void Evaluator::collect_witnesses(
    const ConceptRef& c, std::size_t element,
    std::vector<QuantifierWitness>& out,
    std::set<std::pair<const ConceptNode*, std::size_t>>& visited) {
    if (!visited.insert({c.get(), element}).second) return;
    switch (c->kind) {
        case ConceptKind::Top:
        case ConceptKind::Bottom:
        case ConceptKind::Atomic:
            return;
        case ConceptKind::And:
        case ConceptKind::Or:
            collect_witnesses(c->left, element, out, visited);
            collect_witnesses(c->right, element, out, visited);
            return;
        case ConceptKind::Not:
            collect_witnesses(c->left, element, out, visited);
            return;
        case ConceptKind::Forall:
        case ConceptKind::Exists: {
            bool is_forall = c->kind == ConceptKind::Forall;
            std::size_t best = 0;
            Degree best_val;
            bool first = true;
            for (std::size_t y = 0; y < interp_.size(); ++y) {
                Degree v =
                    is_forall
                        ? implication(family_, role_value(c->name, element, y),
                                      eval(c->left, y))
                        : tnorm(family_, role_value(c->name, element, y),
                                eval(c->left, y));
                bool better = first || (is_forall ? v < best_val : best_val < v);
                if (better) {
                    best = y;
                    best_val = v;
                    first = false;
                }
            }
            out.push_back({c, element, best, best_val});
            // The quantified concept is evaluated at every element.
            for (std::size_t y = 0; y < interp_.size(); ++y)
                collect_witnesses(c->left, y, out, visited);
            return;
        }
    }
}

std::vector<QuantifierWitness> Evaluator::witnesses(const ConceptRef& c,
                                                    std::size_t element) {
    std::vector<QuantifierWitness> out;
    std::set<std::pair<const ConceptNode*, std::size_t>> visited;
    collect_witnesses(c, element, out, visited);
    return out;
}

SubsumptionWitness Evaluator::subsumption_witness(const ConceptRef& c,
                                                  const ConceptRef& d) {
    SubsumptionWitness w{0, Degree::one()};
    bool first = true;
    for (std::size_t x = 0; x < interp_.size(); ++x) {
        Degree v = implication(family_, eval(c, x), eval(d, x));
        if (first || v < w.value) {
            w = {x, v};
            first = false;
        }
    }
    return w;
}

Degree eval_concept(const FiniteInterpretation& interp, Family f,
                    const ConceptRef& c, std::size_t element, bool strict) {
    Evaluator ev(interp, f, strict);
    return ev.eval(c, element);
}

Degree subsumption_degree(const FiniteInterpretation& interp, Family f,
                          const ConceptRef& c, const ConceptRef& d) {
    Evaluator ev(interp, f);
    return ev.subsumption(c, d);
}

AxiomCheck check_axiom(const FiniteInterpretation& interp, Family f,
                       const Axiom& ax) {
    Evaluator ev(interp, f);
    return ev.check(ax);
}

SatisfactionReport check_kb(const FiniteInterpretation& interp, Family f,
                            const KnowledgeBase& kb, bool strict) {
    Evaluator ev(interp, f, strict);
    return ev.check_kb(kb);
}

}  // namespace falc
