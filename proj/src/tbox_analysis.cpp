#include "falc/tbox_analysis.hpp"

#include <deque>
#include <stdexcept>

namespace falc {

std::set<std::string> UsesGraph::uses_set(const std::string& name) const {
    std::set<std::string> seen;
    std::deque<std::string> todo{name};
    while (!todo.empty()) {
        std::string cur = todo.front();
        todo.pop_front();
        auto it = direct.find(cur);
        if (it == direct.end()) continue;
        for (const std::string& next : it->second)
            if (seen.insert(next).second) todo.push_back(next);
    }
    return seen;
}

bool UsesGraph::uses(const std::string& a, const std::string& b) const {
    return uses_set(a).count(b) > 0;
}

std::vector<std::string> UsesGraph::cycle_through(const std::string& name) const {
    // Shortest path name -> name over direct edges.
    std::map<std::string, std::string> parent;
    std::deque<std::string> todo{name};
    while (!todo.empty()) {
        std::string cur = todo.front();
        todo.pop_front();
        auto it = direct.find(cur);
        if (it == direct.end()) continue;
        for (const std::string& next : it->second) {
            if (next == name) {
                std::vector<std::string> rev;
                for (std::string at = cur; at != name; at = parent.at(at))
                    rev.push_back(at);
                std::vector<std::string> path{name};
                path.insert(path.end(), rev.rbegin(), rev.rend());
                path.push_back(name);
                return path;
            }
            if (!parent.count(next) && next != name) {
                parent[next] = cur;
                todo.push_back(next);
            }
        }
    }
    return {};
}

namespace {

bool is_atomic(const ConceptRef& c) {
    return c && c->kind == ConceptKind::Atomic;
}

// Equivalence reverse halves are artifacts of expansion; the stated
// left-hand side is the primary half's.
bool is_definition_unit(const Axiom& ax) {
    return !(ax.equiv && !ax.equiv->primary);
}

}  // namespace

UsesGraph uses_graph(const std::vector<Axiom>& tbox) {
    UsesGraph g;
    for (const Axiom& ax : tbox) {
        if (ax.kind != AxiomKind::GciGeq) continue;
        if (!is_definition_unit(ax)) continue;
        if (!is_atomic(ax.lhs)) continue;
        std::set<std::string> used, roles;
        collect_names(ax.rhs, used, roles);
        g.direct[ax.lhs->name].insert(used.begin(), used.end());
    }
    return g;
}

std::string_view violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::Form: return "form";
        case ViolationKind::MultiDefinition: return "multi-definition";
        case ViolationKind::Cycle: return "cycle";
        case ViolationKind::SubUnitDegree: return "sub-unit-degree";
    }
    throw std::logic_error("bad violation kind");
}

TBoxClassification classify_tbox(const std::vector<Axiom>& tbox) {
    TBoxClassification out;

    bool any_structural = false;
    std::map<std::string, std::vector<std::size_t>> definitions;

    for (std::size_t i = 0; i < tbox.size(); ++i) {
        const Axiom& ax = tbox[i];
        if (!is_definition_unit(ax)) continue;
        if (!is_atomic(ax.lhs)) {
            any_structural = true;
            std::string shape = ax.equiv ? "equivalence" : "inclusion";
            out.violations.push_back(
                {ViolationKind::Form,
                 shape + " with non-atomic left-hand side: " + axiom_text(ax),
                 {i},
                 {}});
            continue;
        }
        definitions[ax.lhs->name].push_back(i);
    }

    for (const auto& [name, idxs] : definitions) {
        if (idxs.size() > 1) {
            any_structural = true;
            out.violations.push_back(
                {ViolationKind::MultiDefinition,
                 name + " appears on the left-hand side of " +
                     std::to_string(idxs.size()) + " axioms",
                 idxs,
                 {}});
        }
    }

    UsesGraph g = uses_graph(tbox);
    for (const auto& [name, idxs] : definitions) {
        if (g.uses(name, name)) {
            any_structural = true;
            std::vector<std::string> path = g.cycle_through(name);
            std::string detail = name + " uses itself";
            if (!path.empty()) {
                detail += " (";
                for (std::size_t k = 0; k < path.size(); ++k) {
                    if (k) detail += " uses ";
                    detail += path[k];
                }
                detail += ")";
            }
            out.violations.push_back(
                {ViolationKind::Cycle, detail, idxs, std::move(path)});
        }
    }

    bool any_subunit = false;
    for (std::size_t i = 0; i < tbox.size(); ++i) {
        const Axiom& ax = tbox[i];
        if (!is_definition_unit(ax) || ax.equiv) continue;
        if (!ax.bound.is_one()) {
            any_subunit = true;
            out.violations.push_back({ViolationKind::SubUnitDegree,
                                      "inclusion degree " + ax.bound.str() +
                                          " < 1: " + axiom_text(ax),
                                      {i},
                                      {}});
        }
    }

    out.acyclic = !any_structural;
    out.unfoldable = out.acyclic && !any_subunit;
    return out;
}

}  // namespace falc
