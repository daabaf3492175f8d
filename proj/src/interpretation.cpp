#include "falc/interpretation.hpp"

#include <stdexcept>

namespace falc {

FiniteInterpretation::FiniteInterpretation(std::vector<std::string> domain)
    : domain_(std::move(domain)) {
    if (domain_.empty())
        throw std::domain_error("interpretation domain must be nonempty");
    for (std::size_t i = 0; i < domain_.size(); ++i) {
        if (!index_.emplace(domain_[i], i).second)
            throw std::domain_error("duplicate domain element: " + domain_[i]);
    }
}

std::optional<std::size_t> FiniteInterpretation::element_index(
    const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void FiniteInterpretation::set_individual(const std::string& name,
                                          std::size_t element) {
    if (element >= domain_.size())
        throw std::out_of_range("individual maps outside the domain");
    individuals_[name] = element;
}

std::optional<std::size_t> FiniteInterpretation::individual(
    const std::string& name) const {
    auto it = individuals_.find(name);
    if (it == individuals_.end()) return std::nullopt;
    return it->second;
}

void FiniteInterpretation::set_concept_default(const std::string& name,
                                               Degree d) {
    ConceptMap& m = concepts_[name];
    m.def = std::move(d);
    // Re-canonicalize against the new default.
    for (auto it = m.at.begin(); it != m.at.end();)
        it = it->second == m.def ? m.at.erase(it) : std::next(it);
}

void FiniteInterpretation::set_concept_value(const std::string& name,
                                             std::size_t element, Degree d) {
    if (element >= domain_.size())
        throw std::out_of_range("element outside the domain");
    ConceptMap& m = concepts_[name];
    if (d == m.def)
        m.at.erase(element);
    else
        m.at[element] = std::move(d);
}

void FiniteInterpretation::set_role_default(const std::string& name, Degree d) {
    RoleMap& m = roles_[name];
    m.def = std::move(d);
    for (auto it = m.at.begin(); it != m.at.end();)
        it = it->second == m.def ? m.at.erase(it) : std::next(it);
}

void FiniteInterpretation::set_role_value(const std::string& name,
                                          std::size_t from, std::size_t to,
                                          Degree d) {
    if (from >= domain_.size() || to >= domain_.size())
        throw std::out_of_range("element outside the domain");
    RoleMap& m = roles_[name];
    if (d == m.def)
        m.at.erase({from, to});
    else
        m.at[{from, to}] = std::move(d);
}

bool FiniteInterpretation::has_concept(const std::string& name) const {
    return concepts_.count(name) > 0;
}

bool FiniteInterpretation::has_role(const std::string& name) const {
    return roles_.count(name) > 0;
}

const Degree& FiniteInterpretation::concept_value(const std::string& name,
                                                  std::size_t element) const {
    auto it = concepts_.find(name);
    if (it == concepts_.end())
        throw std::out_of_range("undeclared concept: " + name);
    auto e = it->second.at.find(element);
    return e == it->second.at.end() ? it->second.def : e->second;
}

const Degree& FiniteInterpretation::role_value(const std::string& name,
                                               std::size_t from,
                                               std::size_t to) const {
    auto it = roles_.find(name);
    if (it == roles_.end()) throw std::out_of_range("undeclared role: " + name);
    auto e = it->second.at.find({from, to});
    return e == it->second.at.end() ? it->second.def : e->second;
}

}  // namespace falc
