#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "falc/degree.hpp"

namespace falc {

/// A finite fuzzy interpretation: a nonempty ordered domain, per-name
/// concept and role membership maps with a per-map default value, and an
/// individual assignment. Maps are kept canonical: no stored entry equals
/// its map's default, so structural equality coincides with semantic
/// equality of declared maps.
class FiniteInterpretation {
public:
    struct ConceptMap {
        Degree def;
        std::map<std::size_t, Degree> at;
        bool operator==(const ConceptMap&) const = default;
    };
    struct RoleMap {
        Degree def;
        std::map<std::pair<std::size_t, std::size_t>, Degree> at;
        bool operator==(const RoleMap&) const = default;
    };

    explicit FiniteInterpretation(std::vector<std::string> domain);

    std::size_t size() const { return domain_.size(); }
    const std::vector<std::string>& domain() const { return domain_; }
    std::optional<std::size_t> element_index(const std::string& name) const;

    void set_individual(const std::string& name, std::size_t element);
    std::optional<std::size_t> individual(const std::string& name) const;
    const std::map<std::string, std::size_t>& individuals() const {
        return individuals_;
    }

    /// Declares the map if absent.
    void set_concept_default(const std::string& name, Degree d);
    void set_concept_value(const std::string& name, std::size_t element, Degree d);
    void set_role_default(const std::string& name, Degree d);
    void set_role_value(const std::string& name, std::size_t from, std::size_t to,
                        Degree d);

    bool has_concept(const std::string& name) const;
    bool has_role(const std::string& name) const;

    /// Value of a declared concept/role map; throws on undeclared names
    /// (callers decide how undeclared names default).
    const Degree& concept_value(const std::string& name, std::size_t element) const;
    const Degree& role_value(const std::string& name, std::size_t from,
                             std::size_t to) const;

    const std::map<std::string, ConceptMap>& concept_maps() const {
        return concepts_;
    }
    const std::map<std::string, RoleMap>& role_maps() const { return roles_; }

    bool operator==(const FiniteInterpretation& o) const = default;

private:
    std::vector<std::string> domain_;
    std::map<std::string, std::size_t> index_;
    std::map<std::string, std::size_t> individuals_;
    std::map<std::string, ConceptMap> concepts_;
    std::map<std::string, RoleMap> roles_;
};

}  // namespace falc
