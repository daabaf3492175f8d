#include "falc/operators.hpp"

#include <stdexcept>

namespace falc {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Zadeh: return "zadeh";
        case Family::Lukasiewicz: return "lukasiewicz";
        case Family::Product: return "product";
        case Family::Goedel: return "goedel";
    }
    throw std::logic_error("bad family");
}

std::optional<Family> family_from_string(std::string_view s) {
    if (s == "zadeh" || s == "z") return Family::Zadeh;
    if (s == "lukasiewicz" || s == "luk" || s == "l") return Family::Lukasiewicz;
    if (s == "product" || s == "prod" || s == "p") return Family::Product;
    if (s == "goedel" || s == "godel" || s == "g") return Family::Goedel;
    return std::nullopt;
}

bool is_residuated(Family f) { return f != Family::Zadeh; }

Degree tnorm(Family f, const Degree& a, const Degree& b) {
    switch (f) {
        case Family::Zadeh:
        case Family::Goedel:
            return min(a, b);
        case Family::Lukasiewicz: {
            mpq_class s = a.value() + b.value() - 1;
            return sgn(s) < 0 ? Degree::zero() : Degree(s);
        }
        case Family::Product:
            return Degree(mpq_class(a.value() * b.value()));
    }
    throw std::logic_error("bad family");
}

Degree tconorm(Family f, const Degree& a, const Degree& b) {
    switch (f) {
        case Family::Zadeh:
        case Family::Goedel:
            return max(a, b);
        case Family::Lukasiewicz: {
            mpq_class s = a.value() + b.value();
            return cmp(s, 1) > 0 ? Degree::one() : Degree(s);
        }
        case Family::Product:
            return Degree(mpq_class(a.value() + b.value() - a.value() * b.value()));
    }
    throw std::logic_error("bad family");
}

Degree negation(Family f, const Degree& a) {
    switch (f) {
        case Family::Zadeh:
        case Family::Lukasiewicz:
            return Degree(mpq_class(1 - a.value()));
        case Family::Product:
        case Family::Goedel:
            return a.is_zero() ? Degree::one() : Degree::zero();
    }
    throw std::logic_error("bad family");
}

Degree implication(Family f, const Degree& a, const Degree& b) {
    switch (f) {
        case Family::Zadeh: {
            Degree na(mpq_class(1 - a.value()));
            return max(na, b);
        }
        case Family::Lukasiewicz: {
            mpq_class s = 1 - a.value() + b.value();
            return cmp(s, 1) > 0 ? Degree::one() : Degree(s);
        }
        case Family::Product:
            // a = 0 yields 1: the residuum is the sup over an unconstrained
            // variable. The a <= b branch subsumes it, but keep it explicit.
            if (a.is_zero()) return Degree::one();
            if (a <= b) return Degree::one();
            return Degree(mpq_class(b.value() / a.value()));
        case Family::Goedel:
            if (a.is_zero()) return Degree::one();
            if (a <= b) return Degree::one();
            return b;
    }
    throw std::logic_error("bad family");
}

}  // namespace falc
