#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "falc/degree.hpp"

namespace falc {

/// The four operator families. Each selects a t-norm, t-conorm, negation
/// and implication over exact rational degrees:
///
///   Zadeh        min / max / 1-a / max(1-a, b)           (Kleene-Dienes)
///   Lukasiewicz  max(a+b-1, 0) / min(a+b, 1) / 1-a / min(1-a+b, 1)
///   Product      a*b / a+b-a*b / strict / 1 if a<=b else b/a
///   Goedel       min / max / strict / 1 if a<=b else b
///
/// where "strict" negation is 1 at 0 and 0 elsewhere.
enum class Family { Zadeh, Lukasiewicz, Product, Goedel };

inline constexpr std::array<Family, 4> kAllFamilies = {
    Family::Zadeh, Family::Lukasiewicz, Family::Product, Family::Goedel};

std::string_view family_name(Family f);

/// Accepts the full name or common abbreviations ("luk", "prod", "godel").
std::optional<Family> family_from_string(std::string_view s);

/// True for the families whose implication is the residuum of their t-norm
/// (Lukasiewicz, Product, Goedel). Zadeh's Kleene-Dienes implication is not
/// a residuum.
bool is_residuated(Family f);

Degree tnorm(Family f, const Degree& a, const Degree& b);
Degree tconorm(Family f, const Degree& a, const Degree& b);
Degree negation(Family f, const Degree& a);
Degree implication(Family f, const Degree& a, const Degree& b);

}  // namespace falc
