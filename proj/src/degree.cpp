#include "falc/degree.hpp"

#include <cctype>

namespace falc {

const Degree& Degree::zero() {
    static const Degree d;
    return d;
}

const Degree& Degree::one() {
    static const Degree d(1, 1);
    return d;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<Degree> fail(std::string* error, const std::string& why) {
    if (error) *error = why;
    return std::nullopt;
}

}  // namespace

std::optional<Degree> Degree::parse(std::string_view text, std::string* error) {
    if (text.empty()) return fail(error, "empty degree");

    mpq_class v;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            return fail(error, "malformed rational, expected p/q");
        mpz_class p{std::string(num)};
        mpz_class q{std::string(den)};
        if (sgn(q) == 0) return fail(error, "zero denominator");
        v = mpq_class(p, q);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac))
            return fail(error, "malformed decimal");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class p = mpz_class(std::string(whole)) * scale +
                      mpz_class(std::string(frac));
        v = mpq_class(p, scale);
    } else {
        if (!all_digits(text)) return fail(error, "malformed degree");
        v = mpq_class(mpz_class(std::string(text)));
    }

    v.canonicalize();
    if (sgn(v) < 0 || cmp(v, 1) > 0)
        return fail(error, "degree out of [0,1]: " + v.get_str());
    return Degree(v);
}

}  // namespace falc
