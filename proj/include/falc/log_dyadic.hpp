#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>

#include "falc/degree.hpp"

namespace falc {

/// Exact truth value of the form 2^r with rational r <= 0, or exactly 0.
/// This is the number system of the Product-family canonical model: it is
/// closed under the Product t-norm (exponent addition) and residuum
/// (exponent subtraction), which is all that model ever needs.
class LogDyadic {
public:
    /// The value 0.
    static LogDyadic zero() { return LogDyadic(true, 0); }
    /// The value 2^exponent; requires exponent <= 0 (exponent 0 is exactly 1).
    static LogDyadic pow2(mpq_class exponent);
    /// The value 1 = 2^0.
    static LogDyadic one() { return LogDyadic(false, 0); }

    bool is_zero() const { return is_zero_; }
    bool is_one() const { return !is_zero_ && sgn(exp_) == 0; }

    /// Exponent of a nonzero value. Calling this on 0 is a logic error.
    const mpq_class& exponent() const;

    /// Exact rational form, present iff the exponent is an integer (or the
    /// value is 0).
    std::optional<Degree> as_rational() const;

    /// "0", "1", or "2^(p/q)".
    std::string str() const;

    /// Total order: 0 < 2^r for every r, and 2^r < 2^s iff r < s.
    std::strong_ordering operator<=>(const LogDyadic& o) const;
    bool operator==(const LogDyadic& o) const {
        return (*this <=> o) == std::strong_ordering::equal;
    }

    /// Exact comparison against a rational. Decided symbolically when the
    /// exponent is an integer; otherwise by escalating-precision interval
    /// evaluation, which terminates because 2^r is irrational for
    /// non-integer rational r.
    std::strong_ordering compare_rational(const mpq_class& t) const;

private:
    LogDyadic(bool z, mpq_class e) : is_zero_(z), exp_(std::move(e)) {}

    bool is_zero_;
    mpq_class exp_;  // meaningful only when !is_zero_
};

/// Product t-norm on log-dyadic values: 2^r * 2^s = 2^(r+s); 0 absorbs.
LogDyadic ld_tnorm(const LogDyadic& a, const LogDyadic& b);

/// Product residuum on log-dyadic values: 1 if a <= b, else b/a.
LogDyadic ld_implication(const LogDyadic& a, const LogDyadic& b);

/// Product (strict) negation: 1 at 0, else 0.
LogDyadic ld_negation(const LogDyadic& a);

}  // namespace falc
