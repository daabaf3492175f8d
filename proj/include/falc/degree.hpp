#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace falc {

/// Exact truth degree: a rational number in [0, 1], always kept in lowest
/// terms. All arithmetic on degrees is exact; there is no floating point
/// anywhere on this path.
class Degree {
public:
    Degree() : v_(0) {}
    Degree(long num, long den) : v_(num, den) { normalize_and_check(); }
    explicit Degree(const mpq_class& v) : v_(v) { normalize_and_check(); }

    static const Degree& zero();
    static const Degree& one();

    /// Accepts "p/q", a terminating decimal ("0.25"), or a plain integer.
    /// Decimals convert exactly to rationals. Returns nullopt on malformed
    /// or out-of-range input; `error`, when given, receives the reason.
    static std::optional<Degree> parse(std::string_view text,
                                       std::string* error = nullptr);

    const mpq_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return cmp(v_, 1) == 0; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Canonical text form: "0", "1", "p/q".
    std::string str() const { return v_.get_str(); }

    bool operator==(const Degree& o) const { return cmp(v_, o.v_) == 0; }
    std::strong_ordering operator<=>(const Degree& o) const {
        int c = cmp(v_, o.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    void normalize_and_check() {
        v_.canonicalize();
        if (sgn(v_) < 0 || cmp(v_, 1) > 0)
            throw std::domain_error("degree out of [0,1]: " + v_.get_str());
    }

    mpq_class v_;
};

inline const Degree& min(const Degree& a, const Degree& b) { return b < a ? b : a; }
inline const Degree& max(const Degree& a, const Degree& b) { return a < b ? b : a; }

}  // namespace falc
