#include "falc/log_dyadic.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace falc {

LogDyadic LogDyadic::pow2(mpq_class exponent) {
    exponent.canonicalize();
    if (sgn(exponent) > 0)
        throw std::domain_error("log-dyadic exponent must be <= 0, got " +
                                exponent.get_str());
    return LogDyadic(false, std::move(exponent));
}

const mpq_class& LogDyadic::exponent() const {
    if (is_zero_) throw std::logic_error("exponent() on the zero value");
    return exp_;
}

std::optional<Degree> LogDyadic::as_rational() const {
    if (is_zero_) return Degree::zero();
    if (cmp(exp_.get_den(), 1) != 0) return std::nullopt;
    mpz_class den;
    mpz_class e = -exp_.get_num();
    if (!e.fits_ulong_p()) return std::nullopt;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, e.get_ui());
    return Degree(mpq_class(1, den));
}

std::string LogDyadic::str() const {
    if (is_zero_) return "0";
    if (is_one()) return "1";
    return "2^(" + exp_.get_str() + ")";
}

std::strong_ordering LogDyadic::operator<=>(const LogDyadic& o) const {
    if (is_zero_ && o.is_zero_) return std::strong_ordering::equal;
    if (is_zero_) return std::strong_ordering::less;
    if (o.is_zero_) return std::strong_ordering::greater;
    int c = cmp(exp_, o.exp_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering LogDyadic::compare_rational(const mpq_class& t) const {
    if (is_zero_) {
        int c = -sgn(t);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    if (sgn(t) <= 0) return std::strong_ordering::greater;  // 2^r > 0
    if (auto r = as_rational()) {
        int c = cmp(r->value(), t);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    // Non-integer exponent: 2^exp_ is irrational, so a strict separation
    // from the rational t exists and interval refinement finds it.
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        mpfr_t e, lo, hi;
        mpfr_init2(e, prec);
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_q(e, exp_.get_mpq_t(), MPFR_RNDN);
        mpfr_ui_pow(lo, 2, e, MPFR_RNDD);
        mpfr_ui_pow(hi, 2, e, MPFR_RNDU);
        // Widen by one ulp to absorb the rounding of e itself.
        mpfr_nextbelow(lo);
        mpfr_nextabove(hi);
        int below = mpfr_cmp_q(hi, t.get_mpq_t());
        int above = mpfr_cmp_q(lo, t.get_mpq_t());
        mpfr_clears(e, lo, hi, static_cast<mpfr_ptr>(nullptr));
        if (below < 0) return std::strong_ordering::less;
        if (above > 0) return std::strong_ordering::greater;
        if (prec > 1u << 20)
            throw std::runtime_error("log-dyadic comparison did not separate");
    }
}

LogDyadic ld_tnorm(const LogDyadic& a, const LogDyadic& b) {
    if (a.is_zero() || b.is_zero()) return LogDyadic::zero();
    return LogDyadic::pow2(a.exponent() + b.exponent());
}

LogDyadic ld_implication(const LogDyadic& a, const LogDyadic& b) {
    if ((a <=> b) != std::strong_ordering::greater) return LogDyadic::one();
    // a > b, so a is nonzero.
    if (b.is_zero()) return LogDyadic::zero();
    return LogDyadic::pow2(b.exponent() - a.exponent());
}

LogDyadic ld_negation(const LogDyadic& a) {
    return a.is_zero() ? LogDyadic::one() : LogDyadic::zero();
}

}  // namespace falc
