#include <doctest.h>

#include <mpfr.h>

#include "falc/degree.hpp"
#include "falc/log_dyadic.hpp"
#include "falc/operators.hpp"
#include "helpers.hpp"

using namespace falc;
using falc::testing::farey_grid;

TEST_SUITE("degree") {
    TEST_CASE("canonical form and ordering") {
        CHECK(Degree(2, 4) == Degree(1, 2));
        CHECK(Degree(2, 4).numerator() == 1);
        CHECK(Degree(2, 4).denominator() == 2);
        CHECK(Degree(0, 7) == Degree::zero());
        CHECK(Degree(5, 5) == Degree::one());
        CHECK(Degree(1, 3) < Degree(1, 2));
        CHECK_THROWS_AS(Degree(3, 2), std::domain_error);
    }

    TEST_CASE("parsing accepts rationals and exact decimals") {
        CHECK(*Degree::parse("1/2") == Degree(1, 2));
        CHECK(*Degree::parse("0.5") == Degree(1, 2));
        CHECK(*Degree::parse("0.2") == Degree(1, 5));
        CHECK(*Degree::parse("0.125") == Degree(1, 8));
        CHECK(*Degree::parse("1") == Degree::one());
        CHECK(*Degree::parse("0") == Degree::zero());
        CHECK(*Degree::parse("10/20") == Degree(1, 2));

        std::string err;
        CHECK(!Degree::parse("3/2", &err));
        CHECK(err.find("out of [0,1]") != std::string::npos);
        CHECK(!Degree::parse("-1/2"));
        CHECK(!Degree::parse("a/b"));
        CHECK(!Degree::parse("1/0"));
        CHECK(!Degree::parse(""));
        CHECK(!Degree::parse("1.5"));
    }

    TEST_CASE("str is canonical") {
        CHECK(Degree(1, 2).str() == "1/2");
        CHECK(Degree::zero().str() == "0");
        CHECK(Degree::one().str() == "1");
        CHECK(Degree(4, 6).str() == "2/3");
    }
}

TEST_SUITE("operators") {
    TEST_CASE("t-norm examples") {
        CHECK(tnorm(Family::Lukasiewicz, Degree(3, 5), Degree(7, 10)) ==
              Degree(3, 10));
        CHECK(tnorm(Family::Product, Degree(1, 2), Degree(1, 2)) == Degree(1, 4));
        for (Family f : kAllFamilies) {
            CHECK(tnorm(f, Degree(2, 7), Degree::one()) == Degree(2, 7));
            CHECK(tnorm(f, Degree::one(), Degree(2, 7)) == Degree(2, 7));
        }
        CHECK(tnorm(Family::Zadeh, Degree(1, 3), Degree(1, 2)) == Degree(1, 3));
        CHECK(tnorm(Family::Goedel, Degree(1, 3), Degree(1, 2)) == Degree(1, 3));
    }

    TEST_CASE("t-conorm examples") {
        CHECK(tconorm(Family::Lukasiewicz, Degree(3, 5), Degree(7, 10)) ==
              Degree::one());
        CHECK(tconorm(Family::Product, Degree(1, 2), Degree(1, 2)) ==
              Degree(3, 4));
        for (Family f : kAllFamilies) {
            CHECK(tconorm(f, Degree(2, 7), Degree::zero()) == Degree(2, 7));
            CHECK(tconorm(f, Degree::zero(), Degree(2, 7)) == Degree(2, 7));
        }
        CHECK(tconorm(Family::Zadeh, Degree(1, 3), Degree(1, 2)) == Degree(1, 2));
    }

    TEST_CASE("negation examples") {
        CHECK(negation(Family::Lukasiewicz, Degree(1, 4)) == Degree(3, 4));
        CHECK(negation(Family::Zadeh, Degree(1, 4)) == Degree(3, 4));
        CHECK(negation(Family::Product, Degree(1, 4)) == Degree::zero());
        CHECK(negation(Family::Product, Degree::zero()) == Degree::one());
        CHECK(negation(Family::Goedel, Degree::zero()) == Degree::one());
        CHECK(negation(Family::Goedel, Degree(1, 100)) == Degree::zero());
    }

    TEST_CASE("implication examples") {
        CHECK(implication(Family::Product, Degree(4, 5), Degree(2, 5)) ==
              Degree(1, 2));
        CHECK(implication(Family::Zadeh, Degree(3, 10), Degree(1, 5)) ==
              Degree(7, 10));
        CHECK(implication(Family::Goedel, Degree(4, 5), Degree(2, 5)) ==
              Degree(2, 5));
        CHECK(implication(Family::Lukasiewicz, Degree(4, 5), Degree(2, 5)) ==
              Degree(3, 5));
        // a <= b gives 1 for the residuated families
        for (Family f : {Family::Lukasiewicz, Family::Product, Family::Goedel}) {
            CHECK(implication(f, Degree(1, 3), Degree(1, 2)) == Degree::one());
            CHECK(implication(f, Degree(1, 3), Degree(1, 3)) == Degree::one());
        }
        // implication at 0 is 1 in every family
        for (Family f : kAllFamilies)
            CHECK(implication(f, Degree::zero(), Degree::zero()) ==
                  Degree::one());
    }

    TEST_CASE("grid conformance against a direct table transcription") {
        auto grid = farey_grid(8);
        for (Family f : kAllFamilies) {
            for (const Degree& a : grid) {
                CHECK(negation(f, a).value() ==
                      testing::table::negation(f, a.value()));
                for (const Degree& b : grid) {
                    CHECK(tnorm(f, a, b).value() ==
                          testing::table::tnorm(f, a.value(), b.value()));
                    CHECK(tconorm(f, a, b).value() ==
                          testing::table::tconorm(f, a.value(), b.value()));
                    CHECK(implication(f, a, b).value() ==
                          testing::table::implication(f, a.value(), b.value()));
                    CHECK(tnorm(f, a, b) == tnorm(f, b, a));
                    CHECK(tconorm(f, a, b) == tconorm(f, b, a));
                }
            }
        }
    }

    TEST_CASE("residuation on a grid for the residuated families") {
        auto grid = farey_grid(6);
        for (Family f : {Family::Lukasiewicz, Family::Product, Family::Goedel})
            for (const Degree& a : grid)
                for (const Degree& b : grid)
                    for (const Degree& c : grid) {
                        bool lhs = tnorm(f, a, c) <= b;
                        bool rhs = c <= implication(f, a, b);
                        CHECK(lhs == rhs);
                    }
    }

    TEST_CASE("divisibility: impl(a,b) tnorm a = min(a,b)") {
        auto grid = farey_grid(8);
        for (Family f : {Family::Lukasiewicz, Family::Product, Family::Goedel})
            for (const Degree& a : grid)
                for (const Degree& b : grid)
                    CHECK(tnorm(f, implication(f, a, b), a) == min(a, b));
    }

    TEST_CASE("monotonicity on a grid") {
        auto grid = farey_grid(5);
        for (Family f : kAllFamilies)
            for (const Degree& a : grid)
                for (const Degree& b : grid)
                    for (const Degree& c : grid) {
                        if (b <= c) {
                            CHECK(tnorm(f, a, b) <= tnorm(f, a, c));
                            CHECK(tconorm(f, a, b) <= tconorm(f, a, c));
                            CHECK(implication(f, a, b) <= implication(f, a, c));
                            // nonincreasing in the first argument
                            CHECK(implication(f, c, a) <= implication(f, b, a));
                        }
                    }
    }

    TEST_CASE("Lukasiewicz interdefinability of the t-conorm") {
        auto grid = farey_grid(9);
        for (const Degree& a : grid)
            for (const Degree& b : grid) {
                Degree via_neg = negation(
                    Family::Lukasiewicz,
                    tnorm(Family::Lukasiewicz, negation(Family::Lukasiewicz, a),
                          negation(Family::Lukasiewicz, b)));
                CHECK(tconorm(Family::Lukasiewicz, a, b) == via_neg);
            }
    }

    TEST_CASE("family names") {
        CHECK(family_from_string("luk") == Family::Lukasiewicz);
        CHECK(family_from_string("prod") == Family::Product);
        CHECK(family_from_string("godel") == Family::Goedel);
        CHECK(family_from_string("zadeh") == Family::Zadeh);
        CHECK(!family_from_string("boolean"));
        CHECK(family_name(Family::Product) == "product");
    }
}

namespace {

// Rigorous enclosure of 2^e at 128-bit precision, rounded outward; the
// enclosure width is far below 2^-50 for the exponents used here.
struct Interval {
    mpfr_t lo, hi;
    explicit Interval(const mpq_class& e) {
        mpfr_init2(lo, 128);
        mpfr_init2(hi, 128);
        mpfr_t ef;
        mpfr_init2(ef, 128);
        mpfr_set_q(ef, e.get_mpq_t(), MPFR_RNDD);
        mpfr_ui_pow(lo, 2, ef, MPFR_RNDD);
        mpfr_set_q(ef, e.get_mpq_t(), MPFR_RNDU);
        mpfr_ui_pow(hi, 2, ef, MPFR_RNDU);
        mpfr_nextbelow(lo);
        mpfr_nextabove(hi);
        mpfr_clear(ef);
    }
    Interval(const Interval&) = delete;
    ~Interval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    bool overlaps_product_of(const Interval& a, const Interval& b) const {
        mpfr_t p;
        mpfr_init2(p, 128);
        mpfr_mul(p, a.lo, b.lo, MPFR_RNDD);
        bool ok = mpfr_cmp(p, hi) <= 0;
        mpfr_mul(p, a.hi, b.hi, MPFR_RNDU);
        ok = ok && mpfr_cmp(p, lo) >= 0;
        mpfr_clear(p);
        return ok;
    }
    bool overlaps_quotient_of(const Interval& num, const Interval& den) const {
        mpfr_t q;
        mpfr_init2(q, 128);
        mpfr_div(q, num.lo, den.hi, MPFR_RNDD);
        bool ok = mpfr_cmp(q, hi) <= 0;
        mpfr_div(q, num.hi, den.lo, MPFR_RNDU);
        ok = ok && mpfr_cmp(q, lo) >= 0;
        mpfr_clear(q);
        return ok;
    }
};

}  // namespace

TEST_SUITE("log_dyadic") {
    TEST_CASE("construction and order") {
        CHECK(LogDyadic::pow2(0).is_one());
        CHECK(LogDyadic::zero().is_zero());
        CHECK_THROWS_AS(LogDyadic::pow2(mpq_class(1, 2)), std::domain_error);
        CHECK(LogDyadic::zero() < LogDyadic::pow2(mpq_class(-1000)));
        CHECK(LogDyadic::pow2(mpq_class(-1)) < LogDyadic::pow2(mpq_class(-1, 2)));
        CHECK(LogDyadic::pow2(mpq_class(-1, 2)) < LogDyadic::one());
        CHECK(LogDyadic::pow2(mpq_class(-2, 4)) ==
              LogDyadic::pow2(mpq_class(-1, 2)));
    }

    TEST_CASE("rational views") {
        CHECK(LogDyadic::pow2(mpq_class(-1)).as_rational() == Degree(1, 2));
        CHECK(LogDyadic::pow2(mpq_class(-3)).as_rational() == Degree(1, 8));
        CHECK(LogDyadic::zero().as_rational() == Degree::zero());
        CHECK(!LogDyadic::pow2(mpq_class(-1, 2)).as_rational());
        CHECK(LogDyadic::pow2(mpq_class(-1, 2)).str() == "2^(-1/2)");
    }

    TEST_CASE("t-norm examples") {
        CHECK(ld_tnorm(LogDyadic::pow2(mpq_class(-1, 2)),
                       LogDyadic::pow2(mpq_class(-1, 2))) ==
              LogDyadic::pow2(mpq_class(-1)));
        CHECK(ld_tnorm(LogDyadic::zero(), LogDyadic::pow2(mpq_class(-1)))
                  .is_zero());
        CHECK(ld_tnorm(LogDyadic::pow2(0), LogDyadic::pow2(mpq_class(-1, 4))) ==
              LogDyadic::pow2(mpq_class(-1, 4)));
    }

    TEST_CASE("implication examples") {
        CHECK(ld_implication(LogDyadic::pow2(mpq_class(-1, 4)),
                             LogDyadic::pow2(mpq_class(-1, 2))) ==
              LogDyadic::pow2(mpq_class(-1, 4)));
        CHECK(ld_implication(LogDyadic::pow2(mpq_class(-1)),
                             LogDyadic::pow2(mpq_class(-1)))
                  .is_one());
        CHECK(ld_implication(LogDyadic::pow2(mpq_class(-1)), LogDyadic::zero())
                  .is_zero());
        CHECK(ld_implication(LogDyadic::zero(), LogDyadic::zero()).is_one());
    }

    TEST_CASE("negation examples") {
        CHECK(ld_negation(LogDyadic::zero()).is_one());
        CHECK(ld_negation(LogDyadic::one()).is_zero());
        CHECK(ld_negation(LogDyadic::pow2(mpq_class(-3, 8))).is_zero());
    }

    TEST_CASE("agreement with high-precision interval evaluation") {
        // dyadic exponents -k/2^m
        std::vector<mpq_class> exps;
        for (long m = 0; m <= 4; ++m)
            for (long k = 0; k <= 8; ++k) {
                mpq_class e(-k, 1L << m);
                e.canonicalize();
                exps.push_back(e);
            }
        for (const mpq_class& r : exps) {
            for (const mpq_class& s : exps) {
                LogDyadic a = LogDyadic::pow2(r), b = LogDyadic::pow2(s);
                Interval ia(r), ib(s);
                LogDyadic prod = ld_tnorm(a, b);
                CHECK(Interval(prod.exponent()).overlaps_product_of(ia, ib));
                LogDyadic imp = ld_implication(a, b);
                if (cmp(r, s) > 0) {  // a > b: residuum is the quotient b/a
                    CHECK(Interval(imp.exponent()).overlaps_quotient_of(ib, ia));
                } else {
                    CHECK(imp.is_one());
                }
            }
        }
    }

    TEST_CASE("exact comparison against rationals") {
        CHECK(LogDyadic::pow2(mpq_class(-1)).compare_rational(mpq_class(1, 2)) ==
              std::strong_ordering::equal);
        // 2^(-1/2) = 0.7071... vs 0.7 and 0.71
        CHECK(LogDyadic::pow2(mpq_class(-1, 2))
                  .compare_rational(mpq_class(7, 10)) ==
              std::strong_ordering::greater);
        CHECK(LogDyadic::pow2(mpq_class(-1, 2))
                  .compare_rational(mpq_class(71, 100)) ==
              std::strong_ordering::less);
        // values extremely close to 1 still compare correctly
        mpz_class huge;
        mpz_ui_pow_ui(huge.get_mpz_t(), 2, 63);
        CHECK(LogDyadic::pow2(mpq_class(mpz_class(-1), huge))
                  .compare_rational(mpq_class(15, 16)) ==
              std::strong_ordering::greater);
        CHECK(LogDyadic::zero().compare_rational(mpq_class(0)) ==
              std::strong_ordering::equal);
        CHECK(LogDyadic::one().compare_rational(mpq_class(1)) ==
              std::strong_ordering::equal);
    }
}
