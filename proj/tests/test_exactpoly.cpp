#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stratum/laurent.hpp"

using namespace stratum;

namespace {

// Small random polynomial over 2 variables with exponents in [-2, 2] + alpha
// coefficients in {0, 1}; deterministic for a given seed.
LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), coef(-3, 3), e(-2, 2), a(0, 1);
    LaurentPoly p(2);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        MonoKey key;
        key.vars = {AffineExp(HalfInt::whole(e(rng)), HalfInt::whole(a(rng))),
                    AffineExp(HalfInt::whole(e(rng)), HalfInt::whole(a(rng)))};
        key.qexp = AffineExp(HalfInt::whole(e(rng)), HalfInt::whole(a(rng)));
        p.add_term(key, Rational(coef(rng)));
    }
    return p;
}

LaurentPoly var_power(int nv, int j, AffineExp e) {
    std::vector<AffineExp> exps(nv);
    exps[j] = e;
    return LaurentPoly::monomial(nv, Rational(1), exps);
}

const AffineExp kAlpha = AffineExp::alpha_times(HalfInt::whole(1));

}  // namespace

TEST_CASE("halfint arithmetic is exact") {
    HalfInt h(3);  // 3/2
    CHECK(!h.is_integer());
    CHECK((h + h).as_integer() == 3);
    CHECK((h - HalfInt(1)).as_integer() == 1);
    CHECK((-h).twice == -3);
    CHECK(HalfInt::whole(5).as_integer() == 5);
    CHECK_THROWS_AS(h.as_integer(), std::invalid_argument);
}

TEST_CASE("affine exponents resolve at alpha") {
    AffineExp e(HalfInt(1), HalfInt::whole(2));  // 1/2 + 2*alpha
    CHECK(e.value_twice(3) == 13);
    CHECK((e + e).value_twice(1) == 2 * e.value_twice(1));
    CHECK((-e).value_twice(5) == -e.value_twice(5));
    CHECK((3 * e).value_twice(2) == 3 * e.value_twice(2));
}

TEST_CASE("rational parsing and printing round-trip") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_fraction_string(Rational(-5, 10)) == "-1/2");
    CHECK(to_fraction_string(Rational(6)) == "6");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK(pow_rational(Rational(2, 3), -2) == Rational(9, 4));
    Rational root;
    CHECK(sqrt_exact(Rational(9, 4), root));
    CHECK(root == Rational(3, 2));
    CHECK(!sqrt_exact(Rational(2), root));
}

TEST_CASE("additive inverse cancels to the zero polynomial") {
    LaurentPoly y1 = var_power(2, 0, AffineExp::constant(HalfInt::whole(1)));
    CHECK((y1 + (Rational(-1) * y1)).is_zero());
}

TEST_CASE("disjoint supports stay separate") {
    AffineExp one = AffineExp::constant(HalfInt::whole(1));
    LaurentPoly a = var_power(2, 0, one).q_shift(one);
    LaurentPoly b = var_power(2, 1, one).q_shift(one);
    CHECK((a + b).term_count() == 2);
    CHECK((a + a).term_count() == 1);
}

TEST_CASE("unit monomials multiply to 1") {
    AffineExp one = AffineExp::constant(HalfInt::whole(1));
    LaurentPoly y = var_power(1, 0, one);
    LaurentPoly yinv = var_power(1, 0, -one);
    CHECK(y * yinv == LaurentPoly::constant(1, Rational(1)));
}

TEST_CASE("binomial square") {
    AffineExp one = AffineExp::constant(HalfInt::whole(1));
    LaurentPoly e1 = var_power(2, 0, one) + var_power(2, 1, one);
    LaurentPoly sq = e1 * e1;
    CHECK(sq.term_count() == 3);
    LaurentPoly cross = var_power(2, 0, one) * var_power(2, 1, one);
    CHECK(sq - Rational(2) * cross - var_power(2, 0, 2 * one) - var_power(2, 1, 2 * one) ==
          LaurentPoly(2));
}

TEST_CASE("affine exponents add under multiplication") {
    LaurentPoly a = var_power(2, 0, kAlpha).q_shift(kAlpha);
    LaurentPoly b = var_power(2, 1, kAlpha).q_shift(kAlpha);
    LaurentPoly prod = a * b;
    REQUIRE(prod.term_count() == 1);
    const auto& [key, c] = *prod.terms().begin();
    CHECK(c == 1);
    CHECK(key.qexp == 2 * kAlpha);
    CHECK(key.vars[0] == kAlpha);
    CHECK(key.vars[1] == kAlpha);
}

TEST_CASE("ring axioms on randomized polynomials") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(987123);
    std::vector<SignedPower> point = {{1, HalfInt(1)}, {-1, HalfInt::whole(1)}};
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        for (std::int64_t alpha : {1, 2, 4}) {
            Rational q(4);
            CHECK((a + b).eval_signed(point, alpha, q) ==
                  a.eval_signed(point, alpha, q) + b.eval_signed(point, alpha, q));
            CHECK((a * b).eval_signed(point, alpha, q) ==
                  a.eval_signed(point, alpha, q) * b.eval_signed(point, alpha, q));
        }
    }
}

TEST_CASE("signed evaluation semantics") {
    // eval of Y1 at ((+1, 1/2)), alpha=2, q=9 -> 9^(1/2)... the spec case: 9
    LaurentPoly y1 = var_power(1, 0, AffineExp::constant(HalfInt::whole(1)));
    CHECK(y1.eval_signed({{1, HalfInt(1)}}, 2, Rational(9)) == Rational(3));
    // Y1^alpha at ((-1, 1/2)), alpha=3, q=4 -> (-2)^3 = -8
    LaurentPoly y1a = var_power(1, 0, kAlpha);
    CHECK(y1a.eval_signed({{-1, HalfInt(1)}}, 3, Rational(4)) == Rational(-8));
    // q^alpha * Y1^alpha at ((+1, 1/2)), alpha=2, q=4 -> 4^2 * 4^1 = 64
    LaurentPoly m = y1a.q_shift(kAlpha);
    CHECK(m.eval_signed({{1, HalfInt(1)}}, 2, Rational(4)) == Rational(64));
}

TEST_CASE("alpha-parity sign flag") {
    MonoKey key;
    key.qexp = kAlpha;
    key.alpha_sign = true;
    LaurentPoly p(0);
    p.add_term(key, Rational(1));
    CHECK(p.eval_signed({}, 2, Rational(3)) == Rational(9));
    CHECK(p.eval_signed({}, 3, Rational(3)) == Rational(-27));
}

TEST_CASE("half-exponent evaluation needs an exact square root") {
    LaurentPoly p = LaurentPoly::constant(0, Rational(1)).q_shift(
        AffineExp::constant(HalfInt(3)));  // q^{3/2}
    CHECK(p.eval_signed({}, 1, Rational(4)) == Rational(8));
    CHECK_THROWS_AS(p.eval_signed({}, 1, Rational(2)), std::invalid_argument);
    // signed variable with a half-integer exponent has no parity
    LaurentPoly y = var_power(1, 0, AffineExp::constant(HalfInt(1)));
    CHECK_THROWS_AS(y.eval_signed({{-1, HalfInt::whole(1)}}, 1, Rational(4)),
                    std::invalid_argument);
}

TEST_CASE("integer inputs with integer exponents give integers") {
    std::mt19937 rng(5551);
    std::vector<SignedPower> point = {{1, HalfInt::whole(2)}, {-1, HalfInt::whole(1)}};
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly a = random_poly(rng);
        Rational v = a.eval_signed(point, 2, Rational(3));
        // exponents may be negative; clearing the denominator must land in Z
        CHECK(denominator(v * pow_rational(Rational(3), 40)) == 1);
    }
}

TEST_CASE("embedding preserves products") {
    AffineExp one = AffineExp::constant(HalfInt::whole(1));
    LaurentPoly y = var_power(1, 0, one);
    LaurentPoly emb = y.embed(3, 2);
    CHECK(emb.num_vars() == 3);
    const auto& key = emb.terms().begin()->first;
    CHECK(key.vars[2] == one);
    CHECK(key.vars[0].is_zero());
    CHECK_THROWS_AS(y.embed(3, 3), std::invalid_argument);
}

TEST_CASE("variable-count mismatches are rejected") {
    LaurentPoly a(1), b(2);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a.eval_signed({}, 1, Rational(2)), std::invalid_argument);
}
