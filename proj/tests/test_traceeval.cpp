#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stratum/traceeval.hpp"

using namespace stratum;

namespace {

// Single term c * q^{(a/2) alpha + c0/2}, optionally alpha-flagged.
TraceResult mono(const Rational& c, std::int64_t a2, std::int64_t c2 = 0, bool flag = false) {
    TraceResult tr;
    MonoKey key;
    key.qexp = AffineExp(HalfInt(c2), HalfInt(a2));
    key.alpha_sign = flag;
    tr.poly.add_term(key, c);
    return tr;
}

std::vector<SteinbergProductRep> all_reps(int n) {
    std::vector<SteinbergProductRep> out;
    for (const auto& blocks : all_compositions(n)) {
        int k = blocks.length();
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<BlockChar> chars(k, BlockChar::Trivial);
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) chars[i] = BlockChar::Quadratic;
            out.push_back(SteinbergProductRep(blocks, chars));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("hecke matrix shapes") {
    SignedHeckeMatrix st2 = hecke_matrix(SteinbergProductRep::steinberg(2));
    REQUIRE(st2.entries.size() == 2);
    CHECK(st2.entries[0].sign == 1);
    CHECK(st2.entries[0].exp == HalfInt(1));
    CHECK(st2.entries[1].exp == HalfInt(-1));

    SignedHeckeMatrix mixed =
        hecke_matrix(SteinbergProductRep(Composition{1, 1},
                                         {BlockChar::Trivial, BlockChar::Quadratic}));
    REQUIRE(mixed.entries.size() == 2);
    CHECK(mixed.entries[0] .sign == 1);
    CHECK(mixed.entries[0].exp == HalfInt(0));
    CHECK(mixed.entries[1].sign == -1);
    CHECK(mixed.entries[1].exp == HalfInt(0));

    SignedHeckeMatrix st3 = hecke_matrix(SteinbergProductRep::steinberg(3));
    REQUIRE(st3.entries.size() == 3);
    CHECK(st3.entries[0].exp == HalfInt::whole(1));
    CHECK(st3.entries[1].exp == HalfInt(0));
    CHECK(st3.entries[2].exp == HalfInt::whole(-1));

    // per-block exponents sum to zero
    for (const auto& rep : all_reps(4)) {
        SignedHeckeMatrix m = hecke_matrix(rep);
        auto off = rep.blocks.offsets();
        for (int i = 0; i < rep.blocks.length(); ++i) {
            std::int64_t sum2 = 0;
            for (int j = off[i]; j < off[i + 1]; ++j) sum2 += m.entries[j].exp.twice;
            CHECK(sum2 == 0);
        }
    }
}

TEST_CASE("steinberg shortcut closed forms") {
    CHECK(steinberg_shortcut(2, 1) == mono(Rational(1), 3));  // q^{3 alpha/2}
    CHECK(steinberg_shortcut(3, 1) == mono(Rational(1), 6));  // q^{3 alpha}
    CHECK(steinberg_shortcut(2, 2).poly.is_zero());
    CHECK(steinberg_shortcut(2, 0).poly.is_zero());
    CHECK(steinberg_shortcut(1, 0) == mono(Rational(1), 0));
}

TEST_CASE("twisted compact trace on Steinberg matches the shortcut") {
    for (int n = 1; n <= 5; ++n) {
        for (int s = 0; s <= n; ++s) {
            TraceResult expected = steinberg_shortcut(n, s);
            CHECK(twisted_compact_trace(n, s, SteinbergProductRep::steinberg(n)) == expected);
            CHECK(twisted_compact_trace_serial(n, s, SteinbergProductRep::steinberg(n)) ==
                  expected);
        }
    }
}

TEST_CASE("trace worked examples") {
    CHECK(twisted_compact_trace(2, 1, SteinbergProductRep::steinberg(2)) == mono(Rational(1), 3));
    CHECK(twisted_compact_trace(3, 1, SteinbergProductRep::steinberg(3)) == mono(Rational(1), 6));
    // s = 0: only Q = (n) can contribute and it needs a 0/1 margin matrix
    CHECK(twisted_compact_trace(2, 0, SteinbergProductRep::steinberg(2)).poly.is_zero());
    SteinbergProductRep borel2(Composition{1, 1}, {BlockChar::Trivial, BlockChar::Trivial});
    CHECK(twisted_compact_trace(2, 0, borel2) == mono(Rational(1), 0));
}

TEST_CASE("trace with a quadratic character tracks alpha parity") {
    SteinbergProductRep rep(Composition{1, 1}, {BlockChar::Trivial, BlockChar::Quadratic});
    TraceResult tr = twisted_compact_trace(2, 1, rep);
    // Q=(2): q^alpha (1 + (-1)^alpha); Q=(1,1): q^alpha + q^alpha (-1)^alpha.
    TraceResult expected = mono(Rational(2), 2);
    expected.poly = expected.poly + mono(Rational(2), 2, 0, true).poly;
    CHECK(tr == expected);
    CHECK(tr.resolved(false).eval_signed({}, 2, Rational(9)) == Rational(4 * 81));
    CHECK(tr.resolved(true).is_zero());
    CHECK(tr.eval(Rational(9), 3) == 0);
    CHECK(tr.eval(Rational(9), 2) == Rational(4 * 81));
}

TEST_CASE("even alpha trace is independent of characters at the symbolic level") {
    for (int n = 1; n <= 3; ++n) {
        for (int s = 0; s <= n; ++s) {
            for (const auto& rep : all_reps(n)) {
                SteinbergProductRep plain(rep.blocks,
                                          std::vector<BlockChar>(rep.blocks.length(),
                                                                 BlockChar::Trivial));
                CHECK(twisted_compact_trace(n, s, rep).resolved(false) ==
                      twisted_compact_trace(n, s, plain).resolved(false));
            }
        }
    }
}

TEST_CASE("numeric trace evaluation") {
    TraceResult tr = twisted_compact_trace(2, 1, SteinbergProductRep::steinberg(2));
    CHECK(tr.eval(Rational(9), 2) == Rational(729));      // (9)^{3*2/2}
    CHECK(tr.eval(Rational(4), 1) == Rational(8));        // 4^{3/2}
    CHECK_THROWS_AS(tr.eval(Rational(2), 1), std::invalid_argument);
}

TEST_CASE("custom coset sign convention flips the default normalization") {
    auto plus_one = [](const Composition&, const Permutation&) { return 1; };
    TraceResult tr = twisted_compact_trace(2, 1, SteinbergProductRep::steinberg(2), plus_one);
    // eps_{(1,1),theta} = -1 is then exposed instead of cancelled
    CHECK(tr == mono(Rational(-1), 3));
}

TEST_CASE("point count examples") {
    GlobalInput input;
    input.n = 2;
    input.s = 1;
    input.p = 3;
    input.ker1 = 1;

    SUBCASE("empty terms") {
        input.alpha = 2;
        CHECK(point_count(input) == PointValue{Rational(0), false});
    }

    input.terms.push_back({SteinbergProductRep::steinberg(2), Rational(1)});

    SUBCASE("case 2: even alpha") {
        input.alpha = 2;
        CHECK(point_count(input) == PointValue{Rational(27), false});  // p^3
    }

    SUBCASE("case 3: odd alpha picks up sqrt(p)") {
        input.alpha = 1;
        // p^{-1/2} * (p^2)^{3/2} = p^{5/2} = 9 sqrt(3)
        CHECK(point_count(input) == PointValue{Rational(9), true});
    }

    SUBCASE("case 1: n != 2s") {
        GlobalInput odd;
        odd.n = 3;
        odd.s = 1;
        odd.p = 2;
        odd.alpha = 2;
        odd.terms.push_back({SteinbergProductRep::steinberg(3), Rational(1)});
        // trace q^{3 alpha} at q = 4, alpha = 2
        CHECK(point_count(odd) == PointValue{Rational(4096), false});
    }

    SUBCASE("coefficients and ker1 scale linearly") {
        input.alpha = 2;
        input.ker1 = 5;
        input.terms[0].coefficient = Rational(-2, 3);
        CHECK(point_count(input) == PointValue{Rational(-90), false});
    }
}

TEST_CASE("parity relation") {
    GlobalInput input;
    input.n = 2;
    input.s = 1;
    input.p = 3;
    input.terms.push_back({SteinbergProductRep::steinberg(2), Rational(1)});
    CHECK(parity_relation_check(input, 1));

    GlobalInput empty;
    empty.n = 2;
    empty.s = 1;
    empty.p = 5;
    CHECK(parity_relation_check(empty, 3));

    GlobalInput multi;
    multi.n = 4;
    multi.s = 2;
    multi.p = 2;
    multi.ker1 = 3;
    multi.terms.push_back({SteinbergProductRep::steinberg(4), Rational(2)});
    multi.terms.push_back(
        {SteinbergProductRep(Composition{2, 2}, {BlockChar::Quadratic, BlockChar::Trivial}),
         Rational(1, 2)});
    CHECK(parity_relation_check(multi, 3));

    CHECK_THROWS_AS(parity_relation_check(multi, 2), std::invalid_argument);
    GlobalInput bad;
    bad.n = 3;
    bad.s = 1;
    CHECK_THROWS_AS(parity_relation_check(bad, 1), std::invalid_argument);
}

TEST_CASE("parity relation on randomized inputs") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> prime_pick(0, 2), coef(-3, 3), k_pick(0, 1);
    const Int primes[3] = {2, 3, 5};
    for (int trial = 0; trial < 10; ++trial) {
        GlobalInput input;
        input.s = 1 + trial % 2;
        input.n = 2 * input.s;
        input.p = primes[prime_pick(rng)];
        input.ker1 = 1 + (trial % 3);
        auto reps = all_reps(input.n);
        std::uniform_int_distribution<std::size_t> rep_pick(0, reps.size() - 1);
        for (int t = 0; t < 2; ++t)
            input.terms.push_back({reps[rep_pick(rng)], Rational(coef(rng))});
        CHECK(parity_relation_check(input, k_pick(rng) == 0 ? 1 : 3));
    }
}
