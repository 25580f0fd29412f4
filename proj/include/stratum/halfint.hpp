#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace stratum {

// Element of (1/2)Z, stored as twice its value so arithmetic stays exact.
struct HalfInt {
    std::int64_t twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t tw) : twice(tw) {}
    static constexpr HalfInt whole(std::int64_t v) { return HalfInt(2 * v); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr std::int64_t as_integer() const {
        if (!is_integer()) throw std::invalid_argument("half-integer where integer required");
        return twice / 2;
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return HalfInt(k * a.twice); }
    HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
    HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

// Exponent of the form c + a*alpha with c, a in (1/2)Z; alpha stays symbolic
// until evaluation.
struct AffineExp {
    HalfInt c{};  // constant part
    HalfInt a{};  // coefficient of alpha

    constexpr AffineExp() = default;
    constexpr AffineExp(HalfInt c_, HalfInt a_) : c(c_), a(a_) {}
    static constexpr AffineExp constant(HalfInt v) { return AffineExp(v, HalfInt(0)); }
    static constexpr AffineExp alpha_times(HalfInt v) { return AffineExp(HalfInt(0), v); }

    constexpr bool is_zero() const { return c.twice == 0 && a.twice == 0; }

    // twice the value of the exponent at a concrete alpha
    constexpr std::int64_t value_twice(std::int64_t alpha) const {
        return c.twice + a.twice * alpha;
    }

    friend constexpr AffineExp operator+(AffineExp x, AffineExp y) {
        return AffineExp(x.c + y.c, x.a + y.a);
    }
    friend constexpr AffineExp operator-(AffineExp x, AffineExp y) {
        return AffineExp(x.c - y.c, x.a - y.a);
    }
    friend constexpr AffineExp operator-(AffineExp x) { return AffineExp(-x.c, -x.a); }
    friend constexpr AffineExp operator*(std::int64_t k, AffineExp x) {
        return AffineExp(k * x.c, k * x.a);
    }
    friend constexpr auto operator<=>(AffineExp, AffineExp) = default;

    std::string str() const {
        if (a.twice == 0) return c.str();
        std::string s;
        if (c.twice != 0) s = c.str() + " + ";
        s += a.str() + "*alpha";
        return s;
    }
};

}  // namespace stratum
