#pragma once

#include <map>
#include <utility>
#include <vector>

#include "stratum/halfint.hpp"
#include "stratum/rational.hpp"

namespace stratum {

// Monomial key: one AffineExp per variable plus a global power of q.  The
// alpha_sign flag tracks an extra factor (-1)^alpha picked up when a variable
// carrying a quadratic-character sign is raised to the alpha-th power.
struct MonoKey {
    std::vector<AffineExp> vars;
    AffineExp qexp{};
    bool alpha_sign = false;

    friend auto operator<=>(const MonoKey&, const MonoKey&) = default;
};

// Evaluation point for one variable: value sign * q^exp with sign = +-1.
struct SignedPower {
    int sign = 1;
    HalfInt exp{};
};

// Laurent polynomial over Q in a fixed number of variables, with exponents in
// (1/2)Z that may depend affinely on a symbolic alpha.  Zero coefficients are
// never stored.
class LaurentPoly {
public:
    explicit LaurentPoly(int num_vars = 0) : num_vars_(num_vars) {}

    static LaurentPoly constant(int num_vars, const Rational& c) {
        LaurentPoly p(num_vars);
        MonoKey key;
        key.vars.assign(num_vars, AffineExp{});
        p.add_term(key, c);
        return p;
    }

    // q^e * prod_j X_j^{exps[j]}
    static LaurentPoly monomial(int num_vars, const Rational& c, std::vector<AffineExp> exps,
                                AffineExp qexp = {}, bool alpha_sign = false) {
        if (static_cast<int>(exps.size()) != num_vars)
            throw std::invalid_argument("monomial: exponent count != num_vars");
        LaurentPoly p(num_vars);
        p.add_term(MonoKey{std::move(exps), qexp, alpha_sign}, c);
        return p;
    }

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<MonoKey, Rational>& terms() const { return terms_; }

    void add_term(const MonoKey& key, const Rational& c) {
        if (static_cast<int>(key.vars.size()) != num_vars_)
            throw std::invalid_argument("add_term: variable count mismatch");
        if (c == 0) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_compatible(b);
        LaurentPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_compatible(b);
        LaurentPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_compatible(b);
        LaurentPoly r(a.num_vars_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                MonoKey k;
                k.vars.resize(a.num_vars_);
                for (int j = 0; j < a.num_vars_; ++j) k.vars[j] = ka.vars[j] + kb.vars[j];
                k.qexp = ka.qexp + kb.qexp;
                k.alpha_sign = ka.alpha_sign != kb.alpha_sign;
                r.add_term(k, ca * cb);
            }
        }
        return r;
    }

    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a) {
        LaurentPoly r(a.num_vars_);
        for (const auto& [k, coef] : a.terms_) r.add_term(k, c * coef);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

    // Multiply by q^e.
    LaurentPoly q_shift(AffineExp e) const {
        LaurentPoly r(num_vars_);
        for (const auto& [k, c] : terms_) {
            MonoKey k2 = k;
            k2.qexp = k.qexp + e;
            r.add_term(k2, c);
        }
        return r;
    }

    // Polynomial in a larger variable set with this one's variable j mapped to
    // offset + j; new variables get exponent zero.
    LaurentPoly embed(int total_vars, int offset) const {
        if (offset < 0 || offset + num_vars_ > total_vars)
            throw std::invalid_argument("embed: block out of range");
        LaurentPoly r(total_vars);
        for (const auto& [k, c] : terms_) {
            MonoKey k2;
            k2.vars.assign(total_vars, AffineExp{});
            for (int j = 0; j < num_vars_; ++j) k2.vars[offset + j] = k.vars[j];
            k2.qexp = k.qexp;
            k2.alpha_sign = k.alpha_sign;
            r.add_term(k2, c);
        }
        return r;
    }

    // Exact evaluation: variable j takes value point[j].sign * q^{point[j].exp},
    // alpha a concrete integer.  Throws when the result would need a square
    // root of q that does not exist exactly, or when a signed variable carries
    // a non-integer exponent.
    Rational eval_signed(const std::vector<SignedPower>& point, std::int64_t alpha,
                         const Rational& q) const {
        if (static_cast<int>(point.size()) != num_vars_)
            throw std::invalid_argument("eval_signed: point size mismatch");
        Rational total(0);
        for (const auto& [k, c] : terms_) {
            // exponent of q accumulated in quarter units
            std::int64_t quarter = 2 * k.qexp.value_twice(alpha);
            int sign = 1;
            for (int j = 0; j < num_vars_; ++j) {
                std::int64_t e2 = k.vars[j].value_twice(alpha);
                quarter += e2 * point[j].exp.twice;
                if (point[j].sign < 0) {
                    if (e2 % 2 != 0)
                        throw std::invalid_argument(
                            "eval_signed: signed variable with half-integer exponent");
                    if ((e2 / 2) % 2 != 0) sign = -sign;
                }
            }
            if (k.alpha_sign && alpha % 2 != 0) sign = -sign;
            if (quarter % 2 != 0)
                throw std::invalid_argument("eval_signed: quarter-integer q-exponent");
            std::int64_t e2 = quarter / 2;  // twice the q-exponent
            Rational val;
            if (e2 % 2 == 0) {
                val = pow_rational(q, e2 / 2);
            } else {
                Rational root;
                if (!sqrt_exact(q, root))
                    throw std::invalid_argument("eval_signed: q has no exact square root");
                val = pow_rational(root, e2);
            }
            total += (sign < 0 ? -c : c) * val;
        }
        return total;
    }

    // Convenience for unsigned points (all signs +1).
    Rational eval(const std::vector<HalfInt>& exps, std::int64_t alpha, const Rational& q) const {
        std::vector<SignedPower> pt(exps.size());
        for (std::size_t j = 0; j < exps.size(); ++j) pt[j] = {1, exps[j]};
        return eval_signed(pt, alpha, q);
    }

private:
    void check_compatible(const LaurentPoly& o) const {
        if (num_vars_ != o.num_vars_)
            throw std::invalid_argument("variable count mismatch between polynomials");
    }

    int num_vars_;
    std::map<MonoKey, Rational> terms_;
};

}  // namespace stratum
