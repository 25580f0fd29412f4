#include "stratum/traceeval.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stratum {

SteinbergProductRep::SteinbergProductRep(Composition b, std::vector<BlockChar> c)
    : blocks(std::move(b)), chars(std::move(c)) {
    if (chars.size() != static_cast<std::size_t>(blocks.length()))
        throw std::invalid_argument("one character per block required");
}

SignedHeckeMatrix hecke_matrix(const SteinbergProductRep& rep) {
    SignedHeckeMatrix m;
    for (int i = 0; i < rep.blocks.length(); ++i) {
        int ni = rep.blocks.parts[i];
        int sign = rep.chars[i] == BlockChar::Quadratic ? -1 : 1;
        std::int64_t sum2 = 0;
        for (int j = 0; j < ni; ++j) {
            HalfInt t(ni - 1 - 2 * j);  // (n_i - 1)/2 - j
            m.entries.push_back({sign, t});
            sum2 += t.twice;
        }
        if (sum2 != 0) throw std::logic_error("block exponents must sum to zero");
    }
    return m;
}

LaurentPoly TraceResult::resolved(bool alpha_odd) const {
    LaurentPoly r(0);
    for (const auto& [k, c] : poly.terms()) {
        MonoKey k2 = k;
        k2.alpha_sign = false;
        r.add_term(k2, (k.alpha_sign && alpha_odd) ? -c : c);
    }
    return r;
}

Rational TraceResult::eval(const Rational& q, std::int64_t alpha) const {
    return poly.eval_signed({}, alpha, q);
}

namespace {

// Evaluation of the theta-truncated constant term for Q at the w-permuted
// Hecke matrix, as a zero-variable polynomial: position j of the Q-variable
// order receives Hecke entry w(j); block i contributes the elementary
// symmetric sum of degree s_i in the alpha-th powers of its entries.
LaurentPoly eval_expansion_at(const ConstantTermExpansion& e, const SignedHeckeMatrix& hm,
                              const Permutation& w) {
    auto off = e.blocks.offsets();
    LaurentPoly total(0);
    for (const auto& sm : e.summands) {
        LaurentPoly term = LaurentPoly::constant(0, Rational(1)).q_shift(sm.qexp);
        for (int i = 0; i < e.blocks.length(); ++i) {
            int si = sm.ext[i];
            int ni = e.blocks.parts[i];
            // the block's own Satake prefactor q^{alpha s_i (n_i - s_i)}
            term = term.q_shift(AffineExp::alpha_times(HalfInt::whole(si * (ni - si))));
            // e_{s_i} over the block's substituted variables
            std::vector<LaurentPoly> esp(si + 1, LaurentPoly(0));
            esp[0] = LaurentPoly::constant(0, Rational(1));
            for (int j = off[i] + 1; j <= off[i + 1]; ++j) {
                const SignedPower& entry = hm.entries[w(j) - 1];
                MonoKey key;
                key.qexp = AffineExp::alpha_times(entry.exp);
                key.alpha_sign = entry.sign < 0;
                LaurentPoly var(0);
                var.add_term(key, Rational(1));
                for (int d = std::min(si, j - off[i]); d >= 1; --d)
                    esp[d] = esp[d] + esp[d - 1] * var;
            }
            term = term * esp[si];
        }
        total = total + term;
    }
    return total;
}

std::vector<Permutation> theta_reps_or_empty(const Composition& lambda, const Composition& mu,
                                             bool parallel) {
    if (!lambda.palindromic() || !mu.palindromic()) return {};
    return parallel ? enumerate_G_theta_PQ(lambda, mu) : enumerate_G_theta_PQ_serial(lambda, mu);
}

TraceResult trace_impl(int n, int s, const SteinbergProductRep& rep, const CosetSign& sign,
                       bool parallel) {
    if (rep.blocks.total() != n) throw std::invalid_argument("rep blocks must sum to n");
    if (s < 0 || s > n) throw std::invalid_argument("s out of range");
    SignedHeckeMatrix hm = hecke_matrix(rep);

    struct Task {
        Composition Q;
        ConstantTermExpansion exp;
        Permutation w;
        int eps = 1;
    };
    std::vector<Task> tasks;
    for (const auto& Q : theta_stable_parabolics(n)) {
        ConstantTermExpansion exp = truncated_constant_term(n, s, Q);
        if (exp.summands.empty()) continue;
        int eps_theta = epsilon_p_theta(Q);
        for (const auto& w : theta_reps_or_empty(rep.blocks, Q, parallel)) {
            // Default eps_{Q,w} cancels eps_{Q,theta} on the spherical line;
            // a user-supplied convention replaces it.
            int eps_w = sign ? sign(Q, w) : eps_theta;
            tasks.push_back({Q, exp, w, eps_theta * eps_w});
        }
    }

    std::vector<LaurentPoly> partial(tasks.size(), LaurentPoly(0));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t t = 0; t < tasks.size(); ++t)
        partial[t] = Rational(tasks[t].eps) * eval_expansion_at(tasks[t].exp, hm, tasks[t].w);

    TraceResult out;
    for (const auto& p : partial) out.poly = out.poly + p;
    return out;
}

}  // namespace

TraceResult twisted_compact_trace(int n, int s, const SteinbergProductRep& rep,
                                  const CosetSign& sign) {
    return trace_impl(n, s, rep, sign, true);
}

TraceResult twisted_compact_trace_serial(int n, int s, const SteinbergProductRep& rep,
                                         const CosetSign& sign) {
    return trace_impl(n, s, rep, sign, false);
}

TraceResult steinberg_shortcut(int n, int s) {
    if (s < 0 || s > n) throw std::invalid_argument("s out of range");
    Composition borel(std::vector<int>(n, 1));
    ConstantTermExpansion exp = truncated_constant_term(n, s, borel);
    SignedHeckeMatrix hm = hecke_matrix(SteinbergProductRep::steinberg(n));
    TraceResult out;
    out.poly = eval_expansion_at(exp, hm, Permutation::identity(n));
    return out;
}

namespace {

// Multiply by p^{e} with e in (1/2)Z, tracking the residual sqrt(p).
PointValue shift_by_p_power(PointValue v, const Rational& p, HalfInt e) {
    std::int64_t e2 = e.twice;
    bool half = ((e2 % 2) + 2) % 2 == 1;
    std::int64_t whole = (e2 - (half ? 1 : 0)) / 2;
    v.r *= pow_rational(p, whole);
    if (half) {
        if (v.sqrt_p) {
            v.r *= p;
            v.sqrt_p = false;
        } else {
            v.sqrt_p = true;
        }
    }
    return v;
}

}  // namespace

PointValue point_count(const GlobalInput& input) {
    if (input.p < 2) throw std::invalid_argument("p must be at least 2");
    KottwitzChoice choice = kottwitz_dispatch(input.n, input.s, input.alpha);
    Rational p(input.p);
    Rational q = p * p;
    Rational sum(0);
    for (const auto& term : input.terms) {
        TraceResult tr = twisted_compact_trace(input.n, input.s, term.rep);
        sum += term.coefficient * tr.eval(q, choice.alpha_eff);
    }
    PointValue out{Rational(input.ker1) * sum, false};
    return shift_by_p_power(out, p, choice.p_exponent);
}

bool parity_relation_check(const GlobalInput& input, std::int64_t k) {
    if (input.n != 2 * input.s) throw std::invalid_argument("parity relation needs n = 2s");
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("k must be positive and odd");
    GlobalInput doubled = input;
    doubled.alpha = 2 * k;
    GlobalInput single = input;
    single.alpha = k;
    PointValue lhs = point_count(doubled);
    PointValue rhs = shift_by_p_power(point_count(single), Rational(input.p),
                                      HalfInt(k * input.s * (input.n - input.s)));
    return lhs == rhs;
}

}  // namespace stratum
