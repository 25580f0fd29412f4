#include "stratum/heckefun.hpp"

#include <stdexcept>

namespace stratum {

namespace {

void check_ns(int n, int s) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (s < 0 || s > n) throw std::invalid_argument("s must satisfy 0 <= s <= n");
}

// alpha * s * (n - s) as an AffineExp
AffineExp prefactor(int n, int s) {
    return AffineExp::alpha_times(HalfInt::whole(static_cast<std::int64_t>(s) * (n - s)));
}

// Visit all s-subsets of {1..n} as sorted index vectors.
template <typename F>
void for_each_subset(int n, int s, F&& f) {
    std::vector<int> idx(s);
    auto rec = [&](auto&& self, int start, int k) -> void {
        if (k == s) {
            f(idx);
            return;
        }
        for (int i = start; i <= n - (s - k) + 1; ++i) {
            idx[k] = i;
            self(self, i + 1, k + 1);
        }
    };
    rec(rec, 1, 0);
}

}  // namespace

LaurentPoly satake_phi(int n, int s) {
    check_ns(n, s);
    LaurentPoly p(n);
    AffineExp pre = prefactor(n, s);
    for_each_subset(n, s, [&](const std::vector<int>& idx) {
        MonoKey key;
        key.vars.assign(n, AffineExp{});
        for (int i : idx) key.vars[i - 1] = AffineExp::alpha_times(HalfInt::whole(1));
        key.qexp = pre;
        p.add_term(key, Rational(1));
    });
    return p;
}

LaurentPoly satake_f_gu(int n, int s) {
    check_ns(n, s);
    int m = n / 2;
    LaurentPoly p(1 + m);
    AffineExp pre = prefactor(n, s);
    AffineExp alpha = AffineExp::alpha_times(HalfInt::whole(1));
    for_each_subset(n, s, [&](const std::vector<int>& idx) {
        MonoKey key;
        key.vars.assign(1 + m, AffineExp{});
        key.vars[0] = alpha;  // similitude X^alpha
        for (int i : idx) {
            if (2 * i < n + 1)
                key.vars[i] = key.vars[i] + alpha;
            else if (2 * i > n + 1)
                key.vars[n + 1 - i] = key.vars[n + 1 - i] - alpha;
            // 2i == n+1: middle variable folds to 1
        }
        key.qexp = pre;
        p.add_term(key, Rational(1));
    });
    return p;
}

KottwitzChoice kottwitz_dispatch(int n, int s, std::int64_t alpha) {
    check_ns(n, s);
    if (alpha < 1) throw std::invalid_argument("alpha must be positive");
    KottwitzChoice out{n, s, alpha, HalfInt(0)};
    if (n != 2 * s) return out;
    if (alpha % 2 == 0) {
        out.alpha_eff = alpha / 2;
    } else {
        out.p_exponent = HalfInt(-alpha * static_cast<std::int64_t>(s) * (n - s));
    }
    return out;
}

namespace {

// Common body: enumerate extended compositions, optionally filter, attach the
// q-exponent alpha * (s(n-s) - sum s_i(n_i - s_i)).
ConstantTermExpansion expand(int n, int s, const Composition& blocks, bool truncate) {
    check_ns(n, s);
    if (blocks.total() != n) throw std::invalid_argument("blocks must sum to n");
    ConstantTermExpansion out{blocks, s, {}};
    const auto& parts = blocks.parts;
    int k = blocks.length();
    for (auto& ext : extended_compositions(s, parts)) {
        if (truncate) {
            bool keep = true;
            std::int64_t partial = 0;
            for (int i = 0; i + 1 < k && keep; ++i) {
                partial += ext[i] - ext[k - 1 - i];
                if (partial <= 0) keep = false;
            }
            if (!keep) continue;
        }
        std::int64_t C = static_cast<std::int64_t>(s) * (n - s);
        for (int i = 0; i < k; ++i) C -= static_cast<std::int64_t>(ext[i]) * (parts[i] - ext[i]);
        out.summands.push_back({ext, AffineExp::alpha_times(HalfInt::whole(C))});
    }
    return out;
}

}  // namespace

ConstantTermExpansion constant_term(int n, int s, const Composition& blocks) {
    return expand(n, s, blocks, false);
}

ConstantTermExpansion truncated_constant_term(int n, int s, const Composition& blocks) {
    if (!blocks.palindromic())
        throw std::invalid_argument("truncation needs a theta-stable (palindromic) parabolic");
    return expand(n, s, blocks, true);
}

ConstantTermExpansion truncated_constant_term_levi(const Composition& levi,
                                                   const ExtComposition& s_per_block,
                                                   const Composition& sub_blocks) {
    int t = levi.length();
    if (static_cast<int>(s_per_block.size()) != t)
        throw std::invalid_argument("s_per_block length must match levi length");
    for (int i = 0; i < t; ++i)
        if (s_per_block[i] < 0 || s_per_block[i] > levi.parts[i])
            throw std::invalid_argument("s_per_block entry out of range");
    if (sub_blocks.total() != levi.total())
        throw std::invalid_argument("sub_blocks must sum to the levi total");

    // Split sub_blocks along the levi boundaries; fail if they are not nested.
    std::vector<std::vector<int>> pieces(t);
    {
        std::size_t j = 0;
        for (int i = 0; i < t; ++i) {
            int rem = levi.parts[i];
            while (rem > 0) {
                if (j >= sub_blocks.parts.size() || sub_blocks.parts[j] > rem)
                    throw std::invalid_argument("sub_blocks do not refine the levi blocks");
                pieces[i].push_back(sub_blocks.parts[j]);
                rem -= sub_blocks.parts[j];
                ++j;
            }
        }
    }

    int k = sub_blocks.length();
    // 1-based sub-block indices at which a levi block ends
    std::vector<bool> boundary(k + 1, false);
    {
        int idx = 0;
        for (int i = 0; i < t; ++i) {
            idx += static_cast<int>(pieces[i].size());
            boundary[idx] = true;
        }
    }

    ConstantTermExpansion out{sub_blocks, 0, {}};
    for (int v : s_per_block) out.s += v;

    // Per-levi-block choices, merged, then the positivity filter away from
    // boundaries.
    std::vector<std::vector<ExtComposition>> per_block(t);
    for (int i = 0; i < t; ++i)
        per_block[i] = extended_compositions(s_per_block[i], pieces[i]);

    std::int64_t base = 0;  // sum_i s_i (n_i - s_i)
    for (int i = 0; i < t; ++i)
        base += static_cast<std::int64_t>(s_per_block[i]) * (levi.parts[i] - s_per_block[i]);

    ExtComposition merged(k, 0);
    auto rec = [&](auto&& self, int i, int pos) -> void {
        if (i == t) {
            std::int64_t partial = 0;
            for (int j = 0; j + 1 < k; ++j) {
                partial += merged[j] - merged[k - 1 - j];
                if (!boundary[j + 1] && partial <= 0) return;
            }
            std::int64_t C = base;
            for (int j = 0; j < k; ++j)
                C -= static_cast<std::int64_t>(merged[j]) * (sub_blocks.parts[j] - merged[j]);
            out.summands.push_back({merged, AffineExp::alpha_times(HalfInt::whole(C))});
            return;
        }
        for (auto& choice : per_block[i]) {
            std::copy(choice.begin(), choice.end(), merged.begin() + pos);
            self(self, i + 1, pos + static_cast<int>(choice.size()));
        }
    };
    rec(rec, 0, 0);
    return out;
}

LaurentPoly expansion_to_poly(const ConstantTermExpansion& e) {
    int n = e.blocks.total();
    auto off = e.blocks.offsets();
    LaurentPoly total(n);
    for (const auto& sm : e.summands) {
        LaurentPoly term = LaurentPoly::constant(n, Rational(1)).q_shift(sm.qexp);
        for (int i = 0; i < e.blocks.length(); ++i)
            term = term * satake_phi(e.blocks.parts[i], sm.ext[i]).embed(n, off[i]);
        total = total + term;
    }
    return total;
}

LaurentPoly expansion_to_poly_flat(const ConstantTermExpansion& e) {
    int n = e.blocks.total();
    auto off = e.blocks.offsets();
    AffineExp flat = AffineExp::alpha_times(HalfInt::whole(static_cast<std::int64_t>(e.s) * (n - e.s)));
    LaurentPoly total(n);
    for (const auto& sm : e.summands) {
        LaurentPoly term = LaurentPoly::constant(n, Rational(1));
        for (int i = 0; i < e.blocks.length(); ++i) {
            // prefactor-free block transform
            AffineExp pre = AffineExp::alpha_times(
                HalfInt::whole(static_cast<std::int64_t>(sm.ext[i]) * (e.blocks.parts[i] - sm.ext[i])));
            term = term * satake_phi(e.blocks.parts[i], sm.ext[i]).q_shift(-pre).embed(n, off[i]);
        }
        total = total + term.q_shift(flat);
    }
    return total;
}

}  // namespace stratum
