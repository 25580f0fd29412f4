#pragma once

#include <functional>
#include <vector>

#include "stratum/composition.hpp"
#include "stratum/heckefun.hpp"
#include "stratum/laurent.hpp"
#include "stratum/weylcomb.hpp"

namespace stratum {

enum class BlockChar { Trivial, Quadratic };

// Ind_P^G (x)_i St_{GL_{n_i}}(eps_i): the inducing blocks and their characters.
struct SteinbergProductRep {
    Composition blocks;
    std::vector<BlockChar> chars;

    SteinbergProductRep() = default;
    SteinbergProductRep(Composition b, std::vector<BlockChar> c);
    static SteinbergProductRep steinberg(int n) {
        return SteinbergProductRep(Composition{std::vector<int>{n}}, {BlockChar::Trivial});
    }
};

struct SignedHeckeMatrix {
    std::vector<SignedPower> entries;  // (sign, exponent of q) per position
};

// Per block: exponents (n_i-1)/2, (n_i-3)/2, ..., (1-n_i)/2 descending, sign
// -1 exactly on quadratic blocks.
SignedHeckeMatrix hecke_matrix(const SteinbergProductRep& rep);

// Symbolic trace: zero-variable Laurent polynomial in q with exponents affine
// in alpha; alpha_sign flags carry unresolved (-1)^alpha factors.
struct TraceResult {
    LaurentPoly poly{0};

    // Folds (-1)^alpha flags into the coefficients for fixed alpha parity.
    LaurentPoly resolved(bool alpha_odd) const;
    Rational eval(const Rational& q, std::int64_t alpha) const;

    friend bool operator==(const TraceResult&, const TraceResult&) = default;
};

// Optional replacement for the default eps_{Q,w} normalization; must return
// +1 or -1 for each palindromic Q and representative w.
using CosetSign = std::function<int(const Composition&, const Permutation&)>;

// Tr_theta of the truncated Kottwitz function against the rep: double sum
// over palindromic Q and w in G^theta_{P,Q} of signed evaluations of the
// theta-truncated constant term at the w-permuted Hecke matrix.
TraceResult twisted_compact_trace(int n, int s, const SteinbergProductRep& rep,
                                  const CosetSign& sign = {});
TraceResult twisted_compact_trace_serial(int n, int s, const SteinbergProductRep& rep,
                                         const CosetSign& sign = {});

// Borel-only formula for pi = St_{GL_n}; independent oracle for the trace.
TraceResult steinberg_shortcut(int n, int s);

// Exact value r * sqrt(p)^{sqrt_p}; the square root enters only through the
// n = 2s, odd-alpha scalar.
struct PointValue {
    Rational r{0};
    bool sqrt_p = false;

    friend bool operator==(const PointValue&, const PointValue&) = default;
};

struct GlobalTerm {
    SteinbergProductRep rep;
    Rational coefficient{1};  // N_pi
};

struct GlobalInput {
    int n = 0;
    int s = 0;
    Int p = 2;
    std::int64_t alpha = 1;
    Int ker1 = 1;
    std::vector<GlobalTerm> terms;
};

// ker1 * sum of N_pi * scalar * trace, with function index and scalar from
// kottwitz_dispatch and q = p^2 at evaluation.
PointValue point_count(const GlobalInput& input);

// point_count at alpha = 2k versus p^{(k/2) s (n-s)} times alpha = k; k odd.
bool parity_relation_check(const GlobalInput& input, std::int64_t k);

}  // namespace stratum
