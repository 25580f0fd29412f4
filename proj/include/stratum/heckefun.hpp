#pragma once

#include "stratum/composition.hpp"
#include "stratum/halfint.hpp"
#include "stratum/laurent.hpp"

namespace stratum {

// Satake transform of the Kottwitz function phi_{n,alpha,s}: an alpha-power
// sum of s-subset monomials with a global q-prefactor.  Variables Y_1..Y_n.
LaurentPoly satake_phi(int n, int s);

// Same for the unitary-group function f_{n,alpha,s}.  Variable 0 is the
// similitude X; variables 1..floor(n/2) are X_1..X_{floor(n/2)} after the
// reflection X_i -> X_{n+1-i}^{-1} identifies the second half (the middle
// variable of odd n maps to 1).
LaurentPoly satake_f_gu(int n, int s);

// Which function computes the alpha-th point-count at a prime p, and the
// loose power of p in front of it.
struct KottwitzChoice {
    int n = 0;
    int s = 0;
    std::int64_t alpha_eff = 0;  // alpha to plug into the trace of phi_{n,*,s}
    HalfInt p_exponent{};        // scalar p^{p_exponent}
};

KottwitzChoice kottwitz_dispatch(int n, int s, std::int64_t alpha);

// One summand of a constant-term expansion: tensor factor phi_{n_i,alpha,s_i}
// for the stored blocks, weighted by q^{qexp}.
struct ExpansionSummand {
    ExtComposition ext;  // (s_1, ..., s_k)
    AffineExp qexp{};    // always a pure multiple of alpha here
};

struct ConstantTermExpansion {
    Composition blocks;
    int s = 0;
    std::vector<ExpansionSummand> summands;
};

// Constant term of phi_{n,alpha,s} along the standard parabolic with the given
// Levi blocks (untruncated: every extended composition of s appears).
ConstantTermExpansion constant_term(int n, int s, const Composition& blocks);

// Theta-truncated constant term: keeps only summands whose partial sums
// sum_{j<=i}(s_j - s_{k+1-j}) are positive for every i < k.
ConstantTermExpansion truncated_constant_term(int n, int s, const Composition& blocks);

// Two-step truncation: first pass to the Levi with the given blocks and
// per-block degrees, then expand each Levi block along sub_blocks.  The
// positivity condition is imposed at every index that is not a Levi-block
// boundary.
ConstantTermExpansion truncated_constant_term_levi(const Composition& levi,
                                                   const ExtComposition& s_per_block,
                                                   const Composition& sub_blocks);

// Recombine an expansion into a Laurent polynomial in total() variables by
// multiplying block Satake transforms (each with its own prefactor).  On the
// untruncated expansion this reproduces satake_phi(n, s) exactly.
LaurentPoly expansion_to_poly(const ConstantTermExpansion& e);

// Same polynomial computed the flat way: one global prefactor q^{alpha*s(n-s)}
// in front of prefactor-free block elementary symmetric sums.  Equal to
// expansion_to_poly by construction; kept as an independent path for tests.
LaurentPoly expansion_to_poly_flat(const ConstantTermExpansion& e);

}  // namespace stratum
