#pragma once

#include <vector>

#include "stratum/composition.hpp"

namespace stratum {

// Permutation of {1..n} stored by images: img[i-1] = w(i).
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i - 1]; }
    Permutation inverse() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

// Coxeter length = number of inversions.
long long inversions(const Permutation& w);

// theta(w)(i) = n + 1 - w(n + 1 - i).
Permutation theta_conjugate(const Permutation& w);

// Contingency matrix of the double coset S_lambda w S_mu: entry (i, j) counts
// positions in mu-block j sent into lambda-block i.
using CosetMatrix = std::vector<std::vector<int>>;
CosetMatrix coset_matrix(const Permutation& w, const Composition& lambda, const Composition& mu);

// Minimal-length representative of the double coset with the given matrix.
Permutation matrix_to_min_rep(const CosetMatrix& m, const Composition& lambda,
                              const Composition& mu);

// Minimal-length representative of S_lambda w S_mu.
Permutation min_double_coset_rep(const Permutation& w, const Composition& lambda,
                                 const Composition& mu);

// All minimal double-coset representatives for S_lambda \ S_n / S_mu, sorted.
// The plain versions use OpenMP when available; the _serial versions are the
// reference implementations.
std::vector<Permutation> enumerate_G_PQ(const Composition& lambda, const Composition& mu);
std::vector<Permutation> enumerate_G_PQ_serial(const Composition& lambda, const Composition& mu);

// Representatives w with w^theta = w whose coset meets S_mu trivially after
// conjugation (0/1 contingency matrix), i.e. the index set of the twisted
// trace formula.
std::vector<Permutation> enumerate_G_theta_PQ(const Composition& lambda, const Composition& mu);
std::vector<Permutation> enumerate_G_theta_PQ_serial(const Composition& lambda,
                                                     const Composition& mu);

// Sign (-1)^{dim of the theta-fixed part of a_P}: requires a palindromic
// composition of length k and equals (-1)^{floor(k/2)}.
int epsilon_p_theta(const Composition& blocks);

}  // namespace stratum
