#include "stratum/weylcomb.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stratum {

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
        if (v < 1 || v > static_cast<int>(img.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    Permutation w;
    w.img = std::move(img);
    return w;
}

Permutation Permutation::inverse() const {
    Permutation w;
    w.img.resize(img.size());
    for (int i = 1; i <= size(); ++i) w.img[img[i - 1] - 1] = i;
    return w;
}

long long inversions(const Permutation& w) {
    long long count = 0;
    int n = w.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w.img[i] > w.img[j]) ++count;
    return count;
}

Permutation theta_conjugate(const Permutation& w) {
    int n = w.size();
    Permutation r;
    r.img.resize(n);
    for (int i = 1; i <= n; ++i) r.img[i - 1] = n + 1 - w(n + 1 - i);
    return r;
}

CosetMatrix coset_matrix(const Permutation& w, const Composition& lambda, const Composition& mu) {
    int n = w.size();
    if (lambda.total() != n || mu.total() != n)
        throw std::invalid_argument("composition totals must equal permutation size");
    CosetMatrix m(lambda.length(), std::vector<int>(mu.length(), 0));
    for (int pos = 1; pos <= n; ++pos) m[lambda.block_of(w(pos))][mu.block_of(pos)]++;
    return m;
}

Permutation matrix_to_min_rep(const CosetMatrix& m, const Composition& lambda,
                              const Composition& mu) {
    int rows = lambda.length(), cols = mu.length();
    if (static_cast<int>(m.size()) != rows)
        throw std::invalid_argument("matrix row count mismatch");
    // values of each cell: row-major fill from each lambda block
    std::vector<std::vector<std::vector<int>>> cell_vals(rows,
                                                         std::vector<std::vector<int>>(cols));
    auto loff = lambda.offsets();
    for (int i = 0; i < rows; ++i) {
        int next = loff[i] + 1;
        for (int j = 0; j < cols; ++j)
            for (int c = 0; c < m[i][j]; ++c) cell_vals[i][j].push_back(next++);
        if (next != loff[i + 1] + 1) throw std::invalid_argument("row sum != lambda part");
    }
    // positions of each cell: column-major fill from each mu block
    int n = lambda.total();
    std::vector<int> img(n, 0);
    auto moff = mu.offsets();
    for (int j = 0; j < cols; ++j) {
        int next = moff[j] + 1;
        for (int i = 0; i < rows; ++i)
            for (int v : cell_vals[i][j]) img[next++ - 1] = v;
        if (next != moff[j + 1] + 1) throw std::invalid_argument("column sum != mu part");
    }
    return Permutation(std::move(img));
}

Permutation min_double_coset_rep(const Permutation& w, const Composition& lambda,
                                 const Composition& mu) {
    return matrix_to_min_rep(coset_matrix(w, lambda, mu), lambda, mu);
}

namespace {

// Enumerates non-negative (or 0/1) rows of the given sum within the remaining
// column budgets, calling next(row) for each; budgets are restored afterwards.
void enum_rows(int cols, int row_sum, bool zero_one, std::vector<int>& col_rem,
               const std::function<void(const std::vector<int>&)>& next) {
    std::vector<int> row(cols, 0);
    auto rec = [&](auto&& self, int j, int need) -> void {
        if (j == cols) {
            if (need == 0) next(row);
            return;
        }
        int hi = std::min(col_rem[j], need);
        if (zero_one) hi = std::min(hi, 1);
        for (int v = 0; v <= hi; ++v) {
            row[j] = v;
            col_rem[j] -= v;
            self(self, j + 1, need - v);
            col_rem[j] += v;
        }
        row[j] = 0;
    };
    rec(rec, 0, row_sum);
}

// Completes a partially built margin matrix from row 'start' down and converts
// each completed matrix to its minimal representative.
void complete_plain(const Composition& lambda, const Composition& mu, CosetMatrix& m,
                    std::vector<int>& col_rem, int start, std::vector<Permutation>& sink) {
    if (start == lambda.length()) {
        for (int r : col_rem)
            if (r != 0) return;
        sink.push_back(matrix_to_min_rep(m, lambda, mu));
        return;
    }
    enum_rows(mu.length(), lambda.parts[start], false, col_rem, [&](const std::vector<int>& row) {
        m[start] = row;
        complete_plain(lambda, mu, m, col_rem, start + 1, sink);
    });
}

std::vector<Permutation> finalize(std::vector<Permutation> out) {
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> enum_G_PQ_impl(const Composition& lambda, const Composition& mu,
                                        bool parallel) {
    if (lambda.total() != mu.total()) throw std::invalid_argument("composition totals differ");
    int rows = lambda.length(), cols = mu.length();

    // Collect first-row candidates, then finish each stub independently.
    std::vector<std::vector<int>> stubs;
    {
        std::vector<int> col_rem = mu.parts;
        enum_rows(cols, lambda.parts[0], false, col_rem,
                  [&](const std::vector<int>& row) { stubs.push_back(row); });
    }
    std::vector<std::vector<Permutation>> buckets(stubs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t t = 0; t < stubs.size(); ++t) {
        CosetMatrix m(rows, std::vector<int>(cols, 0));
        m[0] = stubs[t];
        std::vector<int> col_rem = mu.parts;
        for (int j = 0; j < cols; ++j) col_rem[j] -= m[0][j];
        complete_plain(lambda, mu, m, col_rem, 1, buckets[t]);
    }
    std::vector<Permutation> out;
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return finalize(std::move(out));
}

// Fills mirror-pair rows (i, rows-1-i) of a rotation-invariant 0/1 matrix from
// pair index 'i' on; the middle row of odd length must equal its own reversal
// and exactly exhaust the remaining column budgets.
void complete_rotinv(const Composition& lambda, const Composition& mu, CosetMatrix& m,
                     std::vector<int>& col_rem, int i, std::vector<Permutation>& sink) {
    int rows = lambda.length(), cols = mu.length();
    int half = rows / 2;
    if (i == half) {
        if (rows % 2 == 1) {
            std::vector<int> row(cols, 0);
            auto fill = [&](auto&& self, int j, int need) -> void {
                if (2 * j >= cols) {
                    if (need == 0) {
                        m[half] = row;
                        if (std::equal(col_rem.begin(), col_rem.end(), row.begin()))
                            sink.push_back(matrix_to_min_rep(m, lambda, mu));
                    }
                    return;
                }
                int mirror = cols - 1 - j;
                int width = (j == mirror) ? 1 : 2;
                for (int v = 0; v <= 1 && v * width <= need; ++v) {
                    if (v > col_rem[j] || (width == 2 && v > col_rem[mirror])) continue;
                    row[j] = v;
                    row[mirror] = v;
                    self(self, j + 1, need - v * width);
                }
                row[j] = row[mirror] = 0;
            };
            fill(fill, 0, lambda.parts[half]);
        } else if (std::all_of(col_rem.begin(), col_rem.end(), [](int r) { return r == 0; })) {
            sink.push_back(matrix_to_min_rep(m, lambda, mu));
        }
        return;
    }
    enum_rows(cols, lambda.parts[i], true, col_rem, [&](const std::vector<int>& row) {
        bool feasible = true;
        for (int c = 0; c < cols; ++c) {
            m[i][c] = row[c];
            m[rows - 1 - i][c] = row[cols - 1 - c];
            col_rem[cols - 1 - c] -= row[c];  // charge the mirrored row
            if (col_rem[cols - 1 - c] < 0) feasible = false;
        }
        if (feasible) complete_rotinv(lambda, mu, m, col_rem, i + 1, sink);
        for (int c = 0; c < cols; ++c) col_rem[cols - 1 - c] += row[c];
    });
}

std::vector<Permutation> enum_G_theta_impl(const Composition& lambda, const Composition& mu,
                                           bool parallel) {
    if (lambda.total() != mu.total()) throw std::invalid_argument("composition totals differ");
    if (!lambda.palindromic() || !mu.palindromic())
        throw std::invalid_argument("theta-stable enumeration needs palindromic compositions");
    int rows = lambda.length(), cols = mu.length();
    int half = rows / 2;

    std::vector<Permutation> out;
    if (half == 0) {
        CosetMatrix m(rows, std::vector<int>(cols, 0));
        std::vector<int> col_rem = mu.parts;
        complete_rotinv(lambda, mu, m, col_rem, 0, out);
        return finalize(std::move(out));
    }

    // First mirror pair up front; the rest of each stub runs independently.
    std::vector<std::vector<int>> stubs;
    {
        std::vector<int> col_rem = mu.parts;
        enum_rows(cols, lambda.parts[0], true, col_rem,
                  [&](const std::vector<int>& row) { stubs.push_back(row); });
    }
    std::vector<std::vector<Permutation>> buckets(stubs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t t = 0; t < stubs.size(); ++t) {
        CosetMatrix m(rows, std::vector<int>(cols, 0));
        std::vector<int> col_rem = mu.parts;
        bool feasible = true;
        for (int c = 0; c < cols; ++c) {
            m[0][c] = stubs[t][c];
            m[rows - 1][c] = stubs[t][cols - 1 - c];
            col_rem[c] -= m[0][c] + m[rows - 1][c];
            if (col_rem[c] < 0) feasible = false;
        }
        if (feasible) complete_rotinv(lambda, mu, m, col_rem, 1, buckets[t]);
    }
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return finalize(std::move(out));
}

}  // namespace

std::vector<Permutation> enumerate_G_PQ(const Composition& lambda, const Composition& mu) {
    return enum_G_PQ_impl(lambda, mu, true);
}

std::vector<Permutation> enumerate_G_PQ_serial(const Composition& lambda, const Composition& mu) {
    return enum_G_PQ_impl(lambda, mu, false);
}

std::vector<Permutation> enumerate_G_theta_PQ(const Composition& lambda, const Composition& mu) {
    return enum_G_theta_impl(lambda, mu, true);
}

std::vector<Permutation> enumerate_G_theta_PQ_serial(const Composition& lambda,
                                                     const Composition& mu) {
    return enum_G_theta_impl(lambda, mu, false);
}

int epsilon_p_theta(const Composition& blocks) {
    if (!blocks.palindromic())
        throw std::invalid_argument("epsilon_p_theta needs a palindromic composition");
    return (blocks.length() / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace stratum
