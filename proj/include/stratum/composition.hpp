#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace stratum {

// Composition of n into positive parts (an ordered tuple).
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    Composition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Composition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }

    bool palindromic() const {
        return std::equal(parts.begin(), parts.end(), parts.rbegin());
    }

    // Cumulative boundaries: offsets()[i] = parts[0] + ... + parts[i-1].
    std::vector<int> offsets() const {
        std::vector<int> off(parts.size() + 1, 0);
        for (std::size_t i = 0; i < parts.size(); ++i) off[i + 1] = off[i] + parts[i];
        return off;
    }

    // 0-based block index of a 1-based position.
    int block_of(int pos) const {
        int acc = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            acc += parts[i];
            if (pos <= acc) return static_cast<int>(i);
        }
        throw std::invalid_argument("position beyond composition total");
    }

    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    void validate() const {
        for (int p : parts)
            if (p <= 0) throw std::invalid_argument("composition parts must be positive");
    }
};

// All compositions of n, ordered by length then lexicographically.
inline std::vector<Composition> all_compositions(int n) {
    if (n < 0) throw std::invalid_argument("all_compositions: n < 0");
    std::vector<Composition> out;
    if (n == 0) return out;
    // subset of cut points encoded in bits of mask
    std::vector<std::vector<int>> raw;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int last = 0;
        for (int i = 1; i < n; ++i) {
            if (mask & (1u << (i - 1))) {
                parts.push_back(i - last);
                last = i;
            }
        }
        parts.push_back(n - last);
        raw.push_back(std::move(parts));
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (auto& p : raw) out.push_back(Composition(std::move(p)));
    return out;
}

// Palindromic compositions of n (theta-stable standard parabolics), ordered by
// length then lexicographically.
inline std::vector<Composition> theta_stable_parabolics(int n) {
    std::vector<Composition> out;
    for (auto& c : all_compositions(n))
        if (c.palindromic()) out.push_back(c);
    return out;
}

// Tuple (s_1, ..., s_k) with 0 <= s_i and sum s; entries may be zero.
using ExtComposition = std::vector<int>;

// All extended compositions of s of given length with per-slot caps.
inline std::vector<ExtComposition> extended_compositions(int s, const std::vector<int>& caps) {
    std::vector<ExtComposition> out;
    ExtComposition cur(caps.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (i == caps.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        int hi = std::min(caps[i], rem);
        for (int v = 0; v <= hi; ++v) {
            cur[i] = v;
            self(self, i + 1, rem - v);
        }
        cur[i] = 0;
    };
    if (s >= 0) rec(rec, 0, s);
    return out;
}

}  // namespace stratum
