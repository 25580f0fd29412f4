#pragma once

#include <vector>

#include "stratum/halfint.hpp"
#include "stratum/rational.hpp"

namespace stratum {

// Segment <begin, end> with endpoints in (1/2)Z and integer, non-negative
// end - begin.
struct Segment {
    HalfInt begin{};
    HalfInt end{};

    Segment() = default;
    Segment(HalfInt b, HalfInt e);

    std::int64_t length() const { return (end - begin).twice / 2 + 1; }
    Segment negated() const { return Segment(-end, -begin); }
    bool self_dual() const { return begin == -end; }
    bool contains(const Segment& o) const { return begin <= o.begin && o.end <= end; }

    friend auto operator<=>(const Segment&, const Segment&) = default;
};

// Multiset of segments, kept sorted for canonical equality.
struct Multisegment {
    std::vector<Segment> segments;

    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs);

    std::int64_t total_length() const;
    bool empty() const { return segments.empty(); }

    friend auto operator<=>(const Multisegment&, const Multisegment&) = default;
};

bool is_linked(const Segment& a, const Segment& b);
bool precedes(const Segment& a, const Segment& b);

// All multisegments reachable by one elementary operation
// {S, S'} -> {S u S', S n S'} on a linked pair (empty intersections dropped).
std::vector<Multisegment> elementary_operations(const Multisegment& m);

// Transitive closure of elementary_operations, m included.  Throws when the
// total length exceeds the bound.
std::vector<Multisegment> poset_below(const Multisegment& m, std::int64_t bound = 12);

Multisegment theta_dual(const Multisegment& m);
bool theta_stable(const Multisegment& m);

Multisegment speh_multisegment(int x, int y);
Multisegment rho_multisegment(int x, int y);

// Every segment self-dual (the fully-Steinberg shape of Lemma 3.3.1).
bool is_fully_steinberg(const Multisegment& m);

// One inducing factor Speh(x, y) twisted by a character.
struct SpehSpec {
    enum class Twist { Trivial, Quadratic, Complex };

    int x = 1;
    int y = 1;
    Twist twist = Twist::Trivial;
    // complex-twist parameters (d, e) with the inverse twist (-d, -e)
    Rational d{0};
    Rational e{0};

    friend auto operator<=>(const SpehSpec&, const SpehSpec&) = default;
};

// Strips paired complex twists down to trivial ones; output has only
// trivial/quadratic twists.  Throws when a complex twist has no inverse
// partner with the same (x, y).
std::vector<SpehSpec> reduce_to_theta_type(std::vector<SpehSpec> factors);

enum class ThetaTypeClass { I, II, III };

struct CThetaElement {
    std::vector<Multisegment> factors;  // one per SpehSpec, paired with its twist
    ThetaTypeClass type = ThetaTypeClass::I;
};

// Tuples (b_1, ..., b_k), b_i below Speh(x_i, y_i), whose twisted union is
// theta-stable.  Type metadata: I if every factor is itself theta-stable and
// fully Steinberg, III if some factor fails theta-stability on its own,
// II otherwise.
std::vector<CThetaElement> enumerate_C_theta(const std::vector<SpehSpec>& factors,
                                             std::int64_t bound = 12);

}  // namespace stratum
