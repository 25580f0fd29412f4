#include "stratum/zelring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace stratum {

Segment::Segment(HalfInt b, HalfInt e) : begin(b), end(e) {
    std::int64_t diff = (end - begin).twice;
    if (diff < 0 || diff % 2 != 0)
        throw std::invalid_argument("segment needs end - begin a non-negative integer");
}

Multisegment::Multisegment(std::vector<Segment> segs) : segments(std::move(segs)) {
    std::sort(segments.begin(), segments.end());
}

std::int64_t Multisegment::total_length() const {
    std::int64_t t = 0;
    for (const auto& s : segments) t += s.length();
    return t;
}

bool is_linked(const Segment& a, const Segment& b) {
    if ((a.begin - b.begin).twice % 2 != 0) return false;  // incompatible lattices
    if (a.contains(b) || b.contains(a)) return false;
    // union is a segment iff the gap is at most one step
    HalfInt lo = std::max(a.begin, b.begin);
    HalfInt hi = std::min(a.end, b.end);
    return lo <= hi + HalfInt::whole(1);
}

bool precedes(const Segment& a, const Segment& b) {
    return is_linked(a, b) && a.begin < b.begin;
}

std::vector<Multisegment> elementary_operations(const Multisegment& m) {
    std::set<Multisegment> out;
    const auto& segs = m.segments;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            if (!is_linked(segs[i], segs[j])) continue;
            Segment uni(std::min(segs[i].begin, segs[j].begin),
                        std::max(segs[i].end, segs[j].end));
            std::vector<Segment> rest;
            for (std::size_t k = 0; k < segs.size(); ++k)
                if (k != i && k != j) rest.push_back(segs[k]);
            rest.push_back(uni);
            HalfInt ib = std::max(segs[i].begin, segs[j].begin);
            HalfInt ie = std::min(segs[i].end, segs[j].end);
            if (ib <= ie) rest.push_back(Segment(ib, ie));  // empty intersection dropped
            out.insert(Multisegment(std::move(rest)));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Multisegment> poset_below(const Multisegment& m, std::int64_t bound) {
    if (m.total_length() > bound)
        throw std::invalid_argument("poset_below: total length exceeds bound");
    std::set<Multisegment> seen{m};
    std::vector<Multisegment> frontier{m};
    while (!frontier.empty()) {
        std::vector<Multisegment> next;
        for (const auto& cur : frontier)
            for (auto& succ : elementary_operations(cur))
                if (seen.insert(succ).second) next.push_back(std::move(succ));
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Multisegment theta_dual(const Multisegment& m) {
    std::vector<Segment> segs;
    segs.reserve(m.segments.size());
    for (const auto& s : m.segments) segs.push_back(s.negated());
    return Multisegment(std::move(segs));
}

bool theta_stable(const Multisegment& m) { return theta_dual(m) == m; }

Multisegment speh_multisegment(int x, int y) {
    if (x < 1 || y < 1) throw std::invalid_argument("speh_multisegment: x, y >= 1");
    std::vector<Segment> segs;
    for (int j = 1; j <= y; ++j) {
        HalfInt b((1 - x) + (y - 2 * j + 1));
        segs.push_back(Segment(b, b + HalfInt::whole(x - 1)));
    }
    return Multisegment(std::move(segs));
}

Multisegment rho_multisegment(int x, int y) {
    if (x < 1 || y < 1) throw std::invalid_argument("rho_multisegment: x, y >= 1");
    std::vector<Segment> segs;
    for (int j = 1; j <= std::min(x, y); ++j) {
        HalfInt e((x + y) - 2 * j);
        segs.push_back(Segment(-e, e));
    }
    return Multisegment(std::move(segs));
}

bool is_fully_steinberg(const Multisegment& m) {
    return std::all_of(m.segments.begin(), m.segments.end(),
                       [](const Segment& s) { return s.self_dual(); });
}

std::vector<SpehSpec> reduce_to_theta_type(std::vector<SpehSpec> factors) {
    std::vector<bool> matched(factors.size(), false);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].twist != SpehSpec::Twist::Complex || matched[i]) continue;
        bool found = false;
        for (std::size_t j = i + 1; j < factors.size() && !found; ++j) {
            if (matched[j] || factors[j].twist != SpehSpec::Twist::Complex) continue;
            if (factors[j].x == factors[i].x && factors[j].y == factors[i].y &&
                factors[j].d == -factors[i].d && factors[j].e == -factors[i].e) {
                matched[i] = matched[j] = true;
                found = true;
            }
        }
        if (!found)
            throw std::invalid_argument("reduce_to_theta_type: unpaired complex twist");
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (matched[i]) {
            factors[i].twist = SpehSpec::Twist::Trivial;
            factors[i].d = factors[i].e = Rational(0);
        }
    }
    return factors;
}

std::vector<CThetaElement> enumerate_C_theta(const std::vector<SpehSpec>& factors,
                                             std::int64_t bound) {
    std::int64_t total = 0;
    for (const auto& f : factors) {
        if (f.twist == SpehSpec::Twist::Complex)
            throw std::invalid_argument("enumerate_C_theta: factors must be of theta type");
        total += static_cast<std::int64_t>(f.x) * f.y;
    }
    if (total > bound) throw std::invalid_argument("enumerate_C_theta: size bound exceeded");

    std::vector<std::vector<Multisegment>> posets;
    posets.reserve(factors.size());
    for (const auto& f : factors)
        posets.push_back(poset_below(speh_multisegment(f.x, f.y), bound));

    std::vector<CThetaElement> out;
    std::vector<std::size_t> pick(factors.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == factors.size()) {
            // theta-stability of the twisted union, checked per twist class
            std::map<SpehSpec::Twist, std::multiset<Segment>> classes;
            for (std::size_t k = 0; k < factors.size(); ++k)
                for (const auto& s : posets[k][pick[k]].segments)
                    classes[factors[k].twist].insert(s);
            for (const auto& [tw, segs] : classes) {
                std::multiset<Segment> dual;
                for (const auto& s : segs) dual.insert(s.negated());
                if (dual != segs) return;
            }
            CThetaElement el;
            bool all_stable = true, all_steinberg = true;
            for (std::size_t k = 0; k < factors.size(); ++k) {
                const auto& b = posets[k][pick[k]];
                el.factors.push_back(b);
                if (!theta_stable(b)) all_stable = false;
                if (!is_fully_steinberg(b)) all_steinberg = false;
            }
            el.type = !all_stable             ? ThetaTypeClass::III
                      : all_steinberg         ? ThetaTypeClass::I
                                              : ThetaTypeClass::II;
            out.push_back(std::move(el));
            return;
        }
        for (std::size_t c = 0; c < posets[i].size(); ++c) {
            pick[i] = c;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const CThetaElement& a, const CThetaElement& b) {
        return a.factors < b.factors;
    });
    return out;
}

}  // namespace stratum
