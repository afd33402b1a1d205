#pragma once

// Internal tuple-visiting helpers shared by the verification passes.
// Exhaustive mode walks the finite universe in lexicographic order; sampled
// mode draws seeded uniform points from a per-tag substream. Visitors return
// false to stop early.

#include <cmath>
#include <stdexcept>
#include <string_view>

#include "pqmet/rng.hpp"
#include "pqmet/space.hpp"
#include "pqmet/strategy.hpp"

namespace pqmet::detail {

inline void validate_strategy(const Space& space, const CheckStrategy& strategy) {
    if (strategy.mode == CheckStrategy::Mode::exhaustive && !space.is_finite())
        throw std::invalid_argument("exhaustive strategy requires a finite space");
    if (strategy.slack < 0.0) throw std::invalid_argument("slack must be non-negative");
    if (strategy.mode == CheckStrategy::Mode::sampled && strategy.sample_count == 0)
        throw std::invalid_argument("sampled strategy requires a positive sample count");
}

class PointSampler {
public:
    PointSampler(const Space& space, const CheckStrategy& strategy)
        : space_(&space) {
        if (space.is_finite()) {
            n_ = space.point_count();
            return;
        }
        const Interval& dom = space.domain();
        lo_ = dom.lo + (dom.lo_open ? strategy.margin : 0.0);
        hi_ = std::isinf(dom.hi) ? strategy.upper_cap
                                 : dom.hi - (dom.hi_open ? strategy.margin : 0.0);
        if (!(lo_ <= hi_))
            throw std::invalid_argument("sampling window for domain " + dom.str() + " is empty");
    }

    Point draw(SplitMix64& rng) const {
        if (space_->is_finite()) return Point::index(static_cast<std::size_t>(rng.below(n_)));
        return Point::coord(rng.uniform(lo_, hi_));
    }

private:
    const Space* space_;
    std::size_t n_ = 0;
    double lo_ = 0.0;
    double hi_ = 0.0;
};

template <class F> // F: (const Point&) -> bool
void visit_points(const Space& space, const CheckStrategy& strategy, std::string_view tag,
                  F&& f) {
    validate_strategy(space, strategy);
    if (strategy.mode == CheckStrategy::Mode::exhaustive) {
        const std::size_t n = space.point_count();
        for (std::size_t i = 0; i < n; ++i)
            if (!f(Point::index(i))) return;
        return;
    }
    PointSampler sampler(space, strategy);
    SplitMix64 rng(substream_seed(strategy.seed, tag));
    for (std::uint64_t k = 0; k < strategy.sample_count; ++k)
        if (!f(sampler.draw(rng))) return;
}

template <class F> // F: (const Point&, const Point&) -> bool
void visit_pairs(const Space& space, const CheckStrategy& strategy, std::string_view tag,
                 F&& f) {
    validate_strategy(space, strategy);
    if (strategy.mode == CheckStrategy::Mode::exhaustive) {
        const std::size_t n = space.point_count();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!f(Point::index(i), Point::index(j))) return;
        return;
    }
    PointSampler sampler(space, strategy);
    SplitMix64 rng(substream_seed(strategy.seed, tag));
    for (std::uint64_t k = 0; k < strategy.sample_count; ++k) {
        Point x = sampler.draw(rng);
        Point y = sampler.draw(rng);
        if (!f(x, y)) return;
    }
}

template <class F> // F: (const Point&, const Point&, const Point&) -> bool
void visit_triples(const Space& space, const CheckStrategy& strategy, std::string_view tag,
                   F&& f) {
    validate_strategy(space, strategy);
    if (strategy.mode == CheckStrategy::Mode::exhaustive) {
        const std::size_t n = space.point_count();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!f(Point::index(i), Point::index(j), Point::index(k))) return;
        return;
    }
    PointSampler sampler(space, strategy);
    SplitMix64 rng(substream_seed(strategy.seed, tag));
    for (std::uint64_t k = 0; k < strategy.sample_count; ++k) {
        Point x = sampler.draw(rng);
        Point y = sampler.draw(rng);
        Point z = sampler.draw(rng);
        if (!f(x, y, z)) return;
    }
}

// Exact sum of two doubles as a (rounded, residual) pair (Knuth two-sum).
inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double bv = s - a;
    e = (a - (s - bv)) + (b - bv);
}

// Deficit (a + b) - (c + d) with the two side sums accumulated exactly, so
// bitwise-equal addend multisets yield exactly zero.
inline double pair_sum_deficit(double a, double b, double c, double d) {
    double s1, e1, s2, e2;
    two_sum(a, b, s1, e1);
    two_sum(c, d, s2, e2);
    double dh, de;
    two_sum(s1, -s2, dh, de);
    return dh + (de + (e1 - e2));
}

// Ratio-form contraction predicate: violated iff num/den > bound + slack,
// with a degenerate denominator (<= slack) forcing num <= slack. Exposes the
// ratio-minus-bound excess for witness ordering.
inline bool contraction_violated(double num, double den, double bound, double slack,
                                 double& excess) {
    if (den <= slack) {
        excess = num; // amount over the forced zero
        return num > slack;
    }
    const double ratio = num / den;
    excess = ratio - bound;
    return ratio > bound + slack;
}

} // namespace pqmet::detail
