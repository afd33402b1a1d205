#pragma once

#include <cstdint>

namespace pqmet {

/// How a verification pass enumerates tuples. Exhaustive mode is only valid
/// on finite spaces; sampled mode draws seeded uniform points. Inequalities
/// are tested as lhs <= rhs + slack, equalities as |lhs - rhs| <= slack.
struct CheckStrategy {
    enum class Mode { exhaustive, sampled };

    Mode mode = Mode::sampled;
    std::uint64_t sample_count = 10'000;
    std::uint64_t seed = 42;
    double slack = 1e-9;

    /// Sampling truncates unbounded domains to [*, upper_cap] and offsets open
    /// endpoints inward by margin.
    double upper_cap = 1e6;
    double margin = 1e-9;

    static CheckStrategy exhaustive(double slack = 0.0) {
        CheckStrategy s;
        s.mode = Mode::exhaustive;
        s.slack = slack;
        return s;
    }

    static CheckStrategy sampled(std::uint64_t count, std::uint64_t seed = 42,
                                 double slack = 1e-9) {
        CheckStrategy s;
        s.mode = Mode::sampled;
        s.sample_count = count;
        s.seed = seed;
        s.slack = slack;
        return s;
    }
};

} // namespace pqmet
