#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqmet/point.hpp"

namespace pqmet {

/// Worst offending tuple of a check. For inequality checks deficit is the
/// amount by which the required inequality is missed; for ratio checks it is
/// ratio - bound; for equality-style checks it is slack minus the larger
/// residual (closer to exact equality = worse).
struct Witness {
    std::vector<Point> points;
    double lhs = 0.0;
    double rhs = 0.0;
    double deficit = 0.0;
};

struct CheckRecord {
    std::string id;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::optional<Witness> worst; // present iff violations > 0

    bool pass() const { return violations == 0; }
};

struct VerificationReport {
    std::vector<CheckRecord> records;

    bool pass() const {
        for (const auto& r : records)
            if (!r.pass()) return false;
        return true;
    }

    std::uint64_t total_violations() const {
        std::uint64_t v = 0;
        for (const auto& r : records) v += r.violations;
        return v;
    }

    const CheckRecord* find(std::string_view id) const {
        for (const auto& r : records)
            if (r.id == id) return &r;
        return nullptr;
    }
};

} // namespace pqmet
