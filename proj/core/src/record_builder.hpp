#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pqmet/report.hpp"

namespace pqmet::detail {

// Accumulates one CheckRecord. Tuples must be fed in deterministic order;
// the worst witness keeps the first maximum (lexicographically smallest
// argmax under the caller's traversal order).
class RecordBuilder {
public:
    explicit RecordBuilder(std::string id) { rec_.id = std::move(id); }

    void count() { ++rec_.checks; }

    void violation(std::vector<Point> points, double lhs, double rhs, double deficit) {
        ++rec_.violations;
        if (!rec_.worst || deficit > rec_.worst->deficit)
            rec_.worst = Witness{std::move(points), lhs, rhs, deficit};
    }

    CheckRecord take() { return std::move(rec_); }

private:
    CheckRecord rec_;
};

} // namespace pqmet::detail
