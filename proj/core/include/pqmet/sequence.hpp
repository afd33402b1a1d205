#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pqmet/point.hpp"

namespace pqmet {

/// A sequence (x_n), n >= 1, evaluated up to a horizon.
class Sequence {
public:
    Sequence(std::string name, std::size_t horizon, std::function<Point(std::size_t)> gen);

    /// x_n for 1 <= n <= horizon.
    Point at(std::size_t n) const;

    std::size_t horizon() const { return horizon_; }
    const std::string& name() const { return name_; }

    /// Set for geometric sequences; lets constructions that have closed-form
    /// bounds for ratio^n recognize them.
    std::optional<double> geometric_ratio() const { return ratio_; }

    /// x_n = ratio^n (coordinates).
    static Sequence geometric(double ratio, std::size_t horizon);
    /// x_n = 1/n.
    static Sequence harmonic(std::size_t horizon);
    /// x_n = n/(n+1).
    static Sequence towards_one(std::size_t horizon);
    /// x_n = value for all n.
    static Sequence constant(double value, std::size_t horizon);
    /// Finite list of coordinate values; horizon = values.size().
    static Sequence custom(std::vector<double> values);

private:
    std::string name_;
    std::size_t horizon_;
    std::function<Point(std::size_t)> gen_;
    std::optional<double> ratio_;
};

} // namespace pqmet
