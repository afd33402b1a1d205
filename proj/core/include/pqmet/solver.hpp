#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pqmet/kannan.hpp"
#include "pqmet/space.hpp"

namespace pqmet {

enum class Termination { tolerance, max_iter, exact_fixed_point };

std::string to_string(Termination t);

struct IterationStep {
    std::uint64_t n = 0;
    Point point = Point::index(0);
    double step_displacement = 0.0; // p+(x_n, x_{n+1})
    double self_distance = 0.0;     // p(x_n, x_n)
};

struct IterationTrace {
    std::vector<IterationStep> steps;
    Termination terminated_by = Termination::max_iter;
};

struct FixedPointResult {
    Point point = Point::index(0);
    double residual = 0.0;      // p+(z, Tz)
    double self_distance = 0.0; // p(z, z)
    std::uint64_t iterations = 0;
};

/// Thrown when the orbit does not settle within max_iter; carries the trace.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, IterationTrace trace)
        : std::runtime_error(what),
          trace_(std::make_shared<IterationTrace>(std::move(trace))) {}

    const IterationTrace& trace() const { return *trace_; }

private:
    std::shared_ptr<IterationTrace> trace_;
};

struct IterateOptions {
    double tolerance = 1e-12;
    std::uint64_t max_iter = 1'000'000;
};

/// Picard iteration x_{n+1} = T x_n from `start`. The stopping quantity is
/// the symmetrized step displacement p+(x_n, x_{n+1}); success additionally
/// requires the returned point z = x_{n+1} to satisfy p+(z, Tz) <= tolerance
/// and p(z, z) <= tolerance (one extra verification pass). A displacement of
/// exactly 0 reports Termination::exact_fixed_point.
std::pair<IterationTrace, FixedPointResult> iterate(const Space& space, const Mapping& map,
                                                    const Point& start,
                                                    const IterateOptions& opts = {});

/// True iff p+(z, Tz) <= tolerance and p(z, z) <= tolerance.
bool verify_fixed_point(const Space& space, const Mapping& map, const Point& z,
                        double tolerance);

struct UniquenessProbe {
    bool pass = false;
    std::vector<Point> fixed_points;          // one per start, in start order
    double max_pairwise = 0.0;                // max p+ between returned points
    std::optional<Point> failed_start;        // set when some start diverged
    std::string note;
};

/// Iterate from every start; passes iff all runs succeed and all returned
/// points are pairwise within tolerance under p+.
UniquenessProbe uniqueness_probe(const Space& space, const Mapping& map,
                                 const std::vector<Point>& starts, double tolerance,
                                 const IterateOptions& opts = {});

/// True iff consecutive step displacements satisfy
///   d_{n+1} <= r * d_n + slack  with r = constant.rate().
/// Requires a trace with at least two steps.
bool rate_bound_check(const IterationTrace& trace, const KannanConstant& constant,
                      double slack);

} // namespace pqmet
