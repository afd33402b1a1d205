#include "pqmet/solver.hpp"

#include <sstream>

namespace pqmet {

std::string to_string(Termination t) {
    switch (t) {
        case Termination::tolerance: return "tolerance";
        case Termination::max_iter: return "max_iter";
        case Termination::exact_fixed_point: return "exact_fixed_point";
    }
    return "max_iter";
}

std::pair<IterationTrace, FixedPointResult> iterate(const Space& space, const Mapping& map,
                                                    const Point& start,
                                                    const IterateOptions& opts) {
    if (!(opts.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (opts.max_iter == 0) throw std::invalid_argument("max_iter must be positive");
    if (!space.contains(start))
        throw std::domain_error("start point " + start.str() +
                                " outside the universe of space '" + space.label() + "'");

    IterationTrace trace;
    Point current = start;
    for (std::uint64_t n = 0; n < opts.max_iter; ++n) {
        const Point next = map.apply(space, current);
        const double displacement = space.sym_distance(current, next);
        trace.steps.push_back({n, current, displacement, space.distance(current, current)});

        if (displacement <= opts.tolerance) {
            // Success also requires the fixed-point contract at the returned
            // point; otherwise keep iterating.
            const Point after = map.apply(space, next);
            const double residual = space.sym_distance(next, after);
            const double self = space.distance(next, next);
            if (residual <= opts.tolerance && self <= opts.tolerance) {
                trace.terminated_by = displacement == 0.0 ? Termination::exact_fixed_point
                                                          : Termination::tolerance;
                FixedPointResult result{next, residual, self, n + 1};
                return {std::move(trace), result};
            }
        }
        current = next;
    }

    trace.terminated_by = Termination::max_iter;
    std::ostringstream msg;
    msg << "no fixed point within " << opts.max_iter << " iterations of mapping '" << map.name()
        << "' from start " << start.str() << " (last step displacement "
        << trace.steps.back().step_displacement << ")";
    throw NonConvergenceError(msg.str(), std::move(trace));
}

bool verify_fixed_point(const Space& space, const Mapping& map, const Point& z,
                        double tolerance) {
    if (!space.contains(z))
        throw std::domain_error("point " + z.str() + " outside the universe of space '" +
                                space.label() + "'");
    const Point tz = map.apply(space, z);
    return space.sym_distance(z, tz) <= tolerance && space.distance(z, z) <= tolerance;
}

UniquenessProbe uniqueness_probe(const Space& space, const Mapping& map,
                                 const std::vector<Point>& starts, double tolerance,
                                 const IterateOptions& opts) {
    if (starts.empty()) throw std::invalid_argument("uniqueness probe requires at least one start");

    UniquenessProbe probe;
    IterateOptions run = opts;
    run.tolerance = tolerance;
    for (const Point& start : starts) {
        try {
            auto [trace, result] = iterate(space, map, start, run);
            probe.fixed_points.push_back(result.point);
        } catch (const NonConvergenceError&) {
            probe.failed_start = start;
            probe.note = "iteration from start " + start.str() + " did not converge";
            probe.pass = false;
            return probe;
        }
    }

    probe.max_pairwise = 0.0;
    for (std::size_t i = 0; i < probe.fixed_points.size(); ++i)
        for (std::size_t j = i + 1; j < probe.fixed_points.size(); ++j) {
            const double d = space.sym_distance(probe.fixed_points[i], probe.fixed_points[j]);
            if (d > probe.max_pairwise) probe.max_pairwise = d;
        }
    probe.pass = probe.max_pairwise <= tolerance;
    if (!probe.pass) probe.note = "distinct limit points under p+";
    return probe;
}

bool rate_bound_check(const IterationTrace& trace, const KannanConstant& constant,
                      double slack) {
    if (trace.steps.size() < 2)
        throw std::invalid_argument("rate bound check requires a trace with at least two steps");
    const double r = constant.rate();
    for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i) {
        const double current = trace.steps[i].step_displacement;
        const double next = trace.steps[i + 1].step_displacement;
        if (next > r * current + slack) return false;
    }
    return true;
}

} // namespace pqmet
