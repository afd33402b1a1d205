#include "pqmet/completeness.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <utility>

#include "pqmet/errors.hpp"
#include "record_builder.hpp"
#include "sampling.hpp"

namespace pqmet {

using detail::RecordBuilder;

namespace {

struct TailStats {
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    std::size_t count = 0;

    void add(double v) {
        min = std::min(min, v);
        max = std::max(max, v);
        sum += v;
        ++count;
    }
    double spread() const { return count == 0 ? 0.0 : max - min; }
    double mean() const { return count == 0 ? 0.0 : sum / static_cast<double>(count); }
};

} // namespace

SequenceClassification classify_sequence(const Space& space, const Sequence& seq,
                                         const std::vector<Point>& candidates,
                                         double tolerance) {
    if (seq.horizon() < 16)
        throw std::invalid_argument("sequence horizon must be at least 16, got " +
                                    std::to_string(seq.horizon()));
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    for (const Point& c : candidates)
        if (!space.contains(c))
            throw std::domain_error("candidate " + c.str() + " outside the universe of space '" +
                                    space.label() + "'");

    // Tail window: the last quarter of the horizon.
    const std::size_t horizon = seq.horizon();
    const std::size_t window = horizon / 4;
    const std::size_t first = horizon - window + 1;

    std::vector<Point> tail;
    tail.reserve(window);
    for (std::size_t n = first; n <= horizon; ++n) tail.push_back(seq.at(n));

    TailStats left, strict, plus;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        for (std::size_t j = 0; j < tail.size(); ++j) {
            plus.add(space.sym_distance(tail[i], tail[j]));
            if (i <= j) left.add(space.distance(tail[i], tail[j]));
            if (i < j) strict.add(space.distance(tail[i], tail[j]));
        }
    }

    SequenceClassification out;
    out.left_p_cauchy = left.spread() <= tolerance;
    out.left_p_limit = left.mean();
    out.tau_p_plus_cauchy = plus.spread() <= tolerance;
    out.tau_p_plus_limit = plus.mean();
    out.strict_pair_limit = strict.spread() <= tolerance;
    out.strict_pair_limit_value = strict.mean();

    for (const Point& c : candidates) {
        const double self = space.distance(c, c);
        double worst = 0.0;
        for (const Point& xn : tail)
            worst = std::max(worst, std::abs(space.distance(c, xn) - self));
        if (worst <= tolerance) {
            out.tau_p_convergent_to = c;
            break;
        }
    }
    for (const Point& c : candidates) {
        const double self_plus = space.sym_distance(c, c);
        double worst = 0.0;
        for (const Point& xn : tail)
            worst = std::max(worst, std::abs(space.sym_distance(xn, c) - self_plus));
        if (worst <= tolerance) {
            out.tau_p_plus_convergent_to = c;
            break;
        }
    }
    return out;
}

CompletenessReport probe_completeness(const Space& space, const std::vector<Sequence>& seqs,
                                      const std::vector<Point>& candidates, double tolerance) {
    if (seqs.empty()) throw std::invalid_argument("completeness probe requires a sequence family");

    CompletenessReport report;
    report.candidates_insufficient = candidates.empty();
    report.disclaimer =
        "numerical evidence at the supplied horizons against the supplied candidates; "
        "not a proof";

    std::vector<SequenceClassification> cls;
    cls.reserve(seqs.size());
    for (const auto& seq : seqs) cls.push_back(classify_sequence(space, seq, candidates, tolerance));

    struct Notion {
        const char* name;
        bool (*hypothesis)(const SequenceClassification&);
        bool (*conclusion)(const SequenceClassification&);
        const char* description;
    };
    const Notion notions[] = {
        {"left p-sequential completeness",
         [](const SequenceClassification& c) { return c.left_p_cauchy; },
         [](const SequenceClassification& c) { return c.tau_p_convergent_to.has_value(); },
         "left p-Cauchy but no tau(p)-limit among the candidates"},
        {"p-sequential completeness",
         [](const SequenceClassification& c) { return c.tau_p_plus_cauchy; },
         [](const SequenceClassification& c) { return c.tau_p_convergent_to.has_value(); },
         "tau(p+)-Cauchy but no tau(p)-limit among the candidates"},
        {"Smyth completeness",
         [](const SequenceClassification& c) { return c.left_p_cauchy; },
         [](const SequenceClassification& c) { return c.tau_p_plus_convergent_to.has_value(); },
         "left p-Cauchy but no tau(p+)-limit among the candidates"},
    };

    for (const Notion& notion : notions) {
        CompletenessFinding finding;
        finding.notion = notion.name;
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            if (notion.hypothesis(cls[i]) && !notion.conclusion(cls[i])) {
                finding.counterexample_found = true;
                finding.sequence = seqs[i].name();
                finding.note = notion.description;
                break;
            }
        }
        if (!finding.counterexample_found) finding.note = "no counterexample found";
        if (report.candidates_insufficient)
            finding.note += " (empty candidate list: every Cauchy sequence counts against"
                            " convergence, evidence is vacuous)";
        report.findings.push_back(std::move(finding));
    }
    return report;
}

namespace {

bool is_default_construction(const Space& space, const Sequence& seq) {
    return space.label() == "paper_example_punctured" && seq.geometric_ratio().has_value() &&
           *seq.geometric_ratio() == 0.5;
}

// Smallest index from which p(x, x_n) stays positive, scanned up to the
// horizon. For the built-in spaces p(x, y) >= x > 0, so this is 1.
std::uint64_t first_positive_index(const Space& space, const Sequence& seq, double x) {
    const Point px = Point::coord(x);
    for (std::size_t n = 1; n <= seq.horizon(); ++n)
        if (space.distance(px, seq.at(n)) > 0.0) return n;
    throw PreconditionError("p(x, x_n) vanishes for every index up to the horizon at x = " +
                            Point::coord(x).str());
}

} // namespace

Mapping CounterexampleMap::mapping() const {
    CounterexampleMap self = *this;
    return Mapping::function(
        [self](double x) { return self.seq_.at(self.selector_(x)).coord(); }, "converse_map");
}

CounterexampleMap build_counterexample_map(const Space& space, const Sequence& seq,
                                           double tolerance) {
    SequenceClassification cls = classify_sequence(space, seq, {}, tolerance);
    if (!cls.tau_p_plus_cauchy || cls.tau_p_plus_limit > tolerance)
        throw PreconditionError("sequence '" + seq.name() +
                                "' is not tau(p+)-Cauchy with vanishing limit at horizon " +
                                std::to_string(seq.horizon()) + " on space '" + space.label() +
                                "'");

    const double threshold = 0.125;
    const std::size_t horizon = seq.horizon();

    if (is_default_construction(space, seq)) {
        // Closed forms for the punctured built-in with x_n = 2^-n:
        // the tail distance is x below 1/2 and 2x - 1/2 above, and the tail
        // spread from index N onward is bounded by 4 * 2^-N.
        auto tail_distance = [](double x) { return x <= 0.5 ? x : 2.0 * x - 0.5; };
        auto selector = [tail_distance, threshold, horizon](double x) -> std::uint64_t {
            const double target = threshold * tail_distance(x);
            std::uint64_t n = 1;
            while (std::ldexp(4.0, -static_cast<int>(n)) >= target) {
                ++n;
                if (n > horizon)
                    throw PreconditionError(
                        "selector index exceeds the sequence horizon at x = " +
                        Point::coord(x).str());
            }
            return n;
        };
        return CounterexampleMap(seq, threshold, tail_distance, selector);
    }

    // General path: bounded scans up to the horizon.
    auto points = std::make_shared<std::vector<Point>>();
    points->reserve(horizon);
    for (std::size_t n = 1; n <= horizon; ++n) points->push_back(seq.at(n));

    // suffix_sup[N-1] = sup of p+(x_n, x_m) over n, m >= N (up to the horizon)
    auto suffix_sup = std::make_shared<std::vector<double>>(horizon, 0.0);
    double running = 0.0;
    for (std::size_t n = horizon; n >= 1; --n) {
        for (std::size_t m = n; m <= horizon; ++m)
            running = std::max(running, space.sym_distance((*points)[n - 1], (*points)[m - 1]));
        (*suffix_sup)[n - 1] = running;
    }

    Space space_copy = space;
    Sequence seq_copy = seq;
    auto tail_distance = [space_copy, seq_copy, points](double x) {
        const std::uint64_t nx = first_positive_index(space_copy, seq_copy, x);
        double inf = std::numeric_limits<double>::infinity();
        for (std::size_t n = nx; n <= seq_copy.horizon(); ++n)
            inf = std::min(inf, space_copy.distance(Point::coord(x), (*points)[n - 1]));
        return inf;
    };
    auto selector = [space_copy, seq_copy, suffix_sup, tail_distance,
                     threshold](double x) -> std::uint64_t {
        const double target = threshold * tail_distance(x);
        for (std::uint64_t n = first_positive_index(space_copy, seq_copy, x);
             n <= seq_copy.horizon(); ++n)
            if ((*suffix_sup)[n - 1] < target) return n;
        throw PreconditionError("selector index exceeds the sequence horizon at x = " +
                                Point::coord(x).str());
    };
    return CounterexampleMap(seq, threshold, tail_distance, selector);
}

VerificationReport audit_counterexample(const Space& space, const CounterexampleMap& cmap,
                                        const CheckStrategy& strategy) {
    if (strategy.mode != CheckStrategy::Mode::sampled)
        throw std::invalid_argument("audit_counterexample requires a sampled strategy");

    const Mapping map = cmap.mapping();
    VerificationReport report =
        check_kannan(space, map, KannanConstant(cmap.threshold_fraction()), strategy);

    const double slack = strategy.slack;

    RecordBuilder no_fixed("no_fixed_point");
    detail::visit_points(space, strategy, "audit/points", [&](const Point& x) {
        const Point tx = map.apply(space, x);
        const double displacement = space.sym_distance(x, tx);
        no_fixed.count();
        if (displacement <= slack) no_fixed.violation({x}, displacement, 0.0, slack - displacement);
        return true;
    });
    report.records.push_back(no_fixed.take());

    RecordBuilder bound("selector_bound");
    {
        detail::PointSampler sampler(space, strategy);
        SplitMix64 rng(substream_seed(strategy.seed, "audit/selector"));
        const std::uint64_t horizon = cmap.sequence().horizon();
        for (std::uint64_t k = 0; k < strategy.sample_count; ++k) {
            const Point x = sampler.draw(rng);
            const std::uint64_t nx = cmap.selector(x.coord());
            const double rhs = cmap.threshold_fraction() * cmap.tail_distance(x.coord());
            const std::uint64_t span = horizon - nx + 1;
            const std::uint64_t n = nx + rng.below(span);
            const std::uint64_t m = nx + rng.below(span);
            const double lhs = space.sym_distance(cmap.sequence().at(n), cmap.sequence().at(m));
            bound.count();
            if (lhs >= rhs)
                bound.violation({x, Point::coord(static_cast<double>(n)),
                                 Point::coord(static_cast<double>(m))},
                                lhs, rhs, lhs - rhs);
        }
    }
    report.records.push_back(bound.take());
    return report;
}

} // namespace pqmet
