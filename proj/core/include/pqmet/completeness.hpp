#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pqmet/kannan.hpp"
#include "pqmet/report.hpp"
#include "pqmet/sequence.hpp"
#include "pqmet/space.hpp"
#include "pqmet/strategy.hpp"

namespace pqmet {

/// Numerical verdicts for one sequence at its horizon. Cauchy flags test tail
/// stabilization: over the last quarter of the horizon the spread of the
/// relevant double-indexed distances must be <= tolerance. Convergence flags
/// compare against the supplied candidates only. These are verdicts at the
/// horizon, not proofs.
struct SequenceClassification {
    bool left_p_cauchy = false;       // lim over n <= m of p(x_n, x_m) exists
    double left_p_limit = 0.0;
    bool tau_p_plus_cauchy = false;   // lim over all n, m of p+(x_n, x_m) exists
    double tau_p_plus_limit = 0.0;
    bool strict_pair_limit = false;   // auxiliary: lim over n < m of p(x_n, x_m)
    double strict_pair_limit_value = 0.0;
    std::optional<Point> tau_p_convergent_to;      // lim p(x, x_n) = p(x, x)
    std::optional<Point> tau_p_plus_convergent_to; // lim p+(x_n, x) = p+(x, x)
};

/// Requires horizon >= 16 and candidates inside the universe.
SequenceClassification classify_sequence(const Space& space, const Sequence& seq,
                                         const std::vector<Point>& candidates,
                                         double tolerance);

struct CompletenessFinding {
    std::string notion;
    bool counterexample_found = false;
    std::string sequence; // name of the offending sequence, if any
    std::string note;
};

struct CompletenessReport {
    std::vector<CompletenessFinding> findings;
    bool candidates_insufficient = false; // empty candidate list supplied
    std::string disclaimer;

    bool pass() const {
        for (const auto& f : findings)
            if (f.counterexample_found) return false;
        return true;
    }
};

/// Search the sequence family for counterexamples to three completeness
/// notions: left p-sequential (left p-Cauchy => tau(p)-convergent),
/// p-sequential (tau(p+)-Cauchy => tau(p)-convergent) and Smyth
/// (left p-Cauchy => tau(p+)-convergent). "No counterexample found" is
/// evidence relative to the family, horizon and candidates, never a proof,
/// and the report says so.
CompletenessReport probe_completeness(const Space& space, const std::vector<Sequence>& seqs,
                                      const std::vector<Point>& candidates, double tolerance);

/// The fixed-point-free contraction built from a vanishing tau(p+)-Cauchy
/// sequence that has no tau(p)-limit: T x = x_{n(x)} where n(x) is the
/// smallest index from which the tail of the sequence is closer together
/// than threshold_fraction() times the distance p(x, C_x) from x to the tail
/// set C_x.
class CounterexampleMap {
public:
    /// p(x, C_x) = inf over the tail of p(x, x_n).
    double tail_distance(double x) const { return tail_distance_(x); }

    /// The selector n(x) >= 1.
    std::uint64_t selector(double x) const { return selector_(x); }

    double threshold_fraction() const { return threshold_fraction_; }
    const Sequence& sequence() const { return seq_; }

    /// T x = x_{n(x)} as a Mapping named "converse_map".
    Mapping mapping() const;

private:
    friend CounterexampleMap build_counterexample_map(const Space&, const Sequence&, double);

    CounterexampleMap(Sequence seq, double threshold_fraction,
                      std::function<double(double)> tail_distance,
                      std::function<std::uint64_t(double)> selector)
        : seq_(std::move(seq)),
          threshold_fraction_(threshold_fraction),
          tail_distance_(std::move(tail_distance)),
          selector_(std::move(selector)) {}

    Sequence seq_;
    double threshold_fraction_;
    std::function<double(double)> tail_distance_;
    std::function<std::uint64_t(double)> selector_;
};

/// Build the counterexample map on `space` from `seq`. The sequence must be
/// tau(p+)-Cauchy with limit ~0 at its horizon (PreconditionError otherwise).
/// For the built-in punctured space with the geometric(1/2) sequence the tail
/// distance has the closed form x <= 1/2 ? x : 2x - 1/2 and the selector uses
/// the tail bound 4 * 2^-N; other inputs fall back to bounded scans up to the
/// horizon. The threshold fraction is 1/8.
CounterexampleMap build_counterexample_map(const Space& space, const Sequence& seq,
                                           double tolerance = 1e-12);

/// Audit the construction on sampled points/pairs:
///   "eq2"            the contraction inequality with lambda = 1/8
///   "no_fixed_point" p+(x, Tx) > slack for every sampled x
///   "selector_bound" p+(x_n, x_m) < threshold * p(x, C_x) for sampled
///                    index pairs n, m >= n(x)
VerificationReport audit_counterexample(const Space& space, const CounterexampleMap& cmap,
                                        const CheckStrategy& strategy);

} // namespace pqmet
