#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pqmet/report.hpp"
#include "pqmet/space.hpp"
#include "pqmet/strategy.hpp"

namespace pqmet {

/// A self-map T on a space: an image table for finite spaces or a coordinate
/// function for analytic ones. apply() validates that images stay inside the
/// universe and raises std::domain_error with the offending point otherwise.
class Mapping {
public:
    static Mapping table(std::vector<std::size_t> images, std::string name = "table");
    static Mapping function(std::function<double(double)> fn, std::string name);

    Point apply(const Space& space, const Point& x) const;

    bool is_table() const { return fn_ == nullptr; }
    const std::vector<std::size_t>& images() const;
    const std::string& name() const { return name_; }

private:
    Mapping() = default;

    std::string name_;
    std::vector<std::size_t> images_;
    std::function<double(double)> fn_;
};

/// Built-in named self-maps; currently the analytic example map
///   T x = 0 for x in [0, 1],  T x = x/8 for x > 1.
Mapping builtin_mapping(const std::string& name);
std::vector<std::string> builtin_mapping_names();

/// Parse a mapping document for finite spaces: { "table": [i0, i1, ...] }.
Mapping load_mapping(const std::string& document);

/// Contraction constant 0 <= lambda < 1/4. gamma() = 2*lambda is the constant
/// inherited by the symmetrized space and rate() = gamma/(1-gamma) < 1 the
/// per-step displacement decay it implies.
class KannanConstant {
public:
    explicit KannanConstant(double lambda);

    double value() const { return lambda_; }
    double gamma() const { return 2.0 * lambda_; }
    double rate() const { return gamma() / (1.0 - gamma()); }

private:
    double lambda_;
};

/// Verify p(Tx,Ty) <= lambda * (p(x,Tx) + p(y,Ty)) on all (exhaustive) or
/// sampled ordered pairs. Evaluated in ratio form: a pair violates iff
/// p(Tx,Ty)/(p(x,Tx)+p(y,Ty)) > lambda + slack, with a denominator <= slack
/// forcing a numerator <= slack. Record id "eq2".
VerificationReport check_kannan(const Space& space, const Mapping& map,
                                const KannanConstant& constant,
                                const CheckStrategy& strategy);

struct LambdaEstimate {
    /// False when some pair has a zero denominator but positive numerator;
    /// no constant can satisfy the contraction inequality on that pair.
    bool feasible = true;
    double lambda_hat = 0.0; // meaningful only when feasible
    std::optional<Witness> witness; // argmax pair, or the infeasible pair
};

/// Supremum of p(Tx,Ty)/(p(x,Tx)+p(y,Ty)) over the checked pairs. Pairs with
/// both sides <= slack are skipped. If the result is < 1/4, it is a valid
/// contraction constant for exactly these pairs (check_kannan with it passes
/// at the same slack).
LambdaEstimate estimate_lambda(const Space& space, const Mapping& map,
                               const CheckStrategy& strategy);

/// Derived inequalities of a verified contraction, on the same pair set as
/// check_kannan (same seed, same stream):
///   (a) p+(Tx,Ty) <= 2*lambda * (p(x,Tx) + p(y,Ty))    [record "lemma2a"]
///   (b) p+(Tx,Ty) <= gamma * (p+(x,Tx) + p+(y,Ty))      [record "lemma2b"]
/// Throws PreconditionError when check_kannan fails for the same inputs.
VerificationReport check_lemma2(const Space& space, const Mapping& map,
                                const KannanConstant& constant,
                                const CheckStrategy& strategy);

} // namespace pqmet
