#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqmet/kannan.hpp"
#include "pqmet/space.hpp"

namespace pqmet {

/// Number of self-maps on n points (n^n). n is capped well below overflow.
std::uint64_t self_map_count(std::size_t n);

/// Streams all n^n self-map tables of a finite space in lexicographic order
/// (table read left to right, most significant first). Throws
/// std::invalid_argument when the space has more points than `cap`.
class SelfMapEnumerator {
public:
    explicit SelfMapEnumerator(const Space& space, std::size_t cap = 8);

    /// Next table, or nullopt when exhausted.
    std::optional<std::vector<std::size_t>> next();

    std::uint64_t total() const { return total_; }

    /// The index-th table in lexicographic order.
    static std::vector<std::size_t> table_at(std::size_t n, std::uint64_t index);

private:
    std::size_t n_;
    std::uint64_t total_;
    std::uint64_t emitted_ = 0;
    std::vector<std::size_t> current_;
};

struct LambdaMin {
    /// False when some pair has p(Tx,Ty) > 0 with p(x,Tx) + p(y,Ty) = 0.
    bool feasible = true;
    double value = 0.0; // max ratio over ordered pairs, 0/0 counted as 0
};

/// Exact minimal contraction constant of a self-map on a finite space:
/// max over all ordered pairs of p(Tx,Ty) / (p(x,Tx) + p(y,Ty)), computed
/// directly on the stored matrix values with no slack.
LambdaMin min_kannan_constant(const Space& space, const Mapping& map);

struct FiniteAudit {
    std::size_t point_count = 0;
    std::uint64_t maps_total = 0;

    struct KannanEntry {
        std::vector<std::size_t> table;
        double lambda_min = 0.0;
        std::size_t fixed_point = 0; // the unique fixed point when no violation
    };
    std::vector<KannanEntry> kannan_maps;

    struct Violation {
        std::vector<std::size_t> table;
        double lambda_min = 0.0;
        std::string reason;
    };
    std::vector<Violation> violations; // expected empty
};

struct AuditOptions {
    std::size_t cap = 8;
    unsigned threads = 0;       // 0 = pick from hardware_concurrency
    double lambda_bound = 0.25; // strict upper bound for "is a contraction"
};

/// Enumerate every self-map; for each exact contraction (feasible lambda_min
/// strictly below 1/4) assert a unique fixed point with self-distance exactly
/// zero. A nonempty violations list falsifies the implementation, not the
/// theory: finite spaces are treated as sequentially complete, since a
/// vanishing tau(p+)-Cauchy sequence in a finite space is eventually constant
/// at a zero-self-distance point (axiom (3) forces equality once p+ hits 0).
/// Requires the space to pass exhaustive axiom checks (PreconditionError).
/// Work is partitioned across threads by enumeration index and merged in
/// order, so results are independent of the thread count.
FiniteAudit exhaustive_kannan_audit(const Space& space, const AuditOptions& opts = {});

/// Rejection-sampled valid finite space: non-negative matrix with zero or
/// small diagonal entries, kept only if the exhaustive slack-0 axiom check
/// passes. Deterministic in (seed, n).
Space random_finite_space(std::uint64_t seed, std::size_t n);

} // namespace pqmet
