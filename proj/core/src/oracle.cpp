#include "pqmet/oracle.hpp"

#include <algorithm>
#include <thread>

#include "pqmet/axioms.hpp"
#include "pqmet/errors.hpp"
#include "pqmet/rng.hpp"

namespace pqmet {

std::uint64_t self_map_count(std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= n;
    return total;
}

SelfMapEnumerator::SelfMapEnumerator(const Space& space, std::size_t cap) {
    const std::size_t n = space.point_count();
    if (n > cap)
        throw std::invalid_argument("finite space too large to enumerate: " + std::to_string(n) +
                                    " points > cap " + std::to_string(cap));
    n_ = n;
    total_ = self_map_count(n);
    current_.assign(n, 0);
}

std::optional<std::vector<std::size_t>> SelfMapEnumerator::next() {
    if (emitted_ == total_) return std::nullopt;
    std::vector<std::size_t> out = current_;
    ++emitted_;
    // odometer increment, least significant digit on the right
    for (std::size_t i = n_; i-- > 0;) {
        if (++current_[i] < n_) break;
        current_[i] = 0;
    }
    return out;
}

std::vector<std::size_t> SelfMapEnumerator::table_at(std::size_t n, std::uint64_t index) {
    std::vector<std::size_t> table(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        table[i] = static_cast<std::size_t>(index % n);
        index /= n;
    }
    return table;
}

namespace {

// Ratio scan on the raw matrix; same expressions as the generic checker so
// the two agree bitwise.
LambdaMin lambda_min_on_table(const std::vector<double>& m, std::size_t n,
                              const std::vector<std::size_t>& t) {
    LambdaMin out;
    for (std::size_t i = 0; i < n; ++i) {
        const double di = m[i * n + t[i]];
        for (std::size_t j = 0; j < n; ++j) {
            const double num = m[t[i] * n + t[j]];
            const double den = di + m[j * n + t[j]];
            if (den == 0.0) {
                if (num == 0.0) continue; // 0/0 counts as ratio 0
                out.feasible = false;
                out.value = std::numeric_limits<double>::infinity();
                return out;
            }
            const double ratio = num / den;
            if (ratio > out.value) out.value = ratio;
        }
    }
    return out;
}

} // namespace

LambdaMin min_kannan_constant(const Space& space, const Mapping& map) {
    const std::size_t n = space.point_count();
    std::vector<std::size_t> table;
    table.reserve(n);
    for (std::size_t i = 0; i < n; ++i) table.push_back(map.apply(space, Point::index(i)).index());
    return lambda_min_on_table(space.matrix(), n, table);
}

namespace {

struct AuditShard {
    std::vector<FiniteAudit::KannanEntry> kannan;
    std::vector<FiniteAudit::Violation> violations;
};

void audit_range(const std::vector<double>& m, std::size_t n, double lambda_bound,
                 std::uint64_t begin, std::uint64_t end, AuditShard& shard) {
    std::vector<std::size_t> table = SelfMapEnumerator::table_at(n, begin);
    for (std::uint64_t index = begin; index < end; ++index) {
        const LambdaMin lm = lambda_min_on_table(m, n, table);
        if (lm.feasible && lm.value < lambda_bound) {
            std::size_t fixed = n, count = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (table[i] == i) {
                    fixed = i;
                    ++count;
                }
            if (count != 1)
                shard.violations.push_back(
                    {table, lm.value, "fixed point count = " + std::to_string(count)});
            else if (m[fixed * n + fixed] != 0.0)
                shard.violations.push_back(
                    {table, lm.value,
                     "fixed point " + std::to_string(fixed) + " has self-distance " +
                         std::to_string(m[fixed * n + fixed])});
            else
                shard.kannan.push_back({table, lm.value, fixed});
        }
        for (std::size_t i = n; i-- > 0;) {
            if (++table[i] < n) break;
            table[i] = 0;
        }
    }
}

} // namespace

FiniteAudit exhaustive_kannan_audit(const Space& space, const AuditOptions& opts) {
    VerificationReport axioms = check_axioms(space, CheckStrategy::exhaustive(0.0));
    if (!axioms.pass())
        throw PreconditionError("exhaustive_kannan_audit: space '" + space.label() +
                                "' fails the exhaustive axiom check");

    const std::size_t n = space.point_count();
    if (n > opts.cap)
        throw std::invalid_argument("finite space too large to enumerate: " + std::to_string(n) +
                                    " points > cap " + std::to_string(opts.cap));
    const std::vector<double>& m = space.matrix();

    FiniteAudit audit;
    audit.point_count = n;
    audit.maps_total = self_map_count(n);

    unsigned threads = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, std::max<std::uint64_t>(audit.maps_total / 4096, 1)));

    std::vector<AuditShard> shards(threads);
    if (threads == 1) {
        audit_range(m, n, opts.lambda_bound, 0, audit.maps_total, shards[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        const std::uint64_t chunk = (audit.maps_total + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = std::min<std::uint64_t>(t * chunk, audit.maps_total);
            const std::uint64_t end =
                std::min<std::uint64_t>(begin + chunk, audit.maps_total);
            pool.emplace_back([&, begin, end, t] {
                audit_range(m, n, opts.lambda_bound, begin, end, shards[t]);
            });
        }
        for (auto& th : pool) th.join();
    }

    // merge shards in index order: result is independent of the thread count
    for (auto& shard : shards) {
        audit.kannan_maps.insert(audit.kannan_maps.end(),
                                 std::make_move_iterator(shard.kannan.begin()),
                                 std::make_move_iterator(shard.kannan.end()));
        audit.violations.insert(audit.violations.end(),
                                std::make_move_iterator(shard.violations.begin()),
                                std::make_move_iterator(shard.violations.end()));
    }
    return audit;
}

Space random_finite_space(std::uint64_t seed, std::size_t n) {
    if (n == 0) throw std::invalid_argument("space size must be positive");
    SplitMix64 rng(substream_seed(seed, "oracle/space"));
    const int max_attempts = 10'000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            matrix[i][i] = rng.uniform01() < 0.5 ? 0.0 : rng.uniform(0.05, 0.4);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) matrix[i][j] = rng.uniform(1.0, 2.2);

        Space candidate = Space::finite({}, std::move(matrix),
                                        "random(" + std::to_string(seed) + "," +
                                            std::to_string(n) + ")");
        if (check_axioms(candidate, CheckStrategy::exhaustive(0.0)).pass()) return candidate;
    }
    throw std::runtime_error("no valid random space found after " +
                             std::to_string(max_attempts) + " attempts");
}

} // namespace pqmet
