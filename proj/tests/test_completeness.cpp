#include <doctest.h>

#include <cmath>

#include "pqmet/completeness.hpp"
#include "pqmet/errors.hpp"
#include "pqmet/rng.hpp"
#include "pqmet/space.hpp"

using namespace pqmet;

TEST_CASE("the halving sequence converges to 0 in the complete example space") {
    const Space s = builtin_space("paper_example");
    const auto cls = classify_sequence(s, Sequence::geometric(0.5, 64), {Point::coord(0)}, 1e-12);
    CHECK(cls.left_p_cauchy);
    CHECK(cls.tau_p_plus_cauchy);
    CHECK(cls.tau_p_plus_limit <= 1e-12);
    // the auxiliary strictly-ordered pair limit exists as well
    CHECK(cls.strict_pair_limit);
    CHECK(cls.strict_pair_limit_value <= 1e-12);
    REQUIRE(cls.tau_p_convergent_to.has_value());
    CHECK(*cls.tau_p_convergent_to == Point::coord(0));
    REQUIRE(cls.tau_p_plus_convergent_to.has_value());
    CHECK(*cls.tau_p_plus_convergent_to == Point::coord(0));
}

TEST_CASE("the halving sequence loses its limit in the punctured space") {
    const Space s = builtin_space("paper_example_punctured");
    const std::vector<Point> candidates = {Point::coord(0.1), Point::coord(0.5),
                                           Point::coord(1.0)};
    const auto cls = classify_sequence(s, Sequence::geometric(0.5, 256), candidates, 1e-12);
    CHECK(cls.tau_p_plus_cauchy);
    CHECK(cls.tau_p_plus_limit <= 1e-12);
    CHECK(cls.left_p_cauchy);
    // p(x, x_n) -> 2x differs from p(x, x) = x for every positive candidate
    CHECK(!cls.tau_p_convergent_to.has_value());
    // but p+(x_n, x) -> 2x = p+(x, x), so every candidate is a tau(p+)-limit
    REQUIRE(cls.tau_p_plus_convergent_to.has_value());
    CHECK(*cls.tau_p_plus_convergent_to == Point::coord(0.1));
}

TEST_CASE("constant sequences classify against their own point") {
    const Space s = builtin_space("paper_example");
    SUBCASE("at a zero-self-distance point every flag is positive") {
        const auto cls = classify_sequence(s, Sequence::constant(0.0, 64), {Point::coord(0)},
                                           1e-12);
        CHECK(cls.left_p_cauchy);
        CHECK(cls.tau_p_plus_cauchy);
        CHECK(cls.left_p_limit == 0.0);
        CHECK(cls.tau_p_convergent_to.has_value());
        CHECK(cls.tau_p_plus_convergent_to.has_value());
    }
    SUBCASE("a positive self-distance gives a positive Cauchy limit") {
        const auto cls = classify_sequence(s, Sequence::constant(2.0, 64), {Point::coord(2)},
                                           1e-12);
        CHECK(cls.left_p_cauchy);
        CHECK(cls.left_p_limit == 2.0);
        CHECK(cls.tau_p_plus_cauchy);
        CHECK(cls.tau_p_plus_limit == 4.0);
        CHECK(cls.tau_p_convergent_to.has_value());
    }
}

TEST_CASE("classification validates its inputs") {
    const Space s = builtin_space("paper_example");
    CHECK_THROWS_AS(classify_sequence(s, Sequence::geometric(0.5, 15), {}, 1e-12),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_sequence(builtin_space("paper_example_punctured"),
                                      Sequence::geometric(0.5, 64), {Point::coord(0)}, 1e-12),
                    std::domain_error);
}

TEST_CASE("a vanishing tau(p+)-Cauchy verdict implies the left p-Cauchy flag") {
    const Space s = builtin_space("paper_example");
    for (const auto& seq : {Sequence::geometric(0.5, 64), Sequence::geometric(0.9, 256),
                            Sequence::constant(0.0, 64), Sequence::harmonic(256)}) {
        const auto cls = classify_sequence(s, seq, {}, 1e-12);
        if (cls.tau_p_plus_cauchy && cls.tau_p_plus_limit <= 1e-12) {
            CAPTURE(seq.name());
            CHECK(cls.left_p_cauchy);
        }
    }
}

TEST_CASE("p never exceeds its symmetrization") {
    SplitMix64 rng(404);
    for (const char* name : {"paper_example", "paper_example_punctured"}) {
        const Space s = builtin_space(name);
        for (int i = 0; i < 500; ++i) {
            const Point x = Point::coord(rng.uniform(1e-9, 1e6));
            const Point y = Point::coord(rng.uniform(1e-9, 1e6));
            CHECK(s.distance(x, y) <= s.sym_distance(x, y));
        }
    }
}

TEST_CASE("the complete example space survives the default probe") {
    const Space s = builtin_space("paper_example");
    const std::vector<Sequence> family = {Sequence::geometric(0.5, 256),
                                          Sequence::harmonic(256),
                                          Sequence::towards_one(256)};
    const std::vector<Point> candidates = {Point::coord(0), Point::coord(0.1), Point::coord(0.5),
                                           Point::coord(1)};
    const auto report = probe_completeness(s, family, candidates, 1e-12);
    CHECK(report.pass());
    CHECK(report.findings.size() == 3);
    for (const auto& f : report.findings) CHECK(!f.counterexample_found);

    // ground-truth consistency: a space annotated left p-sequentially complete
    // must show no counterexample to the weaker p-sequential notion
    REQUIRE(s.completeness_note() == CompletenessNote::left_p_sequentially_complete);
    for (const auto& f : report.findings)
        if (f.notion == "p-sequential completeness") CHECK(!f.counterexample_found);
}

TEST_CASE("the punctured space yields the halving counterexample") {
    const Space s = builtin_space("paper_example_punctured");
    const std::vector<Sequence> family = {Sequence::geometric(0.5, 256)};
    const std::vector<Point> candidates = {Point::coord(0.1), Point::coord(0.5),
                                           Point::coord(1.0)};
    const auto report = probe_completeness(s, family, candidates, 1e-12);
    CHECK(!report.pass());
    bool found = false;
    for (const auto& f : report.findings)
        if (f.notion == "p-sequential completeness") {
            found = true;
            CHECK(f.counterexample_found);
            CHECK(f.sequence == "geometric(0.5)");
        }
    CHECK(found);
}

TEST_CASE("an empty candidate list is flagged as insufficient") {
    const Space s = builtin_space("paper_example");
    const auto report =
        probe_completeness(s, {Sequence::geometric(0.5, 64)}, {}, 1e-12);
    CHECK(report.candidates_insufficient);
    CHECK_THROWS_AS(probe_completeness(s, {}, {}, 1e-12), std::invalid_argument);
}

TEST_CASE("counterexample selector and its closed forms") {
    const Space s = builtin_space("paper_example_punctured");
    const auto cmap = build_counterexample_map(s, Sequence::geometric(0.5, 256));

    CHECK(cmap.threshold_fraction() == 0.125);
    CHECK(cmap.tail_distance(0.25) == 0.25);
    CHECK(cmap.tail_distance(1.0) == 1.5);
    CHECK(cmap.selector(0.25) == 8);
    CHECK(cmap.selector(1.0) == 5);

    const Mapping t = cmap.mapping();
    CHECK(t.apply(s, Point::coord(0.25)).coord() == std::ldexp(1.0, -8));
    CHECK(t.apply(s, Point::coord(1.0)).coord() == std::ldexp(1.0, -5));

    SUBCASE("the map always moves strictly down") {
        SplitMix64 rng(777);
        for (int i = 0; i < 500; ++i) {
            const double x = rng.uniform(1e-9, 1e3);
            const double tx = t.apply(s, Point::coord(x)).coord();
            CHECK(tx < x);
            CHECK(tx > 0.0);
        }
    }
}

TEST_CASE("the construction requires a vanishing Cauchy sequence") {
    const Space s = builtin_space("paper_example_punctured");
    // constant(1) is tau(p+)-Cauchy but its limit is 2, not 0
    CHECK_THROWS_AS(build_counterexample_map(s, Sequence::constant(1.0, 256)),
                    PreconditionError);
}

TEST_CASE("the general construction path agrees with the closed forms") {
    // the non-punctured space takes the scan-based path; tail distances match
    // the closed forms where both apply
    const Space s = builtin_space("paper_example");
    const auto cmap = build_counterexample_map(s, Sequence::geometric(0.5, 256));
    CHECK(cmap.tail_distance(0.25) == doctest::Approx(0.25));
    CHECK(cmap.tail_distance(1.0) == doctest::Approx(1.5));
    const std::uint64_t n = cmap.selector(0.25);
    CHECK(n >= 1);
    CHECK(n <= 8); // the empirical tail bound is tighter than 4 * 2^-N
}

TEST_CASE("the audited construction passes all three checks") {
    const Space s = builtin_space("paper_example_punctured");
    const auto cmap = build_counterexample_map(s, Sequence::geometric(0.5, 256));
    CheckStrategy strategy = CheckStrategy::sampled(10'000, 42);
    strategy.upper_cap = 1e3;
    const auto report = audit_counterexample(s, cmap, strategy);
    CHECK(report.pass());
    CHECK(report.find("eq2")->checks == 10'000);
    CHECK(report.find("no_fixed_point")->checks == 10'000);
    CHECK(report.find("selector_bound")->checks == 10'000);
}

TEST_CASE("weakening the selector breaks the contraction") {
    const Space s = builtin_space("paper_example_punctured");
    const auto cmap = build_counterexample_map(s, Sequence::geometric(0.5, 256));
    const Mapping tampered = Mapping::function(
        [cmap](double x) {
            const std::uint64_t n = cmap.selector(x);
            return cmap.sequence().at(n > 3 ? n - 3 : 1).coord();
        },
        "tampered");
    // the weakened selector only differs where the original picks a deep
    // index, i.e. small x; sample there
    CheckStrategy strategy = CheckStrategy::sampled(10'000, 42);
    strategy.upper_cap = 2.0;
    const auto report = check_kannan(s, tampered, KannanConstant(0.125), strategy);
    CHECK(!report.pass());
    CHECK(report.find("eq2")->worst.has_value());
}

TEST_CASE("the audit rejects exhaustive strategies") {
    const Space s = builtin_space("paper_example_punctured");
    const auto cmap = build_counterexample_map(s, Sequence::geometric(0.5, 256));
    CHECK_THROWS_AS(audit_counterexample(s, cmap, CheckStrategy::exhaustive(0.0)),
                    std::invalid_argument);
}
