#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "pqmet/errors.hpp"
#include "pqmet/rng.hpp"
#include "pqmet/space.hpp"

using namespace pqmet;

namespace {

Space two_point() { return Space::finite({"a", "b"}, {{0, 1}, {2, 0}}, "two_point"); }

} // namespace

TEST_CASE("builtin example space evaluates the closed form") {
    const Space s = builtin_space("paper_example");
    CHECK(s.distance(Point::coord(3), Point::coord(1)) == 5.0);
    CHECK(s.distance(Point::coord(1), Point::coord(3)) == 1.0);
    CHECK(s.distance(Point::coord(0), Point::coord(0)) == 0.0);
    CHECK(s.distance(Point::coord(2), Point::coord(2)) == 2.0);
}

TEST_CASE("unknown builtin lists the available names") {
    try {
        builtin_space("nonexistent");
        FAIL("expected lookup error");
    } catch (const std::out_of_range& e) {
        const std::string what = e.what();
        CHECK(what.find("paper_example") != std::string::npos);
        CHECK(what.find("paper_example_punctured") != std::string::npos);
    }
}

TEST_CASE("punctured space excludes zero") {
    const Space s = builtin_space("paper_example_punctured");
    CHECK(!s.contains(Point::coord(0.0)));
    CHECK(s.contains(Point::coord(1e-12)));
    CHECK_THROWS_AS(s.distance(Point::coord(0.0), Point::coord(1.0)), std::domain_error);
    CHECK(s.completeness_note() == CompletenessNote::not_p_sequentially_complete);
    CHECK(builtin_space("paper_example").completeness_note() ==
          CompletenessNote::left_p_sequentially_complete);
}

TEST_CASE("conjugate reverses the distance") {
    const Space s = builtin_space("paper_example");
    const Space c = s.conjugate();
    CHECK(c.distance(Point::coord(3), Point::coord(1)) == 1.0);
    CHECK(c.distance(Point::coord(1), Point::coord(3)) == 5.0);

    const Space f = two_point().conjugate();
    CHECK(f.distance(Point::index(0), Point::index(1)) == 2.0);
    CHECK(f.distance(Point::index(1), Point::index(0)) == 1.0);
    CHECK(f.distance(Point::index(0), Point::index(0)) == 0.0);
}

TEST_CASE("conjugation is an involution, pointwise exactly") {
    SplitMix64 rng(2024);
    const Space s = builtin_space("paper_example");
    const Space cc = s.conjugate().conjugate();
    for (int i = 0; i < 500; ++i) {
        const Point x = Point::coord(rng.uniform(0.0, 1e6));
        const Point y = Point::coord(rng.uniform(0.0, 1e6));
        CHECK(cc.distance(x, y) == s.distance(x, y));
    }
    const Space f = two_point();
    const Space fcc = f.conjugate().conjugate();
    CHECK(fcc.matrix() == f.matrix());
}

TEST_CASE("symmetrization adds both directions") {
    const Space s = builtin_space("paper_example");
    const Space plus = s.symmetrized();
    CHECK(plus.distance(Point::coord(3), Point::coord(1)) == 6.0);
    CHECK(plus.distance(Point::coord(2), Point::coord(2)) == 4.0);

    SplitMix64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const Point x = Point::coord(rng.uniform(0.0, 1e6));
        const Point y = Point::coord(rng.uniform(0.0, 1e6));
        // symmetric by construction, bit for bit
        CHECK(plus.distance(x, y) == plus.distance(y, x));
        // self-distance doubles exactly
        CHECK(plus.distance(x, x) == 2.0 * s.distance(x, x));
        // matches sym_distance on the base space
        CHECK(plus.distance(x, y) == s.sym_distance(x, y));
    }
}

TEST_CASE("ball membership is strict") {
    const Space s = builtin_space("paper_example");
    CHECK(s.ball_contains(Point::coord(1), 0.5, Point::coord(0.7)));  // p = 1.3 < 1.5
    CHECK(!s.ball_contains(Point::coord(1), 0.5, Point::coord(0.4))); // p = 1.6 >= 1.5
    CHECK_THROWS_AS(s.ball_contains(Point::coord(1), 0.0, Point::coord(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(s.ball_contains(Point::coord(1), -1.0, Point::coord(1)),
                    std::invalid_argument);
}

TEST_CASE("every point lies in its own balls") {
    SplitMix64 rng(99);
    for (const char* name : {"paper_example", "paper_example_punctured"}) {
        const Space s = builtin_space(name);
        for (int i = 0; i < 200; ++i) {
            const Point x = Point::coord(rng.uniform(1e-9, 1e6));
            for (double eps : {1e-9, 0.5, 10.0})
                CHECK(s.ball_contains(x, eps, x));
        }
    }
    const Space f = two_point();
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(f.ball_contains(Point::index(i), 1e-9, Point::index(i)));
}

TEST_CASE("finite-space documents are validated") {
    const Space ok = load_finite_space(R"({"points":["a","b"],"matrix":[[0,1],[2,0]]})");
    CHECK(ok.point_count() == 2);
    CHECK(ok.distance(Point::index(1), Point::index(0)) == 2.0);
    CHECK(ok.point_labels()[1] == "b");

    CHECK_THROWS_WITH_AS(
        load_finite_space(R"({"points":["a","b"],"matrix":[[0,-1],[2,0]]})"),
        "negative distance at (0,1)", ParseError);
    CHECK_THROWS_WITH_AS(
        load_finite_space(R"({"points":["a","b"],"matrix":[[0,1,2],[2,0,1]]})"),
        "matrix not square", ParseError);
    CHECK_THROWS_WITH_AS(
        load_finite_space(R"({"points":["a","b","c"],"matrix":[[0,1],[2,0]]})"),
        "matrix not square", ParseError);
    CHECK_THROWS_AS(load_finite_space("not json at all"), ParseError);
    CHECK_THROWS_AS(load_finite_space(R"({"matrix":[[0]]})"), ParseError);
    CHECK_THROWS_AS(load_finite_space(R"({"points":[],"matrix":[]})"), ParseError);
}

TEST_CASE("finite construction rejects bad matrices") {
    CHECK_THROWS_AS(Space::finite({}, {}, "empty"), std::invalid_argument);
    CHECK_THROWS_AS(Space::finite({"a"}, {{std::nan("")}}, "nan"), std::invalid_argument);
    CHECK_THROWS_AS(Space::finite({"a", "b"}, {{0, 1}, {2}}, "ragged"), std::invalid_argument);
}

TEST_CASE("out-of-universe points are named in errors") {
    const Space f = two_point();
    try {
        f.distance(Point::index(3), Point::index(0));
        FAIL("expected domain error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("#3") != std::string::npos);
    }
    const Space s = builtin_space("paper_example");
    CHECK_THROWS_AS(s.distance(Point::coord(-1.0), Point::coord(0.0)), std::domain_error);
    CHECK_THROWS_AS(s.distance(Point::index(0), Point::coord(0.0)), std::domain_error);
}

TEST_CASE("point helpers") {
    CHECK(Point::index(3).str() == "#3");
    CHECK(Point::coord(0.5).str() == "0.5");
    CHECK(two_point().describe_point(Point::index(1)) == "b (#1)");
    CHECK(Point::index(1) != Point::coord(1.0));
    CHECK(Point::coord(1.0) == Point::coord(1.0));
}
