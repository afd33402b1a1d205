#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "pqmet/point.hpp"

namespace pqmet {

enum class SpaceKind { finite, analytic };

/// Ground-truth completeness status of a built-in space. Evidence reports use
/// it as an annotation only; loaded spaces are `unknown`.
enum class CompletenessNote {
    unknown,
    left_p_sequentially_complete,
    not_p_sequentially_complete,
};

/// Real interval with open/closed endpoint flags. `hi` may be +infinity.
struct Interval {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    bool hi_open = true;

    bool contains(double x) const;
    std::string str() const;
};

/// A point universe with an asymmetric distance p. Finite spaces are backed by
/// an n-by-n matrix of stored values; analytic spaces evaluate a closed-form
/// distance in double precision on an interval domain.
///
/// All member functions are pure; a Space is a value and is safe to share
/// across threads.
class Space {
public:
    using DistanceFn = std::function<double(double, double)>;

    /// Finite space from labels and a square matrix with matrix[i][j] = p(i, j).
    /// Entries must be finite and non-negative.
    static Space finite(std::vector<std::string> labels,
                        std::vector<std::vector<double>> matrix,
                        std::string label = "finite");

    static Space analytic(Interval domain, DistanceFn distance, std::string label,
                          CompletenessNote note = CompletenessNote::unknown);

    SpaceKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == SpaceKind::finite; }
    const std::string& label() const { return label_; }
    CompletenessNote completeness_note() const { return note_; }

    /// Number of points (finite spaces only).
    std::size_t point_count() const;
    const std::vector<std::string>& point_labels() const;
    /// Row-major distance matrix (finite spaces only).
    const std::vector<double>& matrix() const;
    /// Domain interval (analytic spaces only).
    const Interval& domain() const;

    bool contains(const Point& p) const;

    /// p(x, y). Throws std::domain_error naming the offending point when x or
    /// y lies outside the universe.
    double distance(const Point& x, const Point& y) const;

    /// p+(x, y) = p(x, y) + p(y, x).
    double sym_distance(const Point& x, const Point& y) const {
        return distance(x, y) + distance(y, x);
    }

    /// The conjugate space: distance (x, y) -> p(y, x) on the same universe.
    Space conjugate() const;

    /// The symmetrized space: distance (x, y) -> p(x, y) + p(y, x).
    Space symmetrized() const;

    /// Membership in the ball of the given radius: strict test
    /// p(center, candidate) < radius + p(center, center). radius must be > 0.
    bool ball_contains(const Point& center, double radius, const Point& candidate) const;

    std::string describe() const;
    std::string describe_point(const Point& p) const;

private:
    Space() = default;

    SpaceKind kind_ = SpaceKind::finite;
    std::string label_;
    CompletenessNote note_ = CompletenessNote::unknown;

    // finite representation
    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<double> matrix_; // row-major n_*n_

    // analytic representation
    Interval domain_;
    DistanceFn distance_;
};

/// Built-in analytic spaces by name; throws std::out_of_range listing the
/// available names for an unknown one.
Space builtin_space(const std::string& name);
std::vector<std::string> builtin_space_names();

/// Parse a finite-space document:
///   { "points": ["a", ...], "matrix": [[0, 1], ...] }
/// The matrix must be square with side == number of points; entries must be
/// finite and non-negative. Violations raise ParseError with the location.
Space load_finite_space(const std::string& document);

} // namespace pqmet
