#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>

namespace pqmet {

/// A point of a space: an index into a finite universe or a real coordinate
/// in an analytic one.
class Point {
public:
    static Point index(std::size_t i) { return Point(i); }
    static Point coord(double x) { return Point(x); }

    bool is_index() const { return std::holds_alternative<std::size_t>(rep_); }
    bool is_coord() const { return !is_index(); }

    std::size_t index() const {
        if (!is_index()) throw std::logic_error("point is not a finite-space index");
        return std::get<std::size_t>(rep_);
    }

    double coord() const {
        if (!is_coord()) throw std::logic_error("point is not an analytic coordinate");
        return std::get<double>(rep_);
    }

    std::string str() const;

    friend bool operator==(const Point& a, const Point& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

    // Kind first, then value; used for deterministic witness tie-breaks.
    friend bool operator<(const Point& a, const Point& b) {
        if (a.rep_.index() != b.rep_.index()) return a.rep_.index() < b.rep_.index();
        if (a.is_index()) return std::get<std::size_t>(a.rep_) < std::get<std::size_t>(b.rep_);
        return std::get<double>(a.rep_) < std::get<double>(b.rep_);
    }

private:
    explicit Point(std::size_t i) : rep_(i) {}
    explicit Point(double x) : rep_(x) {}

    std::variant<std::size_t, double> rep_;
};

} // namespace pqmet
