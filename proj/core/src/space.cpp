#include "pqmet/space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "pqmet/errors.hpp"

namespace pqmet {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

std::string Point::str() const {
    if (is_index()) return "#" + std::to_string(index());
    return format_double(coord());
}

bool Interval::contains(double x) const {
    if (std::isnan(x)) return false;
    if (lo_open ? !(x > lo) : !(x >= lo)) return false;
    if (hi_open ? !(x < hi) : !(x <= hi)) return false;
    return true;
}

std::string Interval::str() const {
    std::ostringstream out;
    out << (lo_open ? '(' : '[') << format_double(lo) << ", ";
    if (std::isinf(hi))
        out << "inf";
    else
        out << format_double(hi);
    out << (hi_open ? ')' : ']');
    return out.str();
}

Space Space::finite(std::vector<std::string> labels, std::vector<std::vector<double>> matrix,
                    std::string label) {
    const std::size_t n = matrix.size();
    if (n == 0) throw std::invalid_argument("finite space must contain at least one point");
    if (!labels.empty() && labels.size() != n)
        throw std::invalid_argument("label count does not match matrix size");
    if (labels.empty()) {
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    }

    Space s;
    s.kind_ = SpaceKind::finite;
    s.label_ = std::move(label);
    s.n_ = n;
    s.labels_ = std::move(labels);
    s.matrix_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n) throw std::invalid_argument("matrix not square");
        for (std::size_t j = 0; j < n; ++j) {
            const double v = matrix[i][j];
            if (std::isnan(v) || std::isinf(v))
                throw std::invalid_argument("non-finite distance at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
            if (v < 0.0)
                throw std::invalid_argument("negative distance at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            s.matrix_.push_back(v);
        }
    }
    return s;
}

Space Space::analytic(Interval domain, DistanceFn distance, std::string label,
                      CompletenessNote note) {
    if (!distance) throw std::invalid_argument("analytic space requires a distance function");
    Space s;
    s.kind_ = SpaceKind::analytic;
    s.label_ = std::move(label);
    s.note_ = note;
    s.domain_ = domain;
    s.distance_ = std::move(distance);
    return s;
}

std::size_t Space::point_count() const {
    if (!is_finite()) throw std::logic_error("point_count: not a finite space");
    return n_;
}

const std::vector<std::string>& Space::point_labels() const {
    if (!is_finite()) throw std::logic_error("point_labels: not a finite space");
    return labels_;
}

const std::vector<double>& Space::matrix() const {
    if (!is_finite()) throw std::logic_error("matrix: not a finite space");
    return matrix_;
}

const Interval& Space::domain() const {
    if (is_finite()) throw std::logic_error("domain: not an analytic space");
    return domain_;
}

bool Space::contains(const Point& p) const {
    if (is_finite()) return p.is_index() && p.index() < n_;
    return p.is_coord() && domain_.contains(p.coord());
}

double Space::distance(const Point& x, const Point& y) const {
    if (!contains(x))
        throw std::domain_error("point " + x.str() + " outside the universe of space '" +
                                label_ + "'");
    if (!contains(y))
        throw std::domain_error("point " + y.str() + " outside the universe of space '" +
                                label_ + "'");
    if (is_finite()) return matrix_[x.index() * n_ + y.index()];
    return distance_(x.coord(), y.coord());
}

Space Space::conjugate() const {
    Space s = *this;
    s.label_ = label_ + "^-1";
    s.note_ = CompletenessNote::unknown;
    if (is_finite()) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                std::swap(s.matrix_[i * n_ + j], s.matrix_[j * n_ + i]);
    } else {
        DistanceFn base = distance_;
        s.distance_ = [base](double x, double y) { return base(y, x); };
    }
    return s;
}

Space Space::symmetrized() const {
    Space s = *this;
    s.label_ = label_ + "^+";
    s.note_ = CompletenessNote::unknown;
    if (is_finite()) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                s.matrix_[i * n_ + j] = matrix_[i * n_ + j] + matrix_[j * n_ + i];
    } else {
        DistanceFn base = distance_;
        s.distance_ = [base](double x, double y) { return base(x, y) + base(y, x); };
    }
    return s;
}

bool Space::ball_contains(const Point& center, double radius, const Point& candidate) const {
    if (!(radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
    return distance(center, candidate) < radius + distance(center, center);
}

std::string Space::describe() const {
    std::ostringstream out;
    out << label_ << " (";
    if (is_finite())
        out << "finite, " << n_ << (n_ == 1 ? " point" : " points");
    else
        out << "analytic on " << domain_.str();
    out << ")";
    return out.str();
}

std::string Space::describe_point(const Point& p) const {
    if (is_finite() && p.is_index() && p.index() < n_)
        return labels_[p.index()] + " (" + p.str() + ")";
    return p.str();
}

std::vector<std::string> builtin_space_names() {
    return {"paper_example", "paper_example_punctured"};
}

Space builtin_space(const std::string& name) {
    const auto max_plus = [](double x, double y) { return std::max(x - y, 0.0) + x; };
    if (name == "paper_example") {
        return Space::analytic(Interval{0.0, std::numeric_limits<double>::infinity(),
                                        /*lo_open=*/false, /*hi_open=*/true},
                               max_plus, "paper_example",
                               CompletenessNote::left_p_sequentially_complete);
    }
    if (name == "paper_example_punctured") {
        return Space::analytic(Interval{0.0, std::numeric_limits<double>::infinity(),
                                        /*lo_open=*/true, /*hi_open=*/true},
                               max_plus, "paper_example_punctured",
                               CompletenessNote::not_p_sequentially_complete);
    }
    std::string names;
    for (const auto& known : builtin_space_names()) {
        if (!names.empty()) names += ", ";
        names += known;
    }
    throw std::out_of_range("unknown space '" + name + "' (available: " + names + ")");
}

Space load_finite_space(const std::string& document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid finite-space document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("finite-space document must be an object");
    if (!doc.contains("points") || !doc["points"].is_array())
        throw ParseError("finite-space document requires a \"points\" array");
    if (!doc.contains("matrix") || !doc["matrix"].is_array())
        throw ParseError("finite-space document requires a \"matrix\" array");

    std::vector<std::string> labels;
    for (const auto& p : doc["points"]) {
        if (!p.is_string()) throw ParseError("point labels must be strings");
        labels.push_back(p.get<std::string>());
    }

    const std::size_t n = labels.size();
    if (n == 0) throw ParseError("finite-space document lists no points");
    if (doc["matrix"].size() != n) throw ParseError("matrix not square");

    std::vector<std::vector<double>> matrix;
    matrix.reserve(n);
    std::size_t row_index = 0;
    for (const auto& row : doc["matrix"]) {
        if (!row.is_array() || row.size() != n) throw ParseError("matrix not square");
        std::vector<double> values;
        values.reserve(n);
        std::size_t col_index = 0;
        for (const auto& cell : row) {
            if (!cell.is_number())
                throw ParseError("non-numeric distance at (" + std::to_string(row_index) + "," +
                                 std::to_string(col_index) + ")");
            const double v = cell.get<double>();
            if (std::isnan(v) || std::isinf(v))
                throw ParseError("non-finite distance at (" + std::to_string(row_index) + "," +
                                 std::to_string(col_index) + ")");
            if (v < 0.0)
                throw ParseError("negative distance at (" + std::to_string(row_index) + "," +
                                 std::to_string(col_index) + ")");
            values.push_back(v);
            ++col_index;
        }
        matrix.push_back(std::move(values));
        ++row_index;
    }

    std::string label = "finite";
    if (doc.contains("label") && doc["label"].is_string()) label = doc["label"].get<std::string>();
    return Space::finite(std::move(labels), std::move(matrix), std::move(label));
}

} // namespace pqmet
