#include "pqmet/kannan.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "pqmet/errors.hpp"
#include "record_builder.hpp"
#include "sampling.hpp"

namespace pqmet {

using detail::contraction_violated;
using detail::RecordBuilder;

Mapping Mapping::table(std::vector<std::size_t> images, std::string name) {
    if (images.empty()) throw std::invalid_argument("mapping table must not be empty");
    Mapping m;
    m.name_ = std::move(name);
    m.images_ = std::move(images);
    return m;
}

Mapping Mapping::function(std::function<double(double)> fn, std::string name) {
    if (!fn) throw std::invalid_argument("mapping requires a function");
    Mapping m;
    m.name_ = std::move(name);
    m.fn_ = std::move(fn);
    return m;
}

const std::vector<std::size_t>& Mapping::images() const {
    if (!is_table()) throw std::logic_error("images: not a table mapping");
    return images_;
}

Point Mapping::apply(const Space& space, const Point& x) const {
    if (!space.contains(x))
        throw std::domain_error("mapping '" + name_ + "': point " + x.str() +
                                " outside the universe of space '" + space.label() + "'");
    if (is_table()) {
        if (!space.is_finite())
            throw std::domain_error("mapping '" + name_ + "' is a table but space '" +
                                    space.label() + "' is analytic");
        if (images_.size() != space.point_count())
            throw std::domain_error("mapping '" + name_ + "' table size " +
                                    std::to_string(images_.size()) + " does not match space size " +
                                    std::to_string(space.point_count()));
        const std::size_t image = images_[x.index()];
        if (image >= space.point_count())
            throw std::domain_error("mapping '" + name_ + "' sends point " + x.str() +
                                    " to out-of-range index " + std::to_string(image));
        return Point::index(image);
    }
    const Point image = Point::coord(fn_(x.coord()));
    if (!space.contains(image))
        throw std::domain_error("mapping '" + name_ + "' sends point " + x.str() + " to " +
                                image.str() + ", outside the domain of space '" + space.label() +
                                "'");
    return image;
}

std::vector<std::string> builtin_mapping_names() { return {"example_map"}; }

Mapping builtin_mapping(const std::string& name) {
    if (name == "example_map")
        return Mapping::function([](double x) { return x <= 1.0 ? 0.0 : x / 8.0; },
                                 "example_map");
    std::string names;
    for (const auto& known : builtin_mapping_names()) {
        if (!names.empty()) names += ", ";
        names += known;
    }
    throw std::out_of_range("unknown mapping '" + name + "' (available: " + names + ")");
}

Mapping load_mapping(const std::string& document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid mapping document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("table") || !doc["table"].is_array())
        throw ParseError("mapping document requires a \"table\" array");
    std::vector<std::size_t> images;
    for (const auto& cell : doc["table"]) {
        if (!cell.is_number_unsigned())
            throw ParseError("mapping table entries must be non-negative integers");
        images.push_back(cell.get<std::size_t>());
    }
    if (images.empty()) throw ParseError("mapping table must not be empty");
    std::string name = "table";
    if (doc.contains("name") && doc["name"].is_string()) name = doc["name"].get<std::string>();
    return Mapping::table(std::move(images), std::move(name));
}

KannanConstant::KannanConstant(double lambda) : lambda_(lambda) {
    if (!(lambda >= 0.0) || !(lambda < 0.25))
        throw std::invalid_argument("Kannan constant must lie in [0, 1/4), got " +
                                    std::to_string(lambda));
}

namespace {

struct PairTerms {
    double num;  // p(Tx, Ty)
    double den;  // p(x, Tx) + p(y, Ty)
    Point tx;
    Point ty;
};

PairTerms pair_terms(const Space& space, const Mapping& map, const Point& x, const Point& y) {
    const Point tx = map.apply(space, x);
    const Point ty = map.apply(space, y);
    return {space.distance(tx, ty), space.distance(x, tx) + space.distance(y, ty), tx, ty};
}

} // namespace

VerificationReport check_kannan(const Space& space, const Mapping& map,
                                const KannanConstant& constant, const CheckStrategy& strategy) {
    const double slack = strategy.slack;
    const double lambda = constant.value();
    RecordBuilder eq2("eq2");
    detail::visit_pairs(space, strategy, "kannan/pairs", [&](const Point& x, const Point& y) {
        const PairTerms t = pair_terms(space, map, x, y);
        eq2.count();
        double excess = 0.0;
        if (contraction_violated(t.num, t.den, lambda, slack, excess))
            eq2.violation({x, y}, t.num, lambda * t.den, excess);
        return true;
    });
    VerificationReport report;
    report.records.push_back(eq2.take());
    return report;
}

LambdaEstimate estimate_lambda(const Space& space, const Mapping& map,
                               const CheckStrategy& strategy) {
    const double slack = strategy.slack;
    LambdaEstimate out;
    bool have_witness = false;
    detail::visit_pairs(space, strategy, "kannan/pairs", [&](const Point& x, const Point& y) {
        const PairTerms t = pair_terms(space, map, x, y);
        if (t.den <= slack) {
            if (t.num <= slack) return true; // 0/0: no constraint on lambda
            out.feasible = false;
            out.lambda_hat = std::numeric_limits<double>::infinity();
            out.witness = Witness{{x, y}, t.num, t.den, t.num};
            return false; // first infeasible pair decides
        }
        const double ratio = t.num / t.den;
        if (!have_witness || ratio > out.lambda_hat) {
            have_witness = true;
            out.lambda_hat = ratio;
            out.witness = Witness{{x, y}, t.num, t.den, ratio};
        }
        return true;
    });
    return out;
}

VerificationReport check_lemma2(const Space& space, const Mapping& map,
                                const KannanConstant& constant, const CheckStrategy& strategy) {
    VerificationReport kannan = check_kannan(space, map, constant, strategy);
    if (!kannan.pass()) {
        const CheckRecord* rec = kannan.find("eq2");
        std::ostringstream msg;
        msg << "check_lemma2: check_kannan (eq2) fails for mapping '" << map.name()
            << "' at lambda=" << constant.value() << " with " << rec->violations
            << " violation(s)";
        throw PreconditionError(msg.str());
    }

    const double slack = strategy.slack;
    const double lambda = constant.value();
    const double gamma = constant.gamma();
    RecordBuilder a("lemma2a"), b("lemma2b");
    detail::visit_pairs(space, strategy, "kannan/pairs", [&](const Point& x, const Point& y) {
        const Point tx = map.apply(space, x);
        const Point ty = map.apply(space, y);
        const double num_plus = space.sym_distance(tx, ty);
        const double den = space.distance(x, tx) + space.distance(y, ty);
        const double den_plus = space.sym_distance(x, tx) + space.sym_distance(y, ty);

        // (a) in the equivalent ratio form num_plus / (2 den) <= lambda
        a.count();
        double excess = 0.0;
        if (contraction_violated(num_plus, 2.0 * den, lambda, slack, excess))
            a.violation({x, y}, num_plus, gamma * den, excess);

        b.count();
        if (contraction_violated(num_plus, den_plus, gamma, slack, excess))
            b.violation({x, y}, num_plus, gamma * den_plus, excess);
        return true;
    });

    VerificationReport report;
    report.records.push_back(a.take());
    report.records.push_back(b.take());
    return report;
}

} // namespace pqmet
