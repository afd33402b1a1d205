#include "pqmet/sequence.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pqmet {

Sequence::Sequence(std::string name, std::size_t horizon, std::function<Point(std::size_t)> gen)
    : name_(std::move(name)), horizon_(horizon), gen_(std::move(gen)) {
    if (horizon_ == 0) throw std::invalid_argument("sequence horizon must be positive");
    if (!gen_) throw std::invalid_argument("sequence requires a generator");
}

Point Sequence::at(std::size_t n) const {
    if (n == 0 || n > horizon_)
        throw std::invalid_argument("sequence index " + std::to_string(n) +
                                    " outside [1, " + std::to_string(horizon_) + "]");
    return gen_(n);
}

Sequence Sequence::geometric(double ratio, std::size_t horizon) {
    if (!(ratio > 0.0) || !(ratio < 1.0))
        throw std::invalid_argument("geometric ratio must lie in (0, 1)");
    std::ostringstream name;
    name << "geometric(" << ratio << ")";
    Sequence s(name.str(), horizon, [ratio](std::size_t n) {
        return Point::coord(std::pow(ratio, static_cast<double>(n)));
    });
    s.ratio_ = ratio;
    return s;
}

Sequence Sequence::harmonic(std::size_t horizon) {
    return Sequence("harmonic", horizon, [](std::size_t n) {
        return Point::coord(1.0 / static_cast<double>(n));
    });
}

Sequence Sequence::towards_one(std::size_t horizon) {
    return Sequence("n/(n+1)", horizon, [](std::size_t n) {
        return Point::coord(static_cast<double>(n) / static_cast<double>(n + 1));
    });
}

Sequence Sequence::constant(double value, std::size_t horizon) {
    std::ostringstream name;
    name << "constant(" << value << ")";
    return Sequence(name.str(), horizon, [value](std::size_t) { return Point::coord(value); });
}

Sequence Sequence::custom(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("custom sequence must not be empty");
    const std::size_t horizon = values.size();
    return Sequence("custom", horizon, [values = std::move(values)](std::size_t n) {
        return Point::coord(values[n - 1]);
    });
}

} // namespace pqmet
