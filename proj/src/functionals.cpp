#include "ghawkes/functionals.hpp"

#include "ghawkes/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ghawkes {

namespace {

void require_window(double t) {
    if (!std::isfinite(t) || t < 0.0) {
        throw std::invalid_argument("functional window must be finite and >= 0");
    }
}

} // namespace

PathFunctionalSpec PathFunctionalSpec::constant(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("constant functional value must be finite");
    PathFunctionalSpec f;
    f.kind = Kind::constant;
    f.value = v;
    return f;
}

PathFunctionalSpec PathFunctionalSpec::count_at(double t) {
    require_window(t);
    PathFunctionalSpec f;
    f.kind = Kind::count_at;
    f.t = t;
    return f;
}

PathFunctionalSpec PathFunctionalSpec::void_indicator(double t) {
    require_window(t);
    PathFunctionalSpec f;
    f.kind = Kind::void_indicator;
    f.t = t;
    return f;
}

PathFunctionalSpec PathFunctionalSpec::count_log_rate(double rate, double t) {
    require_window(t);
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw std::invalid_argument("count_log_rate needs a finite rate > 0");
    }
    PathFunctionalSpec f;
    f.kind = Kind::count_log_rate;
    f.rate = rate;
    f.t = t;
    return f;
}

PathFunctionalSpec PathFunctionalSpec::parse(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    const auto num = [&](std::size_t i) {
        try {
            return std::stod(parts.at(i));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed functional spec '" + spec + "'");
        }
    };
    if (parts.empty()) throw std::invalid_argument("empty functional spec");
    if (parts[0] == "const" && parts.size() == 2) return constant(num(1));
    if (parts[0] == "count" && parts.size() == 2) return count_at(num(1));
    if (parts[0] == "void" && parts.size() == 2) return void_indicator(num(1));
    if (parts[0] == "loglin" && parts.size() == 3) return count_log_rate(num(1), num(2));
    throw std::invalid_argument("unknown functional spec '" + spec +
                                "'; expected const:v | count:t | void:t | loglin:c:t");
}

double PathFunctionalSpec::evaluate(const Configuration& omega) const {
    switch (kind) {
        case Kind::constant:
            return value;
        case Kind::count_at:
            return static_cast<double>(omega.count(t));
        case Kind::void_indicator:
            return omega.count(t) == 0 ? 1.0 : 0.0;
        case Kind::count_log_rate:
            return static_cast<double>(omega.count(t)) * std::log(rate) - (rate - 1.0) * t;
    }
    return 0.0;
}

double PathFunctionalSpec::poisson_expectation() const {
    switch (kind) {
        case Kind::constant:
            return value;
        case Kind::count_at:
            return t;
        case Kind::void_indicator:
            return std::exp(-t);
        case Kind::count_log_rate:
            return t * std::log(rate) - (rate - 1.0) * t;
    }
    return 0.0;
}

double PathFunctionalSpec::log_mgf() const {
    switch (kind) {
        case Kind::constant:
            return value;
        case Kind::count_at:
            // E[e^{N(t)}] = exp(t (e - 1))
            return t * (std::exp(1.0) - 1.0);
        case Kind::void_indicator:
            // E[e^{1{N(t)=0}}] = 1 + (e - 1) e^{-t}
            return std::log1p((std::exp(1.0) - 1.0) * std::exp(-t));
        case Kind::count_log_rate:
            // e^f is the rate-c Girsanov density on [0, t]: mean exactly 1.
            return 0.0;
    }
    return 0.0;
}

double PathFunctionalSpec::window() const { return kind == Kind::constant ? 0.0 : t; }

std::string PathFunctionalSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::constant:
            os << "const:" << value;
            break;
        case Kind::count_at:
            os << "count:" << t;
            break;
        case Kind::void_indicator:
            os << "void:" << t;
            break;
        case Kind::count_log_rate:
            os << "loglin:" << rate << ":" << t;
            break;
    }
    return os.str();
}

} // namespace ghawkes
