#include "ghawkes/model_config.hpp"

#include "ghawkes/errors.hpp"

#include <fstream>
#include <utility>
#include <vector>

namespace ghawkes {

namespace {

const nlohmann::json& require_key(const nlohmann::json& j, const std::string& parent,
                                  const std::string& key) {
    const std::string path = parent.empty() ? key : parent + "." + key;
    if (!j.is_object()) {
        throw config_error("expected an object at '" + parent + "'", parent);
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        throw config_error("missing key '" + path + "'", path);
    }
    return *it;
}

double require_number(const nlohmann::json& j, const std::string& parent, const std::string& key) {
    const auto& v = require_key(j, parent, key);
    const std::string path = parent.empty() ? key : parent + "." + key;
    if (!v.is_number()) {
        throw config_error("key '" + path + "' must be a number", path);
    }
    return v.get<double>();
}

std::string require_string(const nlohmann::json& j, const std::string& parent,
                           const std::string& key) {
    const auto& v = require_key(j, parent, key);
    const std::string path = parent.empty() ? key : parent + "." + key;
    if (!v.is_string()) {
        throw config_error("key '" + path + "' must be a string", path);
    }
    return v.get<std::string>();
}

PhiSpec parse_phi(const nlohmann::json& j) {
    const std::string kind = require_string(j, "model.phi", "kind");
    if (kind == "identity") return PhiSpec::identity();
    if (kind == "affine") {
        return PhiSpec::affine(require_number(j, "model.phi", "slope"),
                               require_number(j, "model.phi", "intercept"));
    }
    if (kind == "clipped_linear") {
        return PhiSpec::clipped_linear(require_number(j, "model.phi", "slope"),
                                       require_number(j, "model.phi", "floor"));
    }
    if (kind == "sigmoid") {
        return PhiSpec::sigmoid(require_number(j, "model.phi", "scale"),
                                require_number(j, "model.phi", "midpoint"),
                                require_number(j, "model.phi", "max"));
    }
    throw config_error("unknown phi kind '" + kind + "'", "model.phi.kind");
}

KernelSpec parse_kernel(const nlohmann::json& j) {
    const std::string kind = require_string(j, "model.kernel", "kind");
    if (kind == "exponential") {
        return KernelSpec::exponential(require_number(j, "model.kernel", "a"),
                                       require_number(j, "model.kernel", "b"));
    }
    if (kind == "tabulated") {
        const auto& pts = require_key(j, "model.kernel", "points");
        if (!pts.is_array()) {
            throw config_error("key 'model.kernel.points' must be an array of [t, h] pairs",
                               "model.kernel.points");
        }
        std::vector<std::pair<double, double>> points;
        for (const auto& p : pts) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
                throw config_error("each tabulated point must be a [t, h] number pair",
                                   "model.kernel.points");
            }
            points.emplace_back(p[0].get<double>(), p[1].get<double>());
        }
        return KernelSpec::tabulated(std::move(points));
    }
    throw config_error("unknown kernel kind '" + kind + "'", "model.kernel.kind");
}

} // namespace

ModelConfig parse_model_json(const nlohmann::json& j) {
    ModelConfig out;
    out.raw = j;
    const auto& model = require_key(j, "", "model");
    const std::string kind = require_string(model, "model", "kind");
    try {
        if (kind == "constant") {
            out.model = make_constant(require_number(model, "model", "rate"));
        } else if (kind == "piecewise_constant") {
            const auto& bp = require_key(model, "model", "breakpoints");
            const auto& lv = require_key(model, "model", "levels");
            if (!bp.is_array()) {
                throw config_error("key 'model.breakpoints' must be an array",
                                   "model.breakpoints");
            }
            if (!lv.is_array()) {
                throw config_error("key 'model.levels' must be an array", "model.levels");
            }
            out.model = make_piecewise_constant(bp.get<std::vector<double>>(),
                                                lv.get<std::vector<double>>(),
                                                require_number(model, "model", "tail_level"));
        } else if (kind == "classical_hawkes") {
            out.model = make_classical_hawkes(parse_phi(require_key(model, "model", "phi")),
                                              require_number(model, "model", "alpha"),
                                              parse_kernel(require_key(model, "model", "kernel")));
        } else {
            throw config_error("unknown model kind '" + kind + "'", "model.kind");
        }
    } catch (const std::invalid_argument& e) {
        throw config_error(std::string("invalid model parameters: ") + e.what(), "model");
    }

    if (j.contains("tolerances")) {
        const auto& tol = j.at("tolerances");
        if (!tol.is_object()) {
            throw config_error("key 'tolerances' must be an object", "tolerances");
        }
        if (tol.contains("quadrature_abs")) {
            out.numerics.quad_abs_tol = tol.at("quadrature_abs").get<double>();
        }
        if (tol.contains("root")) {
            out.numerics.root_tol = tol.at("root").get<double>();
        }
        if (tol.contains("horizon_multiple")) {
            out.numerics.horizon_multiple = tol.at("horizon_multiple").get<double>();
        }
        if (!(out.numerics.quad_abs_tol > 0.0) || !(out.numerics.root_tol > 0.0) ||
            !(out.numerics.horizon_multiple > 0.0)) {
            throw config_error("tolerances must be strictly positive", "tolerances");
        }
    }
    return out;
}

ModelConfig parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open model file: " + path, "");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports line/column in the message
        throw config_error(std::string("model file parse error: ") + e.what(), "");
    }
    return parse_model_json(j);
}

nlohmann::json model_to_json(const IntensityModel& model) {
    nlohmann::json j;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ConstantIntensity>) {
                j["kind"] = "constant";
                j["rate"] = m.rate;
            } else if constexpr (std::is_same_v<T, PiecewiseConstantIntensity>) {
                j["kind"] = "piecewise_constant";
                j["breakpoints"] = m.breakpoints;
                j["levels"] = m.levels;
                j["tail_level"] = m.tail_level;
            } else {
                j["kind"] = "classical_hawkes";
                j["alpha"] = m.base;
                nlohmann::json phi;
                phi["kind"] = m.phi.name();
                if (m.phi.kind == PhiSpec::Kind::affine) {
                    phi["slope"] = m.phi.slope;
                    phi["intercept"] = m.phi.intercept;
                } else if (m.phi.kind == PhiSpec::Kind::clipped_linear) {
                    phi["slope"] = m.phi.slope;
                    phi["floor"] = m.phi.floor;
                } else if (m.phi.kind == PhiSpec::Kind::sigmoid) {
                    phi["scale"] = m.phi.scale;
                    phi["midpoint"] = m.phi.midpoint;
                    phi["max"] = m.phi.max_value;
                }
                j["phi"] = std::move(phi);
                nlohmann::json kernel;
                kernel["kind"] = m.kernel.name();
                if (m.kernel.kind == KernelSpec::Kind::exponential) {
                    kernel["a"] = m.kernel.amplitude;
                    kernel["b"] = m.kernel.decay;
                } else {
                    nlohmann::json pts = nlohmann::json::array();
                    for (std::size_t i = 0; i < m.kernel.grid_t.size(); ++i) {
                        pts.push_back({m.kernel.grid_t[i], m.kernel.grid_h[i]});
                    }
                    kernel["points"] = std::move(pts);
                }
                j["kernel"] = std::move(kernel);
            }
        },
        model);
    return j;
}

nlohmann::json numerics_to_json(const NumericOptions& numerics) {
    nlohmann::json j;
    j["quadrature_abs"] = numerics.quad_abs_tol;
    j["root"] = numerics.root_tol;
    j["horizon_multiple"] = numerics.horizon_multiple;
    return j;
}

} // namespace ghawkes
