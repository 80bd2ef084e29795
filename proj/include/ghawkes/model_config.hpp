#ifndef GHAWKES_MODEL_CONFIG_HPP
#define GHAWKES_MODEL_CONFIG_HPP

#include "ghawkes/intensity.hpp"
#include "ghawkes/quadrature.hpp"

#include <json.hpp>
#include <string>

namespace ghawkes {

// Parsed model-specification file.  Documented key set:
//   model.kind                constant | piecewise_constant | classical_hawkes
//   model.rate                (constant)
//   model.breakpoints, model.levels, model.tail_level   (piecewise_constant)
//   model.alpha               (classical_hawkes base level)
//   model.kernel.kind         exponential | tabulated
//   model.kernel.a, model.kernel.b        (exponential)
//   model.kernel.points       [[t, h], ...] (tabulated)
//   model.phi.kind            identity | affine | clipped_linear | sigmoid
//   model.phi.slope, .intercept, .floor, .scale, .midpoint, .max
//   tolerances.quadrature_abs, tolerances.root, tolerances.horizon_multiple
// Missing/ill-typed keys raise config_error carrying the dotted key path;
// JSON syntax errors carry the parser's line/column message.
struct ModelConfig {
    IntensityModel model = ConstantIntensity{1.0};
    NumericOptions numerics{};
    nlohmann::json raw;
};

ModelConfig parse_model_json(const nlohmann::json& j);
ModelConfig parse_model_file(const std::string& path);

// Resolved-config JSON for report embedding.
nlohmann::json model_to_json(const IntensityModel& model);
nlohmann::json numerics_to_json(const NumericOptions& numerics);

} // namespace ghawkes

#endif // GHAWKES_MODEL_CONFIG_HPP
