#ifndef GHAWKES_SERIALIZATION_HPP
#define GHAWKES_SERIALIZATION_HPP

#include "ghawkes/configuration.hpp"

#include <json.hpp>
#include <string>
#include <string_view>

namespace ghawkes {

// Shortest decimal representation that round-trips the exact double.
std::string format_double(double v);

// A configuration is one CSV row of ascending times (empty row = empty
// configuration); round-trips at full double precision.
std::string config_to_csv_row(const Configuration& config);
Configuration config_from_csv_row(std::string_view row);

nlohmann::json config_to_json(const Configuration& config);
Configuration config_from_json(const nlohmann::json& j);

// Reads a configuration from a file holding one CSV row or a JSON array
// (chosen by extension: .json vs anything else).
Configuration load_configuration(const std::string& path);

// Writes content to path via a temporary file + rename.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace ghawkes

#endif // GHAWKES_SERIALIZATION_HPP
