#include "ghawkes/serialization.hpp"

#include "ghawkes/errors.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>
#include <vector>

namespace ghawkes {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string config_to_csv_row(const Configuration& config) {
    std::string out;
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (i > 0) out += ',';
        out += format_double(config[i]);
    }
    return out;
}

Configuration config_from_csv_row(std::string_view row) {
    std::vector<double> times;
    std::size_t pos = 0;
    while (pos < row.size()) {
        std::size_t comma = row.find(',', pos);
        if (comma == std::string_view::npos) comma = row.size();
        std::string_view cell = row.substr(pos, comma - pos);
        // trim spaces
        while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
        while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r'))
            cell.remove_suffix(1);
        if (!cell.empty()) {
            double v = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
                throw std::invalid_argument("cannot parse jump time '" + std::string(cell) + "'");
            }
            times.push_back(v);
        }
        pos = comma + 1;
    }
    return Configuration(std::move(times));
}

nlohmann::json config_to_json(const Configuration& config) {
    return nlohmann::json(config.times());
}

Configuration config_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("a serialized configuration must be a JSON array of numbers");
    }
    return Configuration(j.get<std::vector<double>>());
}

Configuration load_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open configuration file: " + path);
    }
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json j;
        in >> j;
        return config_from_json(j);
    }
    std::string line;
    std::getline(in, line);
    return config_from_csv_row(line);
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open output file: " + tmp);
        }
        out << content;
        if (!out.good()) {
            throw std::runtime_error("failed writing output file: " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw std::runtime_error("cannot move " + tmp + " into place: " + ec.message());
    }
}

} // namespace ghawkes
