#include "spectra/runconfig.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

namespace spectra {

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    char extra;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &g.min, &g.max, &g.points, &extra) != 3)
        throw std::invalid_argument("grid must be min:max:points, got '" + s + "'");
    if (!(g.min < g.max)) throw std::invalid_argument("grid: min must be < max");
    if (g.points < 2) throw std::invalid_argument("grid: points must be >= 2");
    return g;
}

std::vector<double> make_grid(const GridSpec& g) {
    std::vector<double> xs(g.points);
    if (g.log_scale) {
        if (!(g.min > 0.0)) throw std::invalid_argument("grid: log scale needs min > 0");
        const double a = std::log(g.min), b = std::log(g.max);
        for (int i = 0; i < g.points; ++i)
            xs[i] = std::exp(a + (b - a) * i / (g.points - 1));
    } else {
        for (int i = 0; i < g.points; ++i)
            xs[i] = g.min + (g.max - g.min) * i / (g.points - 1);
    }
    xs.back() = g.max;
    return xs;
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
    std::vector<std::pair<std::string, std::string>> e;
    e.emplace_back("subcommand", subcommand);
    e.emplace_back("ensemble", ensemble);
    e.emplace_back("beta", std::to_string(beta));
    e.emplace_back("N", std::to_string(n_dim));
    e.emplace_back("nu", std::to_string(nu));
    e.emplace_back("trace", format_double(trace));
    if (grid_set) {
        e.emplace_back("grid", format_double(grid.min) + ":" + format_double(grid.max) + ":"
                                   + std::to_string(grid.points));
        e.emplace_back("grid_scale", grid.log_scale ? "log" : "linear");
    }
    e.emplace_back("n_samples", std::to_string(n_samples));
    e.emplace_back("seed", std::to_string(seed));
    e.emplace_back("tol", tol < 0 ? std::string("default") : format_double(tol));
    e.emplace_back("workers", std::to_string(workers));
    e.emplace_back("ell", std::to_string(ell));
    e.emplace_back("picture", picture);
    e.emplace_back("backend", backend);
    e.emplace_back("n_list", n_list);
    e.emplace_back("format", format);
    return e;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void write_csv(std::ostream& os, const OutputTable& t) {
    for (const auto& [k, v] : t.config_echo) os << "# " << k << " = " << v << "\n";
    for (const auto& [k, v] : t.suite_results) os << "# " << k << " = " << format_double(v) << "\n";
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        os << t.columns[c] << (c + 1 < t.columns.size() ? "," : "\n");
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            os << format_double(row[c]) << (c + 1 < row.size() ? "," : "\n");
}

void write_json(std::ostream& os, const OutputTable& t) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json cfg;
    for (const auto& [k, v] : t.config_echo) cfg[k] = v;
    j["config"] = cfg;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        nlohmann::ordered_json row;
        for (std::size_t c = 0; c < t.columns.size(); ++c) row[t.columns[c]] = t.rows[r][c];
        if (r < t.row_tags.size()) row["provenance"] = t.row_tags[r];
        rows.push_back(row);
    }
    j["rows"] = rows;
    nlohmann::ordered_json suite;
    for (const auto& [k, v] : t.suite_results) suite[k] = v;
    j["suite_results"] = suite;
    j["version"] = "0.1.0";
    os << j.dump(2) << "\n";
}

int emit_table(const RunConfig& cfg, const OutputTable& t) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            std::cerr << "cannot open output file: " << cfg.output << "\n";
            return 2;
        }
        os = &file;
    }
    if (cfg.format == "json")
        write_json(*os, t);
    else
        write_csv(*os, t);
    return 0;
}

} // namespace spectra
