#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace spectra {

struct GridSpec {
    double min = 0.0;
    double max = 1.0;
    int points = 2;
    bool log_scale = false;
};

// "min:max:points" with optional log flag applied separately
GridSpec parse_grid(const std::string& s);
std::vector<double> make_grid(const GridSpec& g);

// Resolved configuration of one CLI invocation; echoed into every output
// file so a run can be reproduced from its artifact alone.
struct RunConfig {
    std::string subcommand;
    std::string ensemble = "ft";  // ft | wl
    int beta = 1;
    int n_dim = 2;
    int nu = 0;
    double trace = 1.0;
    GridSpec grid;
    bool grid_set = false;
    int n_samples = 100000;
    std::uint64_t seed = 1;
    double tol = -1.0;  // negative: use the per-command default
    int workers = 0;    // 0: hardware concurrency
    int ell = 1;
    bool micro_moment = false;
    std::string picture = "y";
    std::string backend = "general";  // general | explicit
    std::string n_list = "8,16,32";
    std::string output;               // empty: stdout
    std::string format = "csv";      // csv | json

    std::vector<std::pair<std::string, std::string>> echo() const;
};

struct OutputTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> row_tags;  // per-row provenance (may be empty)
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::vector<std::pair<std::string, double>> suite_results;
};

std::string format_double(double v);  // 15 significant digits
void write_csv(std::ostream& os, const OutputTable& t);
void write_json(std::ostream& os, const OutputTable& t);

// writes to config.output or stdout in config.format; returns 0 or an
// exit code on I/O failure
int emit_table(const RunConfig& cfg, const OutputTable& t);

} // namespace spectra
