#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"
#include "sheetcurrent/norms.hpp"

namespace sheetcli {

inline constexpr const char* kVersion = "0.1.0";

struct ExperimentConfig {
    std::string subcommand;
    std::vector<unsigned> grid_sizes{10, 50, 100};
    std::uint64_t replicas = 10000;
    std::uint64_t seed = 12345;
    unsigned threads = 0;  ///< 0 = environment override, then hardware
    std::string out_dir = ".";
    std::vector<double> x_values{0.5, 1.0, 2.0};
    double alpha = -0.6;
    double r = 1.0;
    unsigned d = 1;
    unsigned m_max = 200;
    unsigned quad_order = 16;
    unsigned cell_order = 8;
    sheetcurrent::WeightConvention convention = sheetcurrent::WeightConvention::ThreePlusM;
};

struct ReportRow {
    double grid_size = 0.0;  ///< partition size / truncation level / cutoff, per experiment
    double exact = 0.0;
    double mc_value = 0.0;   ///< NaN when the experiment has no Monte Carlo leg
    double mc_stderr = 0.0;
    double target = 0.0;     ///< the limit the exact column approaches
    double gap = 0.0;        ///< |exact - target|
};

struct ConvergenceReport {
    std::string subcommand;
    std::uint64_t seed = 0;
    std::string version = kVersion;
    double wall_seconds = 0.0;  ///< console metadata only; kept out of the files
    std::vector<ReportRow> rows;
    std::vector<std::string> batch_lines;
    std::vector<std::string> extra_json;
    std::vector<std::string> notes;
    bool flagged = false;  ///< tolerance/quadrature failure -> nonzero exit
};

/// The embedded defaults, printable as a parseable config file.
std::string default_config_text();

/// One line per subcommand with the acceptance check it exercises.
std::string list_mapping_text();

/// All known subcommand names in listing order.
const std::vector<std::string>& subcommand_names();

/// Merge defaults <- config file; validates the schema and all preconditions.
ExperimentConfig load_config(const std::string& subcommand, const IniConfig& ini);

ConvergenceReport run_experiment(const ExperimentConfig& cfg);

/// Writes report.csv, report.json and (when batch lines exist) batch.csv.
void write_report(const ConvergenceReport& rep, const std::string& out_dir);

}  // namespace sheetcli
