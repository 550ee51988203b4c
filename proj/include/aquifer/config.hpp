#ifndef AQUIFER_CONFIG_HPP
#define AQUIFER_CONFIG_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aquifer/model.hpp"
#include "aquifer/scenario.hpp"
#include "aquifer/trajectory.hpp"

// key = value run configuration shared by all CLI commands.  Flags override
// file keys; unknown keys are rejected with the offending line number.

namespace aquifer {

struct ConfigError : std::runtime_error {
    int line;
    ConfigError(const std::string& what, int at)
        : std::runtime_error(what + " (line " + std::to_string(at) + ")"),
          line(at) {}
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
    ModelParams params{0.16, 2.0, 0.05, 0.3, 0.1, 0.5};
    std::vector<Regime> regimes;  // empty = all
    PathSpec path;
    OutputFormat format = OutputFormat::Csv;
    std::string output_dir;
    unsigned long long seed = 1;
    Axis axis = Axis::Beta;
    std::vector<double> values;

    std::vector<Regime> regimes_or_all() const;
};

/// Parses the grammar documented in the README: blank lines and #-comments
/// ignored, optional [section] headers tolerated, everything else key = value.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& file);

}  // namespace aquifer

#endif
