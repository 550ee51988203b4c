#include "aquifer/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace aquifer {

std::vector<Regime> RunConfig::regimes_or_all() const {
    if (!regimes.empty()) return regimes;
    return {Regime::Benchmark, Regime::LinearFull, Regime::Concave};
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, int line) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("not a number: '" + v + "'", line);
    return x;
}

std::vector<double> parse_list(const std::string& v, int line) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(item, line));
    }
    return out;
}

std::vector<Regime> parse_regimes(const std::string& v, int line) {
    std::vector<Regime> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        if (item == "all") return {};
        Regime r;
        if (!parse_regime(item, r))
            throw ConfigError("unknown regime: '" + item + "'", line);
        out.push_back(r);
    }
    return out;
}

}  // namespace

RunConfig parse_config(std::istream& in) {
    RunConfig cfg;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        if (s.front() == '[' && s.back() == ']') continue;  // section header

        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value", line);
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("expected key = value", line);

        if (key == "b") cfg.params.b = parse_double(value, line);
        else if (key == "d") cfg.params.d = parse_double(value, line);
        else if (key == "rho") cfg.params.rho = parse_double(value, line);
        else if (key == "eta") cfg.params.eta = parse_double(value, line);
        else if (key == "beta") cfg.params.beta = parse_double(value, line);
        else if (key == "hbar") cfg.params.hbar = parse_double(value, line);
        else if (key == "regime" || key == "regimes")
            cfg.regimes = parse_regimes(value, line);
        else if (key == "t_max") cfg.path.t_max = parse_double(value, line);
        else if (key == "dt") cfg.path.dt = parse_double(value, line);
        else if (key == "h0") cfg.path.h0 = parse_double(value, line);
        else if (key == "psi0") cfg.path.psi0 = parse_double(value, line);
        else if (key == "format") {
            if (value == "csv") cfg.format = OutputFormat::Csv;
            else if (value == "json") cfg.format = OutputFormat::Json;
            else throw ConfigError("format must be csv or json", line);
        } else if (key == "output_dir") cfg.output_dir = value;
        else if (key == "seed") cfg.seed = std::strtoull(value.c_str(), nullptr, 10);
        else if (key == "axis") {
            if (!parse_axis(value, cfg.axis))
                throw ConfigError("unknown axis: '" + value + "'", line);
        } else if (key == "values") cfg.values = parse_list(value, line);
        else throw ConfigError("unknown key: '" + key + "'", line);
    }
    return cfg;
}

RunConfig load_config(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open config file: " + file, 0);
    return parse_config(in);
}

}  // namespace aquifer
