#include "gswsp/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "gswsp/errors.hpp"

namespace gswsp {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
bool parse_number(std::string_view s, T& out) {
    if (s.size() > 1 && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

std::vector<std::string> config_problems(const RunConfig& cfg) {
    std::vector<std::string> problems;
    for (const auto& v : validate_params(cfg.params)) problems.push_back(v.message());
    if (!(cfg.scan_step > 0.0)) problems.push_back("scan_step_mev: requires > 0");
    if (!(cfg.tol > 0.0)) problems.push_back("tol_mev: requires > 0");
    if (problems.empty()) {
        for (auto& s : validate_grid(cfg.oracle_grid(), cfg.params)) problems.push_back(s);
    }
    return problems;
}

[[noreturn]] void fail(const std::vector<std::string>& problems) {
    std::string msg = "invalid configuration:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ConfigError(msg);
}

}  // namespace

OracleGrid RunConfig::oracle_grid() const {
    OracleGrid g = OracleGrid::for_params(params);
    if (x_max) g.x_max = *x_max;
    g.n_points = grid_points;
    return g;
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::vector<std::string> problems;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (eq == std::string_view::npos) {
            problems.push_back(where + "expected key = value");
            continue;
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));

        auto real = [&](double& target) {
            if (!parse_number(value, target)) {
                problems.push_back(where + key + ": not a number '" + std::string(value) + "'");
            }
        };
        if (key == "m0c2_mev") real(cfg.params.m0c2);
        else if (key == "v0_mev") real(cfg.params.v0);
        else if (key == "w_mev") real(cfg.params.w);
        else if (key == "alpha_inv_fm") real(cfg.params.alpha);
        else if (key == "l_fm") real(cfg.params.l);
        else if (key == "eps_plus_mev") real(cfg.params.eps_plus);
        else if (key == "hbar_c_mev_fm") real(cfg.params.hbar_c);
        else if (key == "scan_step_mev") real(cfg.scan_step);
        else if (key == "tol_mev") real(cfg.tol);
        else if (key == "x_max_fm") {
            double v = 0.0;
            real(v);
            cfg.x_max = v;
        } else if (key == "v_cr_mev") {
            double v = 0.0;
            real(v);
            cfg.params.v_cr_guard = v;
        } else if (key == "grid_points") {
            if (!parse_number(value, cfg.grid_points)) {
                problems.push_back(where + key + ": not an integer '" + std::string(value) + "'");
            }
        } else if (key == "output") {
            cfg.output = std::string(value);
        } else {
            problems.push_back(where + "unknown key '" + key + "'");
        }
    }
    if (!problems.empty()) fail(problems);
    validate_config(cfg);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void validate_config(const RunConfig& cfg) {
    const auto problems = config_problems(cfg);
    if (!problems.empty()) fail(problems);
}

}  // namespace gswsp
