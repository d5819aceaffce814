// gswsp: Klein-Gordon bound states in a generalized symmetric Woods-Saxon well.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gswsp/commands.hpp"
#include "gswsp/config.hpp"
#include "gswsp/errors.hpp"

namespace {

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) throw gswsp::ConfigError("bad --eps-plus entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw gswsp::ConfigError("--eps-plus list is empty");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Klein-Gordon bound-state spectra in a generalized symmetric Woods-Saxon well"};

    std::string command;
    std::string config_path;
    std::string branch = "both";
    std::string eps_list;
    std::optional<int> level;
    std::optional<double> x_min, x_max;
    double dx = 0.01;
    int table = 1;
    double tolerance = gswsp::kDefaultVerifyTolerance;
    std::string out_path;

    app.add_option("command", command, "interval | spectrum | sweep | wavefunction | verify | oracle")
        ->required()
        ->check(CLI::IsMember({"interval", "spectrum", "sweep", "wavefunction", "verify", "oracle"}));
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--branch", branch, "spectrum branch filter")
        ->check(CLI::IsMember({"even", "odd", "both"}));
    app.add_option("--eps-plus", eps_list, "comma-separated eps+ values in MeV");
    app.add_option("--n", level, "node number (wavefunction)");
    app.add_option("--x-min", x_min, "wavefunction range start, fm");
    app.add_option("--x-max", x_max, "wavefunction range end, fm");
    app.add_option("--dx", dx, "wavefunction sampling step, fm");
    app.add_option("--table", table, "reference table for verify")->check(CLI::IsMember({1, 2}));
    app.add_option("--tolerance", tolerance, "verify tolerance, MeV");
    app.add_option("--out", out_path, "output file (default: config 'output' or stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : gswsp::kExitConfig;
    }

    gswsp::RunConfig cfg;
    std::vector<double> eps_values;
    try {
        if (!config_path.empty()) cfg = gswsp::load_config(config_path);
        if (!eps_list.empty()) {
            eps_values = parse_list(eps_list);
            cfg.params.eps_plus = eps_values.front();
        } else {
            eps_values = {cfg.params.eps_plus};
        }
        if (command != "sweep") gswsp::validate_config(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gswsp::kExitConfig;
    }

    if (out_path.empty()) out_path = cfg.output;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot open output '" << out_path << "'\n";
            return gswsp::kExitConfig;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    std::ostream& err = std::cerr;

    if (command == "interval") return gswsp::cmd_interval(cfg, out, err);
    if (command == "spectrum") {
        std::optional<gswsp::Parity> filter;
        if (branch == "even") filter = gswsp::Parity::even;
        if (branch == "odd") filter = gswsp::Parity::odd;
        return gswsp::cmd_spectrum(cfg, filter, out, err);
    }
    if (command == "sweep") return gswsp::cmd_sweep(cfg, eps_values, out, err);
    if (command == "wavefunction") {
        if (!level) {
            std::cerr << "error: wavefunction requires --n\n";
            return gswsp::kExitConfig;
        }
        return gswsp::cmd_wavefunction(cfg, *level, {x_min, x_max, dx}, out, err);
    }
    if (command == "verify") return gswsp::cmd_verify(cfg, table, tolerance, out, err);
    return gswsp::cmd_oracle(cfg, out, err);
}
