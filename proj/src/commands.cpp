#include "gswsp/commands.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "gswsp/errors.hpp"
#include "gswsp/oracle.hpp"
#include "gswsp/reference.hpp"
#include "gswsp/wavefunction.hpp"

namespace gswsp {

namespace {

constexpr int kNormalizeGrid = 8001;

// printf-style formatting always runs in the "C" locale here; the library
// never calls setlocale, so '.' is the decimal separator.
template <class... Args>
std::string fmt(const char* pattern, Args... args) {
    char buf[128];
    const int len = std::snprintf(buf, sizeof buf, pattern, args...);
    return std::string(buf, static_cast<std::size_t>(len));
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const IntervalError*>(&e)) {
        return kExitConfig;
    }
    return kExitConvergence;
}

template <class Body>
int guarded(std::ostream& err, Body body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

void write_spectrum_csv(const Spectrum& s, std::optional<Parity> filter, const char* source,
                        std::ostream& out) {
    out << "n,E_MeV,E_over_m0c2,branch,residual_abs,nodes_verified";
    if (source) out << ",source";
    out << "\n";
    for (const auto& l : s.levels) {
        if (filter && l.branch != *filter) continue;
        out << l.n << "," << fmt("%.6f", l.energy) << ","
            << fmt("%.9f", l.energy / s.params.m0c2) << "," << to_string(l.branch) << ","
            << fmt("%.3e", l.residual_abs) << "," << (l.nodes_verified ? "true" : "false");
        if (source) out << "," << source;
        out << "\n";
    }
}

bool same(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

}  // namespace

SpectrumOptions spectrum_options(const RunConfig& cfg) {
    SpectrumOptions opts;
    opts.scan.step = cfg.scan_step;
    opts.scan.tol = cfg.tol;
    return opts;
}

VerifyReport run_verification(const RunConfig& cfg, int table_id, double tolerance) {
    const ReferenceTable& table = reference_table(table_id);
    const PotentialParams expected =
        table_id == 1 ? PotentialParams::repulsive() : PotentialParams::attractive();
    const PotentialParams& p = cfg.params;
    if (!(same(p.m0c2, expected.m0c2) && same(p.v0, expected.v0) &&
          same(p.alpha, expected.alpha) && same(p.l, expected.l) && same(p.w, expected.w))) {
        throw ConfigError("configuration does not match the scenario of table " +
                          std::to_string(table_id) + " (" +
                          (table_id == 1 ? "repulsive, W = +2 m0c2" : "attractive, W = -2 m0c2") +
                          ")");
    }
    if (!(tolerance >= 0.0)) throw ConfigError("tolerance must be non-negative");

    VerifyReport report;
    report.table_id = table_id;
    report.tolerance = tolerance;
    report.count_check = true;
    for (double eps : table.eps_values()) {
        PotentialParams column = p;
        column.eps_plus = eps;
        Spectrum s = build_spectrum(column, spectrum_options(cfg));
        const auto rows = table.rows_for(eps);
        for (const auto& row : rows) {
            VerifyEntry e{eps, row.n, row.energy, std::nullopt, false};
            for (const auto& l : s.levels) {
                if (l.n == row.n) e.computed_energy = l.energy;
            }
            e.pass = e.computed_energy && std::abs(*e.computed_energy - row.energy) <= tolerance;
            report.entries.push_back(e);
        }
        VerifyCount c{eps, static_cast<int>(rows.size()), static_cast<int>(s.levels.size()), false};
        c.pass = c.reference_count == c.computed_count;
        report.count_check = report.count_check && c.pass;
        report.counts.push_back(c);
        report.spectra.push_back(std::move(s));
    }
    report.pass = report.count_check;
    for (const auto& e : report.entries) report.pass = report.pass && e.pass;
    return report;
}

std::string verify_report_json(const VerifyReport& report) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["table_id"] = report.table_id;
    j["tolerance_mev"] = report.tolerance;
    j["comparisons"] = report.entries.size();
    ordered_json entries = ordered_json::array();
    for (const auto& e : report.entries) {
        ordered_json row;
        row["eps_plus"] = e.eps_plus;
        row["n"] = e.n;
        row["paper_E"] = e.reference_energy;
        if (e.computed_energy) {
            row["computed_E"] = *e.computed_energy;
            row["delta"] = *e.computed_energy - e.reference_energy;
        } else {
            row["computed_E"] = nullptr;
            row["delta"] = nullptr;
        }
        row["pass"] = e.pass;
        entries.push_back(row);
    }
    j["entries"] = entries;
    ordered_json counts = ordered_json::array();
    for (const auto& c : report.counts) {
        counts.push_back({{"eps_plus", c.eps_plus},
                          {"reference_count", c.reference_count},
                          {"computed_count", c.computed_count},
                          {"pass", c.pass}});
    }
    j["counts"] = counts;
    j["count_check"] = report.count_check;
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

int cmd_interval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        validate_config(cfg);
        const EnergyInterval iv = allowed_interval(cfg.params);
        out << fmt("%.6f %.6f", iv.lower, iv.upper) << "\n";
        return int{kExitOk};
    });
}

int cmd_spectrum(const RunConfig& cfg, std::optional<Parity> branch_filter, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&] {
        validate_config(cfg);
        const Spectrum s = build_spectrum(cfg.params, spectrum_options(cfg));
        write_spectrum_csv(s, branch_filter, nullptr, out);
        return int{kExitOk};
    });
}

int cmd_sweep(const RunConfig& cfg, std::span<const double> eps_values, std::ostream& out,
              std::ostream& err) {
    return guarded(err, [&] {
        validate_config(cfg);
        out << "eps_plus_MeV,n,E_MeV,E_over_m0c2,step_to_next_MeV\n";
        int status = kExitOk;
        for (double eps : eps_values) {
            RunConfig column = cfg;
            column.params.eps_plus = eps;
            try {
                validate_config(column);
                const Spectrum s = build_spectrum(column.params, spectrum_options(column));
                for (std::size_t i = 0; i < s.levels.size(); ++i) {
                    const auto& l = s.levels[i];
                    out << fmt("%.6f", eps) << "," << l.n << "," << fmt("%.6f", l.energy) << ","
                        << fmt("%.9f", l.energy / s.params.m0c2) << ",";
                    if (i + 1 < s.levels.size()) {
                        out << fmt("%.6f", s.levels[i + 1].energy - l.energy);
                    }
                    out << "\n";
                }
            } catch (const Error& e) {
                err << "error: eps_plus = " << fmt("%.6f", eps) << ": " << e.what() << "\n";
                if (status == kExitOk) status = exit_code_for(e);
            }
        }
        return status;
    });
}

int cmd_wavefunction(const RunConfig& cfg, int n, const WavefunctionRange& range,
                     std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        validate_config(cfg);
        const PotentialParams& p = cfg.params;
        if (!(range.dx > 0.0)) throw ConfigError("dx must be positive");
        const Spectrum s = build_spectrum(p, spectrum_options(cfg));
        const EnergyLevel* level = nullptr;
        for (const auto& l : s.levels) {
            if (l.n == n) level = &l;
        }
        if (!level) {
            err << "error: no level with n = " << n << " in the computed spectrum\n";
            return int{kExitMissingLevel};
        }
        WavefunctionSpec spec{level->energy, 1.0, level->branch};
        spec.d1 = normalize(p, spec, kNormalizeGrid);
        const Wavefunction psi(p, spec);

        const double extent = p.l + 20.0 / p.alpha;
        const double x_min = range.x_min.value_or(-extent);
        const double x_max = range.x_max.value_or(extent);
        if (!(x_max > x_min)) throw ConfigError("x-max must exceed x-min");
        const auto steps = static_cast<long>(std::floor((x_max - x_min) / range.dx + 1e-9));
        out << "x_fm,psi\n";
        for (long i = 0; i <= steps; ++i) {
            const double x = x_min + static_cast<double>(i) * range.dx;
            out << fmt("%.6f", x) << "," << fmt("%.12e", psi(x)) << "\n";
        }
        return int{kExitOk};
    });
}

int cmd_verify(const RunConfig& cfg, int table_id, double tolerance, std::ostream& out,
               std::ostream& err) {
    return guarded(err, [&] {
        validate_config(cfg);
        if (table_id != 1 && table_id != 2) {
            throw ConfigError("--table must be 1 or 2");
        }
        const VerifyReport report = run_verification(cfg, table_id, tolerance);
        out << verify_report_json(report);
        return int{report.pass ? kExitOk : kExitVerifyFailed};
    });
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        validate_config(cfg);
        OracleOptions opts;
        opts.step = cfg.scan_step;
        const Spectrum s = oracle_spectrum(cfg.params, cfg.oracle_grid(), opts);
        write_spectrum_csv(s, std::nullopt, "oracle", out);
        return int{kExitOk};
    });
}

}  // namespace gswsp
