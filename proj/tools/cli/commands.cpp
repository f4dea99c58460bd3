// commands.cpp: `entrap` subcommands and artifact I/O

#include "cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "entrap/errors.hpp"

namespace entrap::cli {

namespace {

using nlohmann::json;

double number_field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ConfigError(std::string("missing key '") + key + "'");
    const auto& v = doc.at(key);
    if (!v.is_number()) throw ConfigError(std::string("key '") + key + "' must be a number");
    return v.get<double>();
}

std::optional<double> optional_number(const json& doc, const char* key) {
    if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
    return number_field(doc, key);
}

std::vector<double> grid_field(const json& doc, const char* key) {
    if (!doc.contains(key)) return {};
    const auto& v = doc.at(key);
    if (!v.is_array()) throw ConfigError(std::string("key '") + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number()) throw ConfigError(std::string("key '") + key + "' must be an array of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

std::string header_line() { return "# schema=" + std::to_string(kSchemaVersion) + "\n"; }

double effective_step(const RunConfig& cfg) {
    const double h = cfg.h ? *cfg.h : default_step(cfg.spectrum);
    if (!(cfg.t_max >= 10.0 * h)) throw ConfigError("t_max must be at least 10 h");
    return h;
}

void write_output(const std::optional<std::filesystem::path>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream os(*path, std::ios::binary);
    if (!os) throw ConfigError("cannot open output path " + path->string());
    os << text;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");

    RunConfig cfg;
    if (!doc.contains("spectrum") || !doc.at("spectrum").is_string()) {
        throw ConfigError("missing string key 'spectrum' (super_ohmic | lorentzian)");
    }
    const auto kind = doc.at("spectrum").get<std::string>();
    const double omega0 = optional_number(doc, "omega0").value_or(1.0);
    try {
        if (kind == "super_ohmic") {
            cfg.spectrum = SpectralDensity::super_ohmic(number_field(doc, "eta"), number_field(doc, "omega_c"), omega0);
        } else if (kind == "lorentzian") {
            cfg.spectrum = SpectralDensity::lorentzian(number_field(doc, "gamma"), number_field(doc, "lambda"), omega0);
        } else {
            throw ConfigError("unknown spectrum '" + kind + "'");
        }
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }

    cfg.alpha = optional_number(doc, "alpha").value_or(cfg.alpha);
    if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
    cfg.t_max = optional_number(doc, "t_max").value_or(cfg.t_max);
    if (!(cfg.t_max > 0.0) || !std::isfinite(cfg.t_max)) throw ConfigError("t_max must be positive");
    cfg.h = optional_number(doc, "h");
    if (cfg.h && !(*cfg.h > 0.0)) throw ConfigError("h must be positive");
    cfg.tol = optional_number(doc, "tol").value_or(cfg.tol);
    if (!(cfg.tol > 0.0)) throw ConfigError("tol must be positive");
    if (doc.contains("markovian")) {
        if (!doc.at("markovian").is_boolean()) throw ConfigError("key 'markovian' must be a boolean");
        cfg.markovian = doc.at("markovian").get<bool>();
    }
    if (doc.contains("output_path")) {
        if (!doc.at("output_path").is_string()) throw ConfigError("key 'output_path' must be a string");
        cfg.output_path = doc.at("output_path").get<std::string>();
    }
    cfg.gamma_grid = grid_field(doc, "gamma_grid");
    cfg.lambda_grid = grid_field(doc, "lambda_grid");
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot read config " + path.string());
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str());
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0"; // folds -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string bound_state_json(const BoundStateResult& r) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["exists"] = r.exists;
    doc["energy"] = r.energy ? json(*r.energy) : json(nullptr);
    doc["residue"] = r.residue ? json(*r.residue) : json(nullptr);
    doc["y_at_zero"] = r.y_at_zero ? json(*r.y_at_zero) : json("divergent");
    doc["effective_trapping"] = r.effectively_trapping();
    doc["bracket"] = r.bracket;
    return doc.dump(2) + "\n";
}

std::string trajectory_csv(const AmplitudeTrajectory& traj, const InitialState& st) {
    std::string out = header_line() + "t,re_c0,im_c0,p_exc,gamma_t,omega_t,concurrence\n";
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double c = concurrence_from_amplitude(traj.p_exc[k], st);
        out += format_number(traj.times[k]) + ',' + format_number(traj.c0[k].real()) + ',' +
               format_number(traj.c0[k].imag()) + ',' + format_number(traj.p_exc[k]) + ',' +
               format_number(traj.gamma_t[k]) + ',' + format_number(traj.omega_t[k]) + ',' + format_number(c) + '\n';
    }
    return out;
}

std::string markovian_trajectory_csv(const MarkovianParams& mp, const InitialState& st, double t_max, double h) {
    std::string out = header_line() + "t,re_c0,im_c0,p_exc,gamma_t,omega_t,concurrence\n";
    const auto n = static_cast<std::size_t>(std::llround(t_max / h));
    for (std::size_t k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) * h;
        const auto c0 = markovian_amplitude(mp, t);
        out += format_number(t) + ',' + format_number(c0.real()) + ',' + format_number(c0.imag()) + ',' +
               format_number(std::exp(-2.0 * mp.gamma0 * t)) + ',' + format_number(mp.gamma0) + ',' +
               format_number(mp.omega0_shifted) + ',' + format_number(markovian_concurrence(st, mp.gamma0, t)) + '\n';
    }
    return out;
}

std::string phase_csv(const PhaseDiagramTable& table) {
    std::string out = header_line() + "gamma,lambda,residual_c,converged,oscillatory\n";
    for (std::size_t gi = 0; gi < table.gamma_axis.size(); ++gi) {
        for (std::size_t li = 0; li < table.lambda_axis.size(); ++li) {
            const auto& cell = table.at(gi, li);
            out += format_number(table.gamma_axis[gi]) + ',' + format_number(table.lambda_axis[li]) + ',' +
                   format_number(cell.residual_c) + ',' + (cell.converged ? '1' : '0') + ',' +
                   (cell.oscillatory ? '1' : '0') + '\n';
        }
    }
    return out;
}

CsvTable read_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "# schema=" + std::to_string(kSchemaVersion)) {
        throw ConfigError("csv: missing '# schema=1' line");
    }
    CsvTable t;
    if (!std::getline(is, line) || line.empty()) throw ConfigError("csv: missing header");
    {
        std::istringstream hs(line);
        std::string field;
        while (std::getline(hs, field, ',')) t.header.push_back(field);
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<double> row;
        while (std::getline(ls, field, ',')) {
            char* end = nullptr;
            const double v = std::strtod(field.c_str(), &end);
            if (end == field.c_str() || *end != '\0') throw ConfigError("csv: bad number '" + field + "'");
            row.push_back(v);
        }
        if (row.size() != t.header.size()) throw ConfigError("csv: row width differs from header");
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string cmd_bound_state(const RunConfig& cfg) {
    return bound_state_json(find_bound_state(cfg.spectrum, cfg.tol));
}

std::string cmd_dynamics(const RunConfig& cfg) {
    const double h = effective_step(cfg);
    const auto st = InitialState::from_alpha(cfg.alpha);
    if (cfg.markovian) {
        const auto mp = markovian_params(cfg.spectrum);
        if (!(mp.gamma0 > 0.0)) throw ConfigError("markovian mode needs J(omega0) > 0");
        return markovian_trajectory_csv(mp, st, cfg.t_max, h);
    }
    try {
        return trajectory_csv(solve_amplitude(cfg.spectrum, cfg.t_max, h), st);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

std::string cmd_phase(const RunConfig& cfg, unsigned threads) {
    const auto gammas = cfg.gamma_grid.empty() ? default_gamma_grid() : cfg.gamma_grid;
    const auto lambdas = cfg.lambda_grid.empty() ? default_lambda_grid() : cfg.lambda_grid;
    for (double v : gammas)
        if (!(v > 0.0)) throw ConfigError("gamma_grid values must be positive");
    for (double v : lambdas)
        if (!(v > 0.0)) throw ConfigError("lambda_grid values must be positive");
    if (cfg.h && !(cfg.t_max >= 10.0 * *cfg.h)) throw ConfigError("t_max must be at least 10 h");
    try {
        return phase_csv(phase_diagram(gammas, lambdas, InitialState::from_alpha(cfg.alpha), cfg.t_max,
                                       cfg.h.value_or(0.0), threads));
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

unsigned threads_from_env() {
    const char* v = std::getenv("ENGINE_THREADS");
    if (!v || !*v) return 0;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 1) throw ConfigError("ENGINE_THREADS must be a positive integer");
    return static_cast<unsigned>(n);
}

int run(int argc, char** argv) {
    CLI::App app{"entrap: bound states, non-Markovian amplitude dynamics and residual entanglement"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    bool markovian = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "Run configuration (flat JSON)")->required();
        sub->add_option("--out", out_path, "Output file (default: stdout or config output_path)");
    };
    auto* bound = app.add_subcommand("bound-state", "Bound-state energy and residue as JSON");
    add_common(bound);
    auto* dyn = app.add_subcommand("dynamics", "Amplitude, rates and concurrence trajectory as CSV");
    add_common(dyn);
    dyn->add_flag("--markovian", markovian, "Emit the Markovian closed forms instead of the exact solution");
    auto* phase = app.add_subcommand("phase", "Lorentzian (gamma, lambda) steady-state phase table as CSV");
    add_common(phase);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        RunConfig cfg = load_config(config_path);
        if (!out_path.empty()) cfg.output_path = out_path;
        if (markovian) cfg.markovian = true;

        std::string text;
        if (bound->parsed()) {
            text = cmd_bound_state(cfg);
        } else if (dyn->parsed()) {
            text = cmd_dynamics(cfg);
        } else {
            text = cmd_phase(cfg, threads_from_env());
        }
        write_output(cfg.output_path, text);
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "entrap: config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "entrap: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

} // namespace entrap::cli
