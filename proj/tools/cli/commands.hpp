// commands.hpp: configuration, subcommand drivers and the text artifact
// schemas of the `entrap` command-line tool

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "entrap/bound_state.hpp"
#include "entrap/dynamics.hpp"
#include "entrap/entanglement.hpp"
#include "entrap/spectra.hpp"
#include "entrap/sweep.hpp"

namespace entrap::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitNumerical = 3,
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    SpectralDensity spectrum = SpectralDensity::super_ohmic(0.2, 3.0);
    double alpha{0.7};
    double t_max{200.0};
    std::optional<double> h;
    bool markovian{false};
    double tol{1e-12};
    std::optional<std::filesystem::path> output_path;
    std::vector<double> gamma_grid;
    std::vector<double> lambda_grid;
};

// Parses the flat JSON key/value document.  Throws ConfigError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

// Subcommand bodies: return the artifact text.  Config problems surface as
// ConfigError, solver failures as entrap::NumericalError.
std::string cmd_bound_state(const RunConfig& cfg);
std::string cmd_dynamics(const RunConfig& cfg);
std::string cmd_phase(const RunConfig& cfg, unsigned threads);

// Writers for the documented schemas.
std::string format_number(double v);
std::string bound_state_json(const BoundStateResult& r);
std::string trajectory_csv(const AmplitudeTrajectory& traj, const InitialState& st);
std::string markovian_trajectory_csv(const MarkovianParams& mp, const InitialState& st, double t_max, double h);
std::string phase_csv(const PhaseDiagramTable& table);

// Readers used to check that emitted artifacts re-parse.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};
CsvTable read_csv(const std::string& text); // requires the `# schema=1` line

// ENGINE_THREADS, or 0 (= hardware concurrency) when unset.
unsigned threads_from_env();

// Full entry point used by main(): returns the process exit code.
int run(int argc, char** argv);

} // namespace entrap::cli
