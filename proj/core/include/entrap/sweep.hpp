// sweep.hpp: steady-state residual entanglement and the Lorentzian
// (γ, λ) phase diagram

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "entrap/entanglement.hpp"
#include "entrap/spectra.hpp"

namespace entrap {

struct SteadyStateReport {
    double residual_c{0.0};   // mean concurrence over the final window
    bool converged{false};
    bool oscillatory{false};
    double window_begin{0.0}; // 0.8 t_max
    double window_end{0.0};   // t_max
    double mean_p{0.0};       // mean |c0|² over the window
    double h{0.0};
    std::string error;        // non-empty when the cell failed

    bool ok() const { return error.empty(); }
};

struct PhaseDiagramTable {
    std::vector<double> gamma_axis;
    std::vector<double> lambda_axis;
    std::vector<SteadyStateReport> cells; // row-major: γ outer, λ inner

    const SteadyStateReport& at(std::size_t gi, std::size_t li) const {
        return cells[gi * lambda_axis.size() + li];
    }
};

inline constexpr double kWindowFraction = 0.2;
inline constexpr double kSlopeTolerance = 0.01;
inline constexpr double kDecayedPopulation = 1e-4;
inline constexpr double kOscillationSwing = 0.2;

// Classifies the final-window populations.  Exposed for testing.
struct WindowStats {
    double mean{0.0};
    double slope{0.0};      // least-squares dp/dt
    double swing{0.0};      // (max − min)/max
    double max_rise{0.0};   // largest increase after an earlier minimum, / max
    double max_fall{0.0};   // largest decrease after an earlier maximum, / max
};
WindowStats window_stats(const std::vector<double>& t, const std::vector<double>& p);
bool is_oscillatory(const WindowStats& w);
bool is_converged(const WindowStats& w, double t_max);

// h <= 0 selects default_step(spec).
SteadyStateReport steady_state(const SpectralDensity& spec, const InitialState& st, double t_max, double h = 0.0);

// threads == 0 uses std::thread::hardware_concurrency().
PhaseDiagramTable phase_diagram(const std::vector<double>& gamma_grid,
                                const std::vector<double>& lambda_grid,
                                const InitialState& st,
                                double t_max,
                                double h = 0.0,
                                unsigned threads = 0);

std::vector<double> default_gamma_grid();  // 0.2, 0.6, …, 3.0
std::vector<double> default_lambda_grid(); // 0.1, 2, 4, …, 16

} // namespace entrap
