// sweep.cpp: steady-state extraction and the parallel phase-diagram sweep

#include "entrap/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "entrap/dynamics.hpp"
#include "entrap/errors.hpp"

namespace entrap {

WindowStats window_stats(const std::vector<double>& t, const std::vector<double>& p) {
    WindowStats w;
    const std::size_t n = p.size();
    if (n == 0) return w;
    double tm = 0.0, pm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        tm += t[i];
        pm += p[i];
    }
    tm /= static_cast<double>(n);
    pm /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (t[i] - tm) * (p[i] - pm);
        sxx += (t[i] - tm) * (t[i] - tm);
    }
    w.mean = pm;
    w.slope = sxx > 0.0 ? sxy / sxx : 0.0;

    const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    if (*mx <= 0.0) return w;
    w.swing = (*mx - *mn) / *mx;
    double run_min = p[0], run_max = p[0];
    double rise = 0.0, fall = 0.0;
    for (double v : p) {
        rise = std::max(rise, v - run_min);
        fall = std::max(fall, run_max - v);
        run_min = std::min(run_min, v);
        run_max = std::max(run_max, v);
    }
    w.max_rise = rise / *mx;
    w.max_fall = fall / *mx;
    return w;
}

bool is_oscillatory(const WindowStats& w) {
    // A monotone decay also has a large swing; oscillation needs the
    // population to both fall and recover by a sizeable fraction.
    return w.swing > kOscillationSwing && w.max_rise > kOscillationSwing && w.max_fall > kOscillationSwing;
}

bool is_converged(const WindowStats& w, double t_max) {
    if (is_oscillatory(w)) return false;
    return std::abs(w.slope) * t_max < kSlopeTolerance * w.mean || w.mean < kDecayedPopulation;
}

SteadyStateReport steady_state(const SpectralDensity& spec, const InitialState& st, double t_max, double h) {
    if (h <= 0.0) h = default_step(spec);
    const auto traj = solve_amplitude(spec, t_max, h);

    SteadyStateReport rep;
    rep.h = h;
    const double t_end = traj.times.back();
    rep.window_end = t_end;
    rep.window_begin = (1.0 - kWindowFraction) * t_end;

    std::vector<double> wt, wp;
    double c_sum = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
        if (traj.times[k] < rep.window_begin - 1e-12 * t_end) continue;
        wt.push_back(traj.times[k]);
        wp.push_back(traj.p_exc[k]);
        c_sum += concurrence_from_amplitude(traj.p_exc[k], st);
    }
    rep.residual_c = c_sum / static_cast<double>(wp.size());
    const WindowStats ws = window_stats(wt, wp);
    rep.mean_p = ws.mean;
    rep.oscillatory = is_oscillatory(ws);
    rep.converged = is_converged(ws, t_end);
    return rep;
}

PhaseDiagramTable phase_diagram(const std::vector<double>& gamma_grid,
                                const std::vector<double>& lambda_grid,
                                const InitialState& st,
                                double t_max,
                                double h,
                                unsigned threads) {
    auto check_axis = [](const std::vector<double>& axis, const char* name) {
        if (axis.empty()) throw DomainError(std::string("phase_diagram: empty ") + name + " grid");
        for (std::size_t i = 1; i < axis.size(); ++i) {
            if (!(axis[i] > axis[i - 1])) {
                throw DomainError(std::string("phase_diagram: ") + name + " grid must be strictly increasing");
            }
        }
    };
    check_axis(gamma_grid, "gamma");
    check_axis(lambda_grid, "lambda");

    PhaseDiagramTable table;
    table.gamma_axis = gamma_grid;
    table.lambda_axis = lambda_grid;
    const std::size_t n_cells = gamma_grid.size() * lambda_grid.size();
    table.cells.resize(n_cells);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n_cells; i = next++) {
            const double g = gamma_grid[i / lambda_grid.size()];
            const double l = lambda_grid[i % lambda_grid.size()];
            SteadyStateReport& cell = table.cells[i];
            try {
                cell = steady_state(SpectralDensity::lorentzian(g, l), st, t_max, h);
            } catch (const std::exception& e) {
                cell = SteadyStateReport{};
                cell.residual_c = std::numeric_limits<double>::quiet_NaN();
                cell.error = e.what();
            }
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_cells));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return table;
}

std::vector<double> default_gamma_grid() {
    std::vector<double> g;
    for (int i = 0; i < 8; ++i) g.push_back(0.2 + 0.4 * i);
    return g;
}

std::vector<double> default_lambda_grid() {
    std::vector<double> l{0.1};
    for (int i = 1; i <= 8; ++i) l.push_back(2.0 * i);
    return l;
}

} // namespace entrap
