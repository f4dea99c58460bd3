// dynamics.cpp: Volterra integrator for the amplitude equation

#include "entrap/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <gsl/gsl_integration.h>

#include "entrap/errors.hpp"

namespace entrap {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kStepNodes = 4;
constexpr std::size_t kFirstStepNodes = 12;
}

double default_step(const SpectralDensity& spec) {
    double h = 0.02;
    if (const auto* lo = std::get_if<Lorentzian>(&spec.shape())) h = std::min(h, 0.1 / lo->lambda);
    if (const auto* so = std::get_if<SuperOhmic>(&spec.shape())) h = std::min(h, 0.1 / so->omega_c);
    h = std::min(h, 0.1 / std::sqrt(spectral_weight(spec)));
    return h;
}

namespace {

struct Table {
    gsl_integration_glfixed_table* t;
    explicit Table(std::size_t n) : t(gsl_integration_glfixed_table_alloc(n)) {}
    ~Table() { gsl_integration_glfixed_table_free(t); }
    Table(const Table&) = delete;
    Table& operator=(const Table&) = delete;
};

} // namespace

KernelMoments kernel_moments(const KernelFunction& f, double h, std::size_t n_steps) {
    // f′ may be log-singular at s = 0 (J with an algebraic tail), so the
    // first step gets a denser rule.
    static const Table coarse(kStepNodes);
    static const Table fine(kFirstStepNodes);

    KernelMoments mom;
    mom.zeroth.resize(n_steps);
    mom.first.resize(n_steps);
    for (std::size_t m = 0; m < n_steps; ++m) {
        const double a = static_cast<double>(m) * h;
        const auto* t = (m == 0 ? fine : coarse).t;
        std::complex<double> z{}, w{};
        for (std::size_t i = 0; i < t->n; ++i) {
            double x = 0.0, wt = 0.0;
            gsl_integration_glfixed_point(a, a + h, i, &x, &wt, t);
            const auto fx = f(x);
            z += wt * fx;
            w += wt * fx * ((x - a) / h);
        }
        mom.zeroth[m] = z;
        mom.first[m] = w;
    }
    return mom;
}

AmplitudeTrajectory solve_amplitude(const SpectralDensity& spec, double t_max, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("solve_amplitude: h must be positive");
    if (!(t_max >= 10.0 * h) || !std::isfinite(t_max)) throw DomainError("solve_amplitude: need t_max >= 10 h");
    if (t_max / h > static_cast<double>(kMaxSteps)) throw DomainError("solve_amplitude: t_max / h exceeds kMaxSteps");
    const auto n = static_cast<std::size_t>(std::llround(t_max / h));
    return solve_amplitude([&](double s) { return memory_kernel(spec, s); }, spec.omega0(), h, n);
}

AmplitudeTrajectory solve_amplitude(const KernelFunction& kernel, double omega0, double h, std::size_t n_steps) {
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("solve_amplitude: h must be positive");
    if (n_steps < 1) throw DomainError("solve_amplitude: need at least one step");
    if (n_steps > kMaxSteps) throw DomainError("solve_amplitude: step count exceeds the O(n^2) budget");
    const std::size_t len = n_steps + 1;
    const KernelMoments mom = kernel_moments(kernel, h, n_steps);

    // Lag weights against the hat functions of the grid:
    //   w[0] = A₀ − B₀,  w[j] = B_{j−1} + A_j − B_j (interior),  end[j] = B_{j−1} (weight of c₀).
    using C = std::complex<double>;
    std::vector<double> wr(len, 0.0), wi(len, 0.0);
    for (std::size_t j = 1; j < n_steps; ++j) {
        const C w = mom.first[j - 1] + mom.zeroth[j] - mom.first[j];
        wr[j] = w.real();
        wi[j] = w.imag();
    }
    const C w0 = mom.zeroth[0] - mom.first[0];

    const C iw(0.0, omega0);
    const C denom = 1.0 + 0.5 * h * (iw + w0);

    // Split storage keeps the O(N²) history sum in plain double arithmetic.
    std::vector<double> cr(len), ci(len);
    std::vector<C> c(len), dc(len);
    c[0] = 1.0;
    dc[0] = -iw;
    cr[0] = 1.0;
    ci[0] = 0.0;

    for (std::size_t m = 0; m < n_steps; ++m) {
        const std::size_t n1 = m + 1;
        // S = end[n+1] c₀ + Σ_{k=1}^{n} w[n+1−k] c_k
        const C tail = mom.first[m];
        double sr = tail.real() * cr[0] - tail.imag() * ci[0];
        double si = tail.real() * ci[0] + tail.imag() * cr[0];
        for (std::size_t k = 1; k <= m; ++k) {
            const double a = wr[n1 - k], b = wi[n1 - k];
            sr += a * cr[k] - b * ci[k];
            si += a * ci[k] + b * cr[k];
        }
        const C S(sr, si);
        const C next = (c[m] + 0.5 * h * dc[m] - 0.5 * h * S) / denom;
        c[n1] = next;
        cr[n1] = next.real();
        ci[n1] = next.imag();
        dc[n1] = -iw * next - (w0 * next + S);

        const double p = std::norm(next);
        if (p > 1.0 + kNormOvershootError) {
            std::ostringstream os;
            os << "solve_amplitude: |c0|^2 = " << p << " at t = " << static_cast<double>(n1) * h
               << " exceeds 1 + " << kNormOvershootError << "; reduce the step h";
            throw StepSizeError(os.str(), p - 1.0);
        }
    }

    AmplitudeTrajectory out;
    out.h = h;
    out.times.resize(len);
    out.p_exc.resize(len);
    out.gamma_t.resize(len);
    out.omega_t.resize(len);
    out.kernel_cache.resize(len);
    bool underflowed = false;
    for (std::size_t k = 0; k < len; ++k) {
        out.times[k] = static_cast<double>(k) * h;
        out.kernel_cache[k] = kernel(out.times[k]);
        out.p_exc[k] = std::norm(c[k]);
        underflowed = underflowed || std::abs(c[k]) < kAmplitudeFloor;
        if (underflowed) {
            out.gamma_t[k] = kNaN;
            out.omega_t[k] = kNaN;
        } else {
            const C g = dc[k] / c[k];
            out.gamma_t[k] = -g.real();
            out.omega_t[k] = -g.imag();
        }
    }
    out.c0 = std::move(c);
    return out;
}

MarkovianParams markovian_params(const SpectralDensity& spec) {
    MarkovianParams mp;
    mp.gamma0 = std::numbers::pi * evaluate_J(spec, spec.omega0());
    mp.omega0_shifted = spec.omega0() - pv_level_shift_at_omega0(spec);
    return mp;
}

std::complex<double> markovian_amplitude(const MarkovianParams& mp, double t) {
    if (!(t >= 0.0)) throw DomainError("markovian_amplitude: t must be >= 0");
    return std::exp(std::complex<double>(-mp.gamma0 * t, -mp.omega0_shifted * t));
}

std::vector<double> integrated_decay(const AmplitudeTrajectory& traj) {
    std::vector<double> acc(traj.size(), kNaN);
    if (traj.size() == 0) return acc;
    acc[0] = 0.0;
    using C = std::complex<double>;
    const double h = traj.h;
    static const Table gl(8);

    for (std::size_t k = 1; k < traj.size(); ++k) {
        if (std::isnan(traj.gamma_t[k])) break;
        // On each step the scheme's amplitude is the quadratic with value c_n
        // and slopes ċ_n, ċ_{n+1} at the ends; Γ = −Re ċ/c is integrated along
        // it.  Near-nodes of c make Γ spike, hence the adaptive bisection.
        const C c0 = traj.c0[k - 1];
        const C d0 = -C(traj.gamma_t[k - 1], traj.omega_t[k - 1]) * c0;
        const C d1 = -C(traj.gamma_t[k], traj.omega_t[k]) * traj.c0[k];
        auto gamma_at = [&](double tau) {
            const C c = c0 + d0 * tau + (d1 - d0) * (0.5 * tau * tau / h);
            const C dc = d0 + (d1 - d0) * (tau / h);
            return -(dc / c).real();
        };
        auto rule = [&](double a, double b) {
            double sum = 0.0;
            for (std::size_t i = 0; i < 8; ++i) {
                double x = 0.0, w = 0.0;
                gsl_integration_glfixed_point(a, b, i, &x, &w, gl.t);
                sum += w * gamma_at(x);
            }
            return sum;
        };
        auto adapt = [&](auto&& self, double a, double b, double whole, int depth) -> double {
            const double m = 0.5 * (a + b);
            const double left = rule(a, m), right = rule(m, b);
            if (depth >= 40 || std::abs(left + right - whole) <= 1e-13 * std::max(1.0, std::abs(left + right))) {
                return left + right;
            }
            return self(self, a, m, left, depth + 1) + self(self, m, b, right, depth + 1);
        };
        acc[k] = acc[k - 1] + adapt(adapt, 0.0, h, rule(0.0, h), 0);
    }
    return acc;
}

} // namespace entrap
