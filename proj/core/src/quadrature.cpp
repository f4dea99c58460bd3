// quadrature.cpp: QUADPACK (GSL) adaptive Gauss–Kronrod over breakpoint
// lists, and accelerated half-period panel sums for Fourier integrals

#include "entrap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include "entrap/errors.hpp"

namespace entrap::quad {

namespace {

constexpr std::size_t kWorkspaceIntervals = 2000;

struct WorkspaceDeleter {
    void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};
using Workspace = std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter>;

Workspace& thread_workspace() {
    thread_local Workspace ws(gsl_integration_workspace_alloc(kWorkspaceIntervals));
    return ws;
}

void silence_gsl() {
    static const bool once = [] {
        gsl_set_error_handler_off();
        return true;
    }();
    (void)once;
}

double trampoline(double x, void* params) {
    return (*static_cast<const std::function<double(double)>*>(params))(x);
}

// Status codes that only say the requested accuracy was not fully reached;
// the estimate and its error bound are still meaningful.
bool acceptable(int status) {
    return status == GSL_SUCCESS || status == GSL_EROUND || status == GSL_EMAXITER || status == GSL_ESING;
}

Result integrate_piece(const std::function<double(double)>& f, double a, double b, double rel_tol, double abs_tol) {
    Result r;
    if (a == b) return r;
    silence_gsl();
    gsl_function fn{&trampoline, const_cast<std::function<double(double)>*>(&f)};
    auto* ws = thread_workspace().get();
    int status = 0;
    if (std::isinf(b)) {
        status = gsl_integration_qagiu(&fn, a, abs_tol, rel_tol, kWorkspaceIntervals, ws, &r.value, &r.error);
    } else {
        status = gsl_integration_qag(&fn, a, b, abs_tol, rel_tol, kWorkspaceIntervals, GSL_INTEG_GAUSS21, ws,
                                     &r.value, &r.error);
    }
    if (!acceptable(status) || !std::isfinite(r.value)) {
        throw NumericalError(std::string("quadrature failed: ") + gsl_strerror(status), r.error);
    }
    return r;
}

} // namespace

Result integrate(const std::function<double(double)>& f,
                 std::span<const double> breaks,
                 double rel_tol) {
    Result total;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const Result piece = integrate_piece(f, breaks[i], breaks[i + 1], rel_tol, 0.0);
        total.value += piece.value;
        total.error += piece.error;
    }
    return total;
}

std::complex<double> wynn_epsilon(std::span<const std::complex<double>> s) {
    using C = std::complex<double>;
    const std::size_t n = s.size();
    if (n == 0) return {};
    if (n < 3) return s.back();

    // Anti-diagonal sweep: diag[k] = ε_k^{(j−k)} after S_j is appended,
    // using ε_k^{(m)} = ε_{k−2}^{(m+1)} + 1/(ε_{k−1}^{(m+1)} − ε_{k−1}^{(m)}).
    std::vector<C> prev_diag;
    std::vector<C> diag;
    for (std::size_t j = 0; j < n; ++j) {
        diag.assign(1, s[j]);
        for (std::size_t k = 1; k <= j && k <= prev_diag.size(); ++k) {
            const C left_lower = (k >= 2) ? prev_diag[k - 2] : C{0.0, 0.0};
            const C diff = diag[k - 1] - prev_diag[k - 1];
            if (std::abs(diff) <= 1e-300) break;
            diag.push_back(left_lower + 1.0 / diff);
        }
        prev_diag = diag;
    }
    for (std::size_t k = diag.size(); k-- > 0;) {
        if (k % 2 == 0 && std::isfinite(diag[k].real()) && std::isfinite(diag[k].imag())) return diag[k];
    }
    return s.back();
}

ComplexResult fourier_half_line(const std::function<double(double)>& g,
                                double s,
                                double scale,
                                double rel_tol,
                                double abs_floor,
                                int max_panels) {
    if (!(s > 0.0)) throw DomainError("fourier_half_line requires s > 0");
    const double period = std::numbers::pi / s;
    const double piece_tol = std::min(1e-12, rel_tol * 1e-2);

    const std::function<double(double)> re = [&](double u) { return g(u) * std::cos(s * u); };
    const std::function<double(double)> im = [&](double u) { return g(u) * std::sin(s * u); };

    std::vector<std::complex<double>> sums;
    sums.reserve(64);
    std::complex<double> running{};
    std::complex<double> last_est{};
    double last_delta = std::numeric_limits<double>::infinity();
    int settled = 0;

    // Wynn's table is rebuilt from the trailing window only; older sums add
    // nothing once the alternating tail dominates.
    constexpr std::size_t kWindow = 24;
    std::vector<double> breaks;
    for (int k = 0; k < max_panels; ++k) {
        const double a = k * period;
        const double b = (k + 1) * period;
        breaks.assign(1, a);
        // Long panels near the origin get geometric breaks at the g scale.
        for (double x = a + scale; x < b && (x - a) < 256.0 * scale; x = a + 4.0 * (x - a)) breaks.push_back(x);
        breaks.push_back(b);
        for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
            // cos over a half period integrates to ~0, so the accuracy target
            // is set against the panel's L1 mass rather than its value.
            const double mass = std::max(std::abs(g(breaks[i])), std::abs(g(breaks[i + 1]))) *
                                (breaks[i + 1] - breaks[i]);
            const double abs_tol = std::max(piece_tol * mass, 1e-300);
            const double pr = integrate_piece(re, breaks[i], breaks[i + 1], piece_tol, abs_tol).value;
            const double pi = integrate_piece(im, breaks[i], breaks[i + 1], piece_tol, abs_tol).value;
            running += std::complex<double>(pr, pi);
        }
        sums.push_back(running);

        if (sums.size() < 6) continue;
        const std::size_t first = sums.size() > kWindow ? sums.size() - kWindow : 0;
        const std::complex<double> est =
            wynn_epsilon(std::span<const std::complex<double>>(sums).subspan(first));
        const double delta = std::abs(est - last_est);
        last_est = est;
        const double tol = std::max(rel_tol * std::abs(est), abs_floor);
        if (delta <= tol) {
            if (++settled >= 2) return {est, std::max(delta, last_delta), k + 1};
        } else {
            settled = 0;
        }
        last_delta = delta;
    }
    throw NumericalError("fourier_half_line: panel budget exhausted", last_delta);
}

} // namespace entrap::quad
