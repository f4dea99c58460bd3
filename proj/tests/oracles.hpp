// oracles.hpp: brute-force reference computations for tests.  Nothing here
// calls into the engine's quadrature or kernel code.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

namespace entrap::oracle {

// Composite Simpson on [a, b] with n (even) intervals.
template <class F>
auto simpson(F&& f, double a, double b, std::size_t n) {
    if (n % 2) ++n;
    const double h = (b - a) / static_cast<double>(n);
    auto acc = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i) {
        acc += (i % 2 ? 4.0 : 2.0) * f(a + static_cast<double>(i) * h);
    }
    return acc * (h / 3.0);
}

// ∫_W^∞ f(ω) dω via ω = W/x on x ∈ (0, 1]; f must decay faster than 1/ω.
template <class F>
auto simpson_tail(F&& f, double W, std::size_t n) {
    auto mapped = [&](double x) {
        // x = 0 stands in for the limit of an algebraic tail.
        x = std::max(x, 1e-8);
        const double w = W / x;
        return f(w) * (W / (x * x));
    };
    return simpson(mapped, 0.0, 1.0, n);
}

inline double lorentz_J(double gamma, double lambda, double w) {
    const double d = w - 1.0;
    return gamma * lambda * lambda / (2.0 * std::numbers::pi * (d * d + lambda * lambda));
}

inline double so_J(double eta, double wc, double w) { return eta * w * w * w * std::exp(-w / wc); }

// Lorentzian kernel by rotating the negative-frequency correction onto the
// imaginary axis:  ∫_0^∞ g(u) e^{ius} du = i ∫_0^∞ g(iy) e^{−sy} dy
// (no poles of g in the first quadrant, arc contribution vanishes).
inline std::complex<double> lorentz_kernel_rotated(double gamma, double lambda, double s) {
    using C = std::complex<double>;
    const double c = gamma * lambda * lambda / (2.0 * std::numbers::pi);
    auto g_iy = [&](double y) {
        const C d = C(1.0, y);
        return c / (d * d + lambda * lambda);
    };
    // y = x/(1−x) maps [0, 1) onto [0, ∞).
    auto mapped = [&](double x) -> C {
        if (x >= 1.0) return C{};
        const double y = x / (1.0 - x);
        return g_iy(y) * std::exp(-s * y) / ((1.0 - x) * (1.0 - x));
    };
    // The y-integrand varies on the scale min(1, 1/s); a split at x = 0.5
    // keeps the dense part near the origin well resolved.
    const C corr = C(0.0, 1.0) * (simpson(mapped, 0.0, 0.5, 400000) + simpson(mapped, 0.5, 1.0, 400000));
    const C full_line = 0.5 * gamma * lambda * std::exp(C(-lambda * s, -s));
    return full_line - corr;
}

// Super-Ohmic kernel by direct quadrature of ∫_0^{60ω_c} J(ω) e^{−iωs} dω.
inline std::complex<double> so_kernel_brute(double eta, double wc, double s) {
    using C = std::complex<double>;
    auto f = [&](double w) { return so_J(eta, wc, w) * std::exp(C(0.0, -w * s)); };
    return simpson(f, 0.0, 60.0 * wc, 2000000);
}

} // namespace entrap::oracle
