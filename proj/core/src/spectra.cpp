// spectra.cpp: spectral densities and their integrals

#include "entrap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "entrap/errors.hpp"
#include "entrap/quadrature.hpp"

namespace entrap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSmoothTol = 1e-12;
constexpr double kOscillatoryTol = 1e-10;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(name) + " must be positive and finite");
    }
}

// Sorted, de-duplicated breakpoints in [lo, hi]; `hi` may be +inf.
std::vector<double> tidy(std::vector<double> pts, double lo, double hi) {
    std::vector<double> out;
    out.push_back(lo);
    std::sort(pts.begin(), pts.end());
    for (double p : pts) {
        if (p > out.back() * (1.0 + 1e-14) + 1e-300 && p < hi) out.push_back(p);
    }
    out.push_back(hi);
    return out;
}

// Breakpoints on [0, ∞) adapted to J and, when E < 0 is close to the band
// edge, to the 1/(ω−E) scale |E|.
std::vector<double> frequency_breaks(const SpectralDensity& spec, double abs_e) {
    std::vector<double> pts;
    const double w0 = spec.omega0();
    pts.push_back(w0);
    std::visit(overloaded{
                   [&](const SuperOhmic& so) {
                       for (double m : {0.25, 1.0, 3.0, 10.0, 30.0}) pts.push_back(m * so.omega_c);
                   },
                   [&](const Lorentzian& lo) {
                       for (double m : {1.0, 4.0, 16.0, 64.0}) {
                           pts.push_back(w0 - m * lo.lambda);
                           pts.push_back(w0 + m * lo.lambda);
                       }
                       if (abs_e > 0.0) {
                           for (double x = abs_e; x < w0; x *= 8.0) pts.push_back(x);
                       }
                   },
               },
               spec.shape());
    const double hi = spec.is_lorentzian() ? kInf : truncation_frequency(spec);
    if (spec.is_lorentzian()) pts.push_back(truncation_frequency(spec));
    std::erase_if(pts, [](double p) { return !(p > 0.0); });
    return tidy(std::move(pts), 0.0, hi);
}

double derivative_at_omega0(const SpectralDensity& spec) {
    const double w = spec.omega0();
    return std::visit(overloaded{
                          [&](const SuperOhmic& so) {
                              return so.eta / (w * w) * std::exp(-w / so.omega_c) *
                                     (3.0 * w * w - w * w * w / so.omega_c);
                          },
                          [&](const Lorentzian&) { return 0.0; },
                      },
                      spec.shape());
}

double pv_scale(const SpectralDensity& spec) {
    return std::visit(overloaded{
                          [&](const SuperOhmic& so) { return std::min(spec.omega0(), so.omega_c); },
                          [&](const Lorentzian& lo) { return std::min(spec.omega0(), lo.lambda); },
                      },
                      spec.shape());
}

} // namespace

SpectralDensity::SpectralDensity(Shape shape, double omega0) : shape_(shape), omega0_(omega0) {}

SpectralDensity SpectralDensity::super_ohmic(double eta, double omega_c, double omega0) {
    require_positive(eta, "eta");
    require_positive(omega_c, "omega_c");
    require_positive(omega0, "omega0");
    return SpectralDensity(SuperOhmic{eta, omega_c}, omega0);
}

SpectralDensity SpectralDensity::lorentzian(double gamma, double lambda, double omega0) {
    require_positive(gamma, "gamma");
    require_positive(lambda, "lambda");
    require_positive(omega0, "omega0");
    return SpectralDensity(Lorentzian{gamma, lambda}, omega0);
}

SpectralDensity SpectralDensity::scaled(double factor) const {
    return std::visit(overloaded{
                          [&](const SuperOhmic& so) { return super_ohmic(so.eta * factor, so.omega_c, omega0_); },
                          [&](const Lorentzian& lo) { return lorentzian(lo.gamma * factor, lo.lambda, omega0_); },
                      },
                      shape_);
}

std::string SpectralDensity::describe() const {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const SuperOhmic& so) { os << "SuperOhmic(eta=" << so.eta << ", omega_c=" << so.omega_c; },
                   [&](const Lorentzian& lo) { os << "Lorentzian(gamma=" << lo.gamma << ", lambda=" << lo.lambda; },
               },
               shape_);
    os << ", omega0=" << omega0_ << ")";
    return os.str();
}

double evaluate_J(const SpectralDensity& spec, double omega) {
    if (!(omega >= 0.0)) throw DomainError("evaluate_J: omega must be >= 0");
    const double w0 = spec.omega0();
    return std::visit(overloaded{
                          [&](const SuperOhmic& so) {
                              if (omega == kInf) return 0.0;
                              return so.eta * omega * omega * omega / (w0 * w0) * std::exp(-omega / so.omega_c);
                          },
                          [&](const Lorentzian& lo) {
                              const double d = omega - w0;
                              return lo.gamma * lo.lambda * lo.lambda / (2.0 * std::numbers::pi * (d * d + lo.lambda * lo.lambda));
                          },
                      },
                      spec.shape());
}

double truncation_frequency(const SpectralDensity& spec) {
    return std::visit(overloaded{
                          [&](const SuperOhmic& so) { return 60.0 * so.omega_c; },
                          [&](const Lorentzian& lo) { return spec.omega0() * 17.0 + 256.0 * lo.lambda; },
                      },
                      spec.shape());
}

double spectral_weight(const SpectralDensity& spec) {
    const double w0 = spec.omega0();
    return std::visit(overloaded{
                          [&](const SuperOhmic& so) {
                              return 6.0 * so.eta * std::pow(so.omega_c, 4) / (w0 * w0);
                          },
                          [&](const Lorentzian& lo) {
                              return lo.gamma * lo.lambda / (2.0 * std::numbers::pi) *
                                     (std::numbers::pi / 2.0 + std::atan(w0 / lo.lambda));
                          },
                      },
                      spec.shape());
}

std::complex<double> memory_kernel(const SpectralDensity& spec, double s) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("memory_kernel: s must be finite and >= 0");
    const double w0 = spec.omega0();
    return std::visit(
        overloaded{
            [&](const SuperOhmic& so) {
                const std::complex<double> d(1.0, so.omega_c * s);
                const std::complex<double> d2 = d * d;
                return 6.0 * so.eta * std::pow(so.omega_c, 4) / (w0 * w0) / (d2 * d2);
            },
            [&](const Lorentzian& lo) {
                const double amp = 0.5 * lo.gamma * lo.lambda;
                const std::complex<double> full_line =
                    amp * std::exp(std::complex<double>(-lo.lambda * s, -w0 * s));
                // Weight the full-line form assigns to ω < 0, mirrored to u = −ω ≥ 0.
                if (s == 0.0) {
                    const double neg = amp / std::numbers::pi * (std::numbers::pi / 2.0 - std::atan(w0 / lo.lambda));
                    return full_line - neg;
                }
                const double c = lo.gamma * lo.lambda * lo.lambda / (2.0 * std::numbers::pi);
                auto mirrored = [&](double u) {
                    const double d = u + w0;
                    return c / (d * d + lo.lambda * lo.lambda);
                };
                const double scale = std::hypot(w0, lo.lambda);
                const auto corr = quad::fourier_half_line(mirrored, s, scale, kOscillatoryTol, 1e-15 * amp);
                return full_line - corr.value;
            },
        },
        spec.shape());
}

double level_shift(const SpectralDensity& spec, double E) {
    if (!(E < 0.0)) throw DomainError("level_shift: E must be < 0");
    if (E == -kInf) return 0.0;
    auto f = [&](double w) { return evaluate_J(spec, w) / (w - E); };
    const auto breaks = frequency_breaks(spec, -E);
    return quad::integrate(f, breaks, kSmoothTol).value;
}

double level_shift_slope(const SpectralDensity& spec, double E) {
    if (!(E < 0.0)) throw DomainError("level_shift_slope: E must be < 0");
    if (E == -kInf) return 0.0;
    auto f = [&](double w) {
        const double d = w - E;
        return evaluate_J(spec, w) / (d * d);
    };
    const auto breaks = frequency_breaks(spec, -E);
    return quad::integrate(f, breaks, kSmoothTol).value;
}

std::optional<double> zero_energy_shift(const SpectralDensity& spec) {
    if (evaluate_J(spec, 0.0) > 0.0) return std::nullopt;
    auto f = [&](double w) { return w > 0.0 ? evaluate_J(spec, w) / w : 0.0; };
    const auto breaks = frequency_breaks(spec, 0.0);
    return quad::integrate(f, breaks, kSmoothTol).value;
}

double pv_level_shift_at_omega0(const SpectralDensity& spec, double epsilon) {
    const double w0 = spec.omega0();
    if (!(epsilon > 0.0 && epsilon < w0)) throw DomainError("pv_level_shift_at_omega0: need 0 < epsilon < omega0");
    // Fold [0, ω₀−ε] onto [ω₀+ε, 2ω₀]: the 1/x singularity cancels pairwise.
    auto folded = [&](double x) { return (evaluate_J(spec, w0 + x) - evaluate_J(spec, w0 - x)) / x; };
    std::vector<double> pts;
    const double scale = pv_scale(spec);
    for (double m : {1.0, 4.0, 16.0, 64.0}) pts.push_back(m * scale);
    const auto inner_breaks = tidy(pts, epsilon, w0);
    const double inner = quad::integrate(folded, inner_breaks, kSmoothTol).value;

    auto outer_f = [&](double w) { return evaluate_J(spec, w) / (w - w0); };
    auto outer_breaks = frequency_breaks(spec, 0.0);
    std::erase_if(outer_breaks, [&](double p) { return p <= 2.0 * w0; });
    outer_breaks.insert(outer_breaks.begin(), 2.0 * w0);
    const double outer = quad::integrate(outer_f, outer_breaks, kSmoothTol).value;

    return inner + outer + 2.0 * epsilon * derivative_at_omega0(spec);
}

double pv_level_shift_at_omega0(const SpectralDensity& spec) {
    return pv_level_shift_at_omega0(spec, 1e-5 * pv_scale(spec));
}

} // namespace entrap
