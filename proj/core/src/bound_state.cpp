// bound_state.cpp: bisection on the single-excitation eigenvalue condition

#include "entrap/bound_state.hpp"

#include <cmath>

#include "entrap/errors.hpp"

namespace entrap {

namespace {
constexpr int kMaxDoublings = 64;
constexpr int kMaxBisections = 400;
} // namespace

double eigen_mismatch(const SpectralDensity& spec, double E) {
    return spec.omega0() - level_shift(spec, E) - E;
}

double residue(const SpectralDensity& spec, double energy) {
    if (!(energy < 0.0)) throw DomainError("residue: bound-state energy must be < 0");
    return 1.0 / (1.0 + level_shift_slope(spec, energy));
}

BoundStateResult find_bound_state(const SpectralDensity& spec, double tol) {
    if (!(tol > 0.0)) throw DomainError("find_bound_state: tol must be > 0");
    BoundStateResult out;
    const double w0 = spec.omega0();

    const auto shift0 = zero_energy_shift(spec);
    double hi = 0.0;
    if (shift0) {
        out.y_at_zero = w0 - *shift0;
        // g(0) = y(0); g is decreasing, so no root on E < 0 unless y(0) < 0.
        if (!(*out.y_at_zero < 0.0)) return out;
    } else {
        // ∫J/ω diverges, g → −∞ as E → 0⁻: a root always exists.
        hi = -tol;
        if (eigen_mismatch(spec, hi) > 0.0) {
            // Root squeezed into (−tol, 0); report the bracket midpoint.
            out.exists = true;
            out.energy = -0.5 * tol;
            out.residue = residue(spec, *out.energy);
            out.bracket = tol;
            return out;
        }
    }

    double lo = -w0;
    int doublings = 0;
    while (eigen_mismatch(spec, lo) <= 0.0) {
        if (++doublings > kMaxDoublings) {
            throw NumericalError("find_bound_state: failed to bracket the root", std::abs(lo));
        }
        hi = lo;
        lo *= 2.0;
    }

    int it = 0;
    while (hi - lo > tol && it++ < kMaxBisections) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (mid < 0.0 && eigen_mismatch(spec, mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    out.exists = true;
    out.energy = 0.5 * (lo + hi);
    out.bracket = hi - lo;
    out.residue = residue(spec, *out.energy);
    return out;
}

} // namespace entrap
