// quadrature.hpp: adaptive Gauss–Kronrod over breakpoint lists and a
// half-period panel summation for one-sided Fourier integrals

#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace entrap::quad {

struct Result {
    double value{0.0};
    double error{0.0};
};

struct ComplexResult {
    std::complex<double> value{};
    double error{0.0};
    int panels{0};
};

// Integrates f over consecutive intervals [b0,b1], [b1,b2], ...  The last
// breakpoint may be +infinity.  Each piece is refined adaptively until its
// error estimate is below rel_tol times the piece's L1 norm.
Result integrate(const std::function<double(double)>& f,
                 std::span<const double> breaks,
                 double rel_tol = 1e-12);

// Evaluates the one-sided Fourier integral  ∫_0^∞ g(u) e^{i s u} du  for
// s > 0 and a slowly varying g that decays at least like 1/u.  The range is
// cut into half periods [kπ/s, (k+1)π/s]; panel sums form an alternating
// sequence that is accelerated with Wynn's epsilon algorithm.  `scale` is
// the length over which g varies appreciably and is used to subdivide
// panels much longer than it.
//
// Throws NumericalError if the accelerated sum has not settled to
// rel_tol (relative to the running estimate, floored by abs_floor) within
// max_panels panels.
ComplexResult fourier_half_line(const std::function<double(double)>& g,
                                double s,
                                double scale,
                                double rel_tol = 1e-10,
                                double abs_floor = 1e-15,
                                int max_panels = 4000);

// Wynn epsilon extrapolation of a sequence of partial sums.  Returns the
// highest-order even-column entry on the last diagonal.
std::complex<double> wynn_epsilon(std::span<const std::complex<double>> partial_sums);

} // namespace entrap::quad
