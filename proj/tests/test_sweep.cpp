#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "entrap/bound_state.hpp"
#include "entrap/errors.hpp"
#include "entrap/sweep.hpp"

using namespace entrap;

namespace {

std::vector<double> grid(double t0, double t1, std::size_t n) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n - 1);
    return t;
}

} // namespace

TEST(WindowStats, ConstantIsConverged) {
    const auto t = grid(160.0, 200.0, 401);
    const std::vector<double> p(t.size(), 0.3);
    const auto w = window_stats(t, p);
    EXPECT_NEAR(w.mean, 0.3, 1e-14);
    EXPECT_NEAR(w.slope, 0.0, 1e-15);
    EXPECT_FALSE(is_oscillatory(w));
    EXPECT_TRUE(is_converged(w, 200.0));
}

TEST(WindowStats, LinearSlope) {
    const auto t = grid(0.0, 10.0, 101);
    std::vector<double> p;
    for (double x : t) p.push_back(0.5 + 0.01 * x);
    const auto w = window_stats(t, p);
    EXPECT_NEAR(w.slope, 0.01, 1e-12);
    EXPECT_NEAR(w.max_rise, 0.1 / 0.6, 1e-12);
    EXPECT_NEAR(w.max_fall, 0.0, 1e-15);
    EXPECT_FALSE(is_oscillatory(w));
    EXPECT_FALSE(is_converged(w, 10.0));
}

TEST(WindowStats, MonotoneDecayIsNotOscillatory) {
    const auto t = grid(80.0, 100.0, 201);
    std::vector<double> p;
    for (double x : t) p.push_back(std::exp(-0.1 * x));
    const auto w = window_stats(t, p);
    EXPECT_GT(w.swing, 0.8);
    EXPECT_FALSE(is_oscillatory(w));
    EXPECT_FALSE(is_converged(w, 100.0));

    // Same shape, but already below the decay floor.
    for (double& v : p) v *= 1e-3;
    EXPECT_TRUE(is_converged(window_stats(t, p), 100.0));
}

TEST(WindowStats, RabiEnvelopeIsOscillatory) {
    const auto t = grid(160.0, 200.0, 4001);
    std::vector<double> p;
    for (double x : t) p.push_back(0.2 * std::pow(std::cos(0.8 * x), 2));
    const auto w = window_stats(t, p);
    EXPECT_TRUE(is_oscillatory(w));
    EXPECT_FALSE(is_converged(w, 200.0));
}

TEST(WindowStats, SmallRippleIsConverged) {
    const auto t = grid(160.0, 200.0, 4001);
    std::vector<double> p;
    for (double x : t) p.push_back(0.4 + 0.001 * std::sin(3.0 * x));
    const auto w = window_stats(t, p);
    EXPECT_FALSE(is_oscillatory(w));
    EXPECT_TRUE(is_converged(w, 200.0));
}

TEST(SteadyState, MatchesResidueForStrongBroadCoupling) {
    const auto spec = SpectralDensity::lorentzian(3.0, 15.0);
    const auto st = InitialState::from_alpha(0.7);
    const auto rep = steady_state(spec, st, 60.0);
    ASSERT_TRUE(rep.ok());
    EXPECT_TRUE(rep.converged);
    EXPECT_FALSE(rep.oscillatory);
    EXPECT_NEAR(rep.window_begin, 0.8 * rep.window_end, 1e-12);
    const double Z = *find_bound_state(spec).residue;
    EXPECT_NEAR(rep.mean_p, Z * Z, 0.02 * Z * Z);
    EXPECT_NEAR(rep.residual_c, residual_concurrence_from_residue(st, Z), 0.02);
}

TEST(PhaseDiagram, SingleCellAndLayout) {
    const auto st = InitialState::from_alpha(0.7);
    const auto table = phase_diagram({3.0}, {15.0}, st, 40.0, 0.0, 1);
    ASSERT_EQ(table.cells.size(), 1u);
    const auto direct = steady_state(SpectralDensity::lorentzian(3.0, 15.0), st, 40.0);
    EXPECT_EQ(table.at(0, 0).residual_c, direct.residual_c);

    const auto two = phase_diagram({0.2, 3.0}, {2.0, 15.0}, st, 30.0, 0.0, 2);
    ASSERT_EQ(two.cells.size(), 4u);
    const auto corner = steady_state(SpectralDensity::lorentzian(3.0, 2.0), st, 30.0);
    EXPECT_EQ(two.at(1, 0).residual_c, corner.residual_c);
}

TEST(PhaseDiagram, DeterministicAcrossThreadCounts) {
    const auto st = InitialState::from_alpha(0.7);
    const std::vector<double> g{0.2, 1.0, 3.0}, l{0.1, 4.0};
    const auto a = phase_diagram(g, l, st, 20.0, 0.0, 1);
    const auto b = phase_diagram(g, l, st, 20.0, 0.0, 3);
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        EXPECT_EQ(a.cells[i].residual_c, b.cells[i].residual_c);
        EXPECT_EQ(a.cells[i].converged, b.cells[i].converged);
        EXPECT_EQ(a.cells[i].oscillatory, b.cells[i].oscillatory);
    }
}

TEST(PhaseDiagram, AxisValidation) {
    const auto st = InitialState::from_alpha(0.7);
    EXPECT_THROW(phase_diagram({}, {1.0}, st, 10.0), DomainError);
    EXPECT_THROW(phase_diagram({1.0, 1.0}, {1.0}, st, 10.0), DomainError);
    EXPECT_THROW(phase_diagram({1.0}, {2.0, 1.0}, st, 10.0), DomainError);
}

TEST(PhaseDiagram, CellErrorsAreRecorded) {
    // Too short for ten steps: every cell fails without aborting the sweep.
    const auto table = phase_diagram({1.0, 2.0}, {1.0}, InitialState::from_alpha(0.7), 0.01, 0.0, 1);
    for (const auto& c : table.cells) {
        EXPECT_FALSE(c.ok());
        EXPECT_TRUE(std::isnan(c.residual_c));
    }
}

TEST(PhaseDiagram, DefaultGrids) {
    const auto g = default_gamma_grid();
    ASSERT_EQ(g.size(), 8u);
    EXPECT_NEAR(g.front(), 0.2, 1e-15);
    EXPECT_NEAR(g.back(), 3.0, 1e-14);
    const auto l = default_lambda_grid();
    ASSERT_EQ(l.size(), 9u);
    EXPECT_EQ(l.front(), 0.1);
    EXPECT_EQ(l[1], 2.0);
    EXPECT_EQ(l.back(), 16.0);
}
