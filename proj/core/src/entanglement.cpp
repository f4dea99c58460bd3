// entanglement.cpp: closed-form concurrence and the density-matrix route

#include "entrap/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "entrap/errors.hpp"

namespace entrap {

namespace {

constexpr double kNormTol = 1e-12;
// Eigenvalues of ρ below this are round-off on a rank-deficient state.
constexpr double kRankFloor = 1e-14;
constexpr double kEigenInvalid = 1e-8;

Eigen::Matrix2cd damping_kraus0(std::complex<double> c0) {
    Eigen::Matrix2cd k = Eigen::Matrix2cd::Zero();
    k(0, 0) = 1.0; // |−⟩⟨−|
    k(1, 1) = c0;  // c0 |+⟩⟨+|
    return k;
}

Eigen::Matrix2cd damping_kraus1(std::complex<double> c0) {
    Eigen::Matrix2cd k = Eigen::Matrix2cd::Zero();
    k(0, 1) = std::sqrt(std::max(0.0, 1.0 - std::norm(c0))); // |−⟩⟨+|
    return k;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

Eigen::Matrix4cd sigma_yy() {
    Eigen::Matrix2cd sy;
    sy << 0.0, std::complex<double>(0.0, -1.0), std::complex<double>(0.0, 1.0), 0.0;
    return kron(sy, sy);
}

} // namespace

InitialState InitialState::from_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("InitialState: alpha must lie in [0, 1]");
    return {alpha, std::sqrt(1.0 - alpha * alpha)};
}

InitialState InitialState::from_amplitudes(double alpha, std::complex<double> beta) {
    if (!(alpha >= 0.0)) throw DomainError("InitialState: alpha must be >= 0");
    if (std::abs(alpha * alpha + std::norm(beta) - 1.0) > kNormTol) {
        throw DomainError("InitialState: |alpha|^2 + |beta|^2 must equal 1");
    }
    return {alpha, beta};
}

double concurrence_witness(double p, const InitialState& st) {
    if (!(p >= 0.0 && p <= 1.0 + kPopulationOvershoot)) {
        throw DomainError("concurrence: excited population outside [0, 1]");
    }
    p = std::min(p, 1.0);
    const double a = st.alpha;
    const double b = std::abs(st.beta);
    return 2.0 * a * b * p - 2.0 * b * b * p * (1.0 - p);
}

double concurrence_from_amplitude(double p, const InitialState& st) {
    return std::max(0.0, concurrence_witness(p, st));
}

TwoQubitDensity two_qubit_state(const InitialState& st, std::complex<double> c0) {
    if (std::abs(c0) > 1.0 + kPopulationOvershoot) throw DomainError("two_qubit_state: |c0| > 1");
    if (std::abs(c0) > 1.0) c0 /= std::abs(c0);

    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    psi(0) = st.alpha;
    psi(3) = st.beta;
    const Eigen::Matrix4cd rho0 = psi * psi.adjoint();

    const Eigen::Matrix2cd k[2] = {damping_kraus0(c0), damping_kraus1(c0)};
    TwoQubitDensity rho = TwoQubitDensity::Zero();
    for (const auto& ka : k) {
        for (const auto& kb : k) {
            const Eigen::Matrix4cd kk = kron(ka, kb);
            rho += kk * rho0 * kk.adjoint();
        }
    }
    return rho;
}

double wootters_concurrence(const TwoQubitDensity& rho) {
    // √λᵢ are the singular values of √ρ·√ρ̃ with ρ̃ = (σy⊗σy) ρ* (σy⊗σy).
    // The Hermitian square roots are taken through their eigen-decomposition,
    // which keeps tiny √λ accurate where eigenvalues of ρρ̃ would not.
    const Eigen::Matrix4cd yy = sigma_yy();
    const Eigen::Matrix4cd rho_tilde = yy * rho.conjugate() * yy;

    auto hermitian_sqrt = [](const Eigen::Matrix4cd& m) {
        const Eigen::Matrix4cd herm = 0.5 * (m + m.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(herm);
        Eigen::Vector4d ev = es.eigenvalues();
        for (int i = 0; i < 4; ++i) {
            if (ev(i) < -kEigenInvalid) throw DomainError("wootters_concurrence: density matrix is not positive");
            ev(i) = ev(i) < kRankFloor ? 0.0 : std::sqrt(ev(i));
        }
        return Eigen::Matrix4cd(es.eigenvectors() * ev.cast<std::complex<double>>().asDiagonal() *
                                es.eigenvectors().adjoint());
    };

    const Eigen::Matrix4cd prod = hermitian_sqrt(rho) * hermitian_sqrt(rho_tilde);
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(prod);
    const Eigen::Vector4d s = svd.singularValues(); // descending
    return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

double markovian_concurrence(const InitialState& st, double gamma0, double t) {
    if (!(t >= 0.0)) throw DomainError("markovian_concurrence: t must be >= 0");
    if (!(gamma0 > 0.0)) throw DomainError("markovian_concurrence: gamma0 must be > 0");
    const double e = std::exp(-2.0 * gamma0 * t);
    const double b = std::abs(st.beta);
    return std::max(0.0, 2.0 * e * b * (st.alpha - b * (1.0 - e)));
}

double markovian_death_time(const InitialState& st, double gamma0) {
    if (!(gamma0 > 0.0)) throw DomainError("markovian_death_time: gamma0 must be > 0");
    const double b = std::abs(st.beta);
    if (st.alpha >= b) return std::numeric_limits<double>::infinity();
    return -std::log(1.0 - st.alpha / b) / (2.0 * gamma0);
}

double residual_concurrence_from_residue(const InitialState& st, double Z) {
    if (!(Z > 0.0 && Z <= 1.0)) throw DomainError("residual_concurrence_from_residue: Z must lie in (0, 1]");
    return concurrence_from_amplitude(Z * Z, st);
}

} // namespace entrap
