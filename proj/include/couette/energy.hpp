#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "couette/chebyshev.hpp"
#include "couette/errors.hpp"
#include "couette/flow_config.hpp"

namespace couette {

/// Labels the weak-form identity the functionals feed: the phase-speed form
/// (Iform) or the raw-eigenvalue form (Hform). The integrals are the same
/// quantities either way.
enum class EnergyVariant { Iform, Hform };

/// I0^2 = int |phi|^2, I1^2 = int |phi'|^2, and I2^2 = int |phi''|^2 plus the
/// slip boundary terms ((alpha/mu)|phi'(0)|^2 one-sided, or the sum over both
/// walls). I2^2 can only go negative when a slip coefficient is negative.
/// Q = (i/2) int phi * conj(phi').
struct EnergyFunctionals {
    double I0sq = 0.0;
    double I1sq = 0.0;
    double I2sq = 0.0;
    std::complex<double> Q{0.0, 0.0};
    EnergyVariant variant = EnergyVariant::Iform;
};

inline EnergyFunctionals compute_functionals(const Eigen::VectorXcd& phi, const ChebGrid& grid,
                                             int /*k*/, const FlowConfig& cfg,
                                             EnergyVariant variant = EnergyVariant::Iform) {
    if (phi.size() != grid.N)
        throw SizeMismatch("compute_functionals: sample count does not match grid");
    const Eigen::VectorXcd d1 = grid.D1 * phi;
    const Eigen::VectorXcd d2 = grid.D2 * phi;

    EnergyFunctionals E;
    E.variant = variant;
    E.I0sq = integrate(grid, Eigen::VectorXd(phi.cwiseAbs2()));
    E.I1sq = integrate(grid, Eigen::VectorXd(d1.cwiseAbs2()));
    E.I2sq = integrate(grid, Eigen::VectorXd(d2.cwiseAbs2()));
    if (cfg.flow_case == FlowCase::CaseI) {
        E.I2sq += cfg.alpha / cfg.mu * std::norm(d1(0));
    } else {
        E.I2sq += cfg.alpha0 / cfg.mu * std::norm(d1(0)) +
                  cfg.alpha1 / cfg.mu * std::norm(d1(grid.N - 1));
    }
    std::complex<double> q(0.0, 0.0);
    for (int j = 0; j < grid.N; ++j)
        q += grid.w(j) * phi(j) * std::conj(d1(j));
    E.Q = std::complex<double>(0.0, 0.5) * q;
    return E;
}

/// The slip drop 2|alpha| - alpha (one-sided) or 2 max|alpha_l| - sum alpha_l
/// (two-sided) entering every mu threshold.
inline double slip_drop(const FlowConfig& cfg) {
    if (cfg.flow_case == FlowCase::CaseI)
        return 2.0 * std::abs(cfg.alpha) - cfg.alpha;
    return 2.0 * std::max(std::abs(cfg.alpha0), std::abs(cfg.alpha1)) -
           (cfg.alpha0 + cfg.alpha1);
}

struct ChainReport {
    double h = 0.0;              ///< 1 - slip_drop/mu
    double slack_i2_vs_i1 = 0.0; ///< I2^2 - h*I1^2
    double slack_i2_vs_i0 = 0.0; ///< I2^2 - h*I0^2
    double slack_i1_vs_i0 = 0.0; ///< I1^2 - I0^2
    bool holds = false;          ///< all slacks >= -1e-9
};

/// Checks I2^2 >= h I1^2, I2^2 >= h I0^2 and I1^2 >= I0^2 for functionals of
/// an eigenfunction satisfying the mode boundary conditions (the caller is
/// responsible for that; the slacks expose any violation).
inline ChainReport check_inequality_chain(const EnergyFunctionals& E, const FlowConfig& cfg,
                                          int /*k*/) {
    const double drop = slip_drop(cfg);
    if (!(cfg.mu > drop))
        throw HypothesisViolated("check_inequality_chain: mu <= " + std::to_string(drop) +
                                 ", chain not claimed there");
    ChainReport rep;
    rep.h = 1.0 - drop / cfg.mu;
    rep.slack_i2_vs_i1 = E.I2sq - rep.h * E.I1sq;
    rep.slack_i2_vs_i0 = E.I2sq - rep.h * E.I0sq;
    rep.slack_i1_vs_i0 = E.I1sq - E.I0sq;
    constexpr double kSlack = -1e-9;
    rep.holds = rep.slack_i2_vs_i1 >= kSlack && rep.slack_i2_vs_i0 >= kSlack &&
                rep.slack_i1_vs_i0 >= kSlack;
    return rep;
}

struct ImcReport {
    bool skipped = false; ///< vacuous when the base flow is constant (R = 0)
    bool holds = false;
    double im_c = 0.0;
    double bound = 0.0; ///< Cauchy-Schwarz upper bound for Im c
    double slack = 0.0; ///< bound - im_c
};

/// Im c <= (I0*I1 - (kR)^{-1}(I2^2 + 2k^2 I1^2 + k^4 I0^2)) / (I1^2 + k^2 I0^2),
/// checked with 1e-7 slack.
inline ImcReport check_imc_bound(std::complex<double> c, const EnergyFunctionals& E, int k,
                                 double reynolds) {
    if (k <= 0)
        throw std::invalid_argument("check_imc_bound: requires k > 0");
    ImcReport rep;
    if (reynolds == 0.0) {
        rep.skipped = true;
        return rep;
    }
    const double k2 = static_cast<double>(k) * k;
    const double dissipation = E.I2sq + 2.0 * k2 * E.I1sq + k2 * k2 * E.I0sq;
    rep.im_c = c.imag();
    rep.bound = (std::sqrt(E.I0sq * E.I1sq) - dissipation / (k * reynolds)) /
                (E.I1sq + k2 * E.I0sq);
    rep.slack = rep.bound - rep.im_c;
    rep.holds = rep.im_c <= rep.bound + 1e-7;
    return rep;
}

/// Relative residual of the integrated-by-parts scalar identity
///   int (d^2-k^2)^2 phi conj(phi) = i k R int (y - c)(d^2-k^2) phi conj(phi),
/// with the left side expanded through the boundary conditions into
/// I2^2 + 2k^2 I1^2 + k^4 I0^2. Converged eigenpairs drive this below 1e-7.
inline double check_weak_form(std::complex<double> c, const Eigen::VectorXcd& phi,
                              const ChebGrid& grid, int k, double reynolds,
                              const FlowConfig& cfg) {
    if (phi.size() != grid.N)
        throw SizeMismatch("check_weak_form: sample count does not match grid");
    if (phi.cwiseAbs().maxCoeff() == 0.0)
        return 0.0;
    const EnergyFunctionals E = compute_functionals(phi, grid, k, cfg, EnergyVariant::Iform);
    const double k2 = static_cast<double>(k) * k;
    const std::complex<double> lhs(E.I2sq + 2.0 * k2 * E.I1sq + k2 * k2 * E.I0sq, 0.0);

    const Eigen::VectorXcd d2 = grid.D2 * phi;
    std::complex<double> rhs(0.0, 0.0);
    for (int j = 0; j < grid.N; ++j)
        rhs += grid.w(j) * (grid.y(j) - c) * (d2(j) - k2 * phi(j)) * std::conj(phi(j));
    rhs *= std::complex<double>(0.0, 1.0) * static_cast<double>(k) * reynolds;

    const double scale = std::abs(lhs) + std::abs(rhs);
    return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

} // namespace couette
