#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "couette/chebyshev.hpp"
#include "couette/errors.hpp"
#include "couette/flow_config.hpp"

namespace couette {

/// Parameters of the per-mode resolvent problem
///   (zeta^2 - d^2/dy^2) u = f,  slip_ratio*u(0) - u'(0) = 0,  u(1) = 0,
/// with zeta the square root of lambda/mu + k^2 taken in the Re zeta > 0
/// half plane.
struct GreenParams {
    std::complex<double> zeta{1.0, 0.0};
    double slip_ratio = 0.0; ///< alpha / mu
};

/// Green function of the resolvent problem. Evaluated through a five-term
/// split in which every exponential has a nonpositive real exponent, so the
/// value stays finite for Re zeta up to a few hundred.
inline std::complex<double> green_eval(const GreenParams& p, double y, double s) {
    if (y < 0.0 || y > 1.0 || s < 0.0 || s > 1.0)
        throw OutOfDomain("green_eval: y and s must lie in [0,1]");
    const std::complex<double> z = p.zeta;
    if (!(z.real() > 0.0))
        throw OutOfDomain("green_eval: zeta must satisfy Re zeta > 0");
    const std::complex<double> bp = p.slip_ratio + z;
    const std::complex<double> bm = p.slip_ratio - z;
    const std::complex<double> core = bp - bm * std::exp(-2.0 * z);
    if (std::abs(core) < 1e-14 * (1.0 + std::abs(p.slip_ratio) + std::abs(z)))
        throw SingularDenominator("green_eval: boundary determinant vanishes");
    const std::complex<double> denom = 2.0 * z * core;
    const double r = std::abs(s - y);
    return (-bp * std::exp(-z * (2.0 - s - y)) - bm * std::exp(-z * (s + y)) +
            bm * std::exp(-z * (2.0 - s + y)) + bm * std::exp(-z * (2.0 + s - y))) /
               denom +
           std::exp(-z * r) / (2.0 * z);
}

namespace detail {

/// Small Clenshaw-Curtis rule on [0,1] for the per-node Green integrals.
/// The integrand has a derivative kink at s = y, so the integral is split
/// there and this rule applied to each analytic piece.
struct SubQuadrature {
    Eigen::VectorXd s, w;
    explicit SubQuadrature(int q) {
        ChebGrid g = make_grid(q);
        s = g.y;
        w = g.w;
    }
};

} // namespace detail

/// u(y_i) = int_0^1 G(y_i, s) f(s) ds, by panel quadrature split at the
/// Green-function kink; f is evaluated off the nodes barycentrically.
inline Eigen::VectorXcd resolvent_solve_green(const GreenParams& p, const ChebGrid& grid,
                                              const Eigen::VectorXcd& f) {
    if (f.size() != grid.N)
        throw SizeMismatch("resolvent_solve_green: sample count does not match grid");
    static const detail::SubQuadrature rule(48);
    Eigen::VectorXcd u(grid.N);
    for (int i = 0; i < grid.N; ++i) {
        const double yi = grid.y(i);
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [lo, hi] : {std::pair{0.0, yi}, std::pair{yi, 1.0}}) {
            const double len = hi - lo;
            if (len <= 0.0)
                continue;
            for (int q = 0; q < rule.s.size(); ++q) {
                const double s = lo + len * rule.s(q);
                acc += len * rule.w(q) * green_eval(p, yi, s) * interpolate(grid, f, s);
            }
        }
        u(i) = acc;
    }
    return u;
}

/// Dense collocation solve of the same problem; the independent partner of
/// the Green-function route.
inline Eigen::VectorXcd resolvent_solve_direct(const GreenParams& p, const ChebGrid& grid,
                                               const Eigen::VectorXcd& f) {
    if (f.size() != grid.N)
        throw SizeMismatch("resolvent_solve_direct: sample count does not match grid");
    const int N = grid.N;
    const std::complex<double> z2 = p.zeta * p.zeta;
    Eigen::MatrixXcd M = (-grid.D2).cast<std::complex<double>>();
    M.diagonal().array() += z2;
    Eigen::VectorXcd rhs = f;

    M.row(0) = (-grid.D1.row(0)).cast<std::complex<double>>();
    M(0, 0) += p.slip_ratio; // slip_ratio*u(0) - u'(0) = 0
    rhs(0) = 0.0;
    M.row(N - 1).setZero();
    M(N - 1, N - 1) = 1.0; // u(1) = 0
    rhs(N - 1) = 0.0;

    Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
    if (!lu.isInvertible())
        throw SingularMatrix("resolvent_solve_direct: collocation matrix is singular");
    return lu.solve(rhs);
}

/// |lambda| ||u|| + mu ||u||_{H2} for the per-mode solve (lambda + A)u = f,
/// using grid norms. Returns 0 for f = 0.
inline double resolvent_ratio(const FlowConfig& cfg, int k, std::complex<double> lambda,
                              const Eigen::VectorXcd& f, const ChebGrid& grid) {
    if (cfg.flow_case != FlowCase::CaseI)
        throw std::invalid_argument("resolvent_ratio: Green form covers CaseI only");
    cfg.validate();
    auto norm = [&](const Eigen::VectorXcd& v) {
        return std::sqrt(integrate(grid, Eigen::VectorXd(v.cwiseAbs2())));
    };
    const double nf = norm(f);
    if (nf == 0.0)
        return 0.0;
    const std::complex<double> z2 = lambda / cfg.mu + static_cast<double>(k) * k;
    std::complex<double> zeta = std::sqrt(z2);
    if (!(zeta.real() > 0.0))
        throw OutOfDomain("resolvent_ratio: lambda outside the resolvent sector");
    const GreenParams p{zeta, cfg.alpha / cfg.mu};
    const Eigen::VectorXcd u = resolvent_solve_direct(p, grid, f) / cfg.mu;
    const double n0 = norm(u), n1 = norm(grid.D1 * u), n2 = norm(grid.D2 * u);
    const double h2 = std::sqrt(n0 * n0 + n1 * n1 + n2 * n2);
    return (std::abs(lambda) * n0 + cfg.mu * h2) / nf;
}

struct ResolventScanSample {
    std::complex<double> lambda;
    double max_ratio = 0.0;
};

struct ResolventScanReport {
    std::vector<ResolventScanSample> samples;
    double max_ratio = 0.0;
    double min_ratio = 0.0;
};

/// Empirical analogue of the uniform resolvent estimate: the reported ratios
/// should stay within a modest factor of one another across the sampled
/// lambda set.
inline ResolventScanReport resolvent_estimate_scan(const FlowConfig& cfg, int k,
                                                   const std::vector<std::complex<double>>& lambdas,
                                                   const ChebGrid& grid, int vectors_per_lambda = 5,
                                                   unsigned long seed = 0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ResolventScanReport rep;
    for (const std::complex<double>& lam : lambdas) {
        ResolventScanSample sample;
        sample.lambda = lam;
        for (int v = 0; v < vectors_per_lambda; ++v) {
            Eigen::VectorXcd f(grid.N);
            for (int j = 0; j < grid.N; ++j)
                f(j) = std::complex<double>(gauss(rng), gauss(rng));
            sample.max_ratio = std::max(sample.max_ratio, resolvent_ratio(cfg, k, lam, f, grid));
        }
        rep.samples.push_back(sample);
    }
    rep.max_ratio = 0.0;
    rep.min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& s : rep.samples) {
        rep.max_ratio = std::max(rep.max_ratio, s.max_ratio);
        rep.min_ratio = std::min(rep.min_ratio, s.max_ratio);
    }
    return rep;
}

} // namespace couette
