#pragma once

#include <algorithm>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "couette/flow_config.hpp"
#include "couette/mode_operators.hpp"

namespace couette {

/// Spectrum of one wavenumber, eigenvalues sorted by descending real part
/// (ties broken by ascending imaginary part).
struct ModeSpectrum {
    int k = 0;
    int resolution = 0;
    std::vector<std::complex<double>> eigenvalues;
    std::vector<Eigen::VectorXcd> eigenfunctions; ///< empty unless requested
    std::vector<bool> converged;
};

/// Result of a wavenumber scan: m = max Re(lambda) over all scanned modes.
struct AbscissaReport {
    double m = -std::numeric_limits<double>::infinity();
    int argmax_k = 0;
    std::vector<std::pair<int, double>> per_k; ///< (k, max Re lambda)
};

/// A converged Orr-Sommerfeld eigenpair in both eigenvalue conventions.
struct OSEigenpair {
    std::complex<double> lambda;
    std::complex<double> c;
    Eigen::VectorXcd phi;
};

namespace detail {

// Eigen has no complex-valued dense eigensolver as fast as LAPACK's zgeev,
// so the standard problem goes straight to LAPACK. The input is destroyed.
inline void zgeev(Eigen::MatrixXcd M, Eigen::VectorXcd& w, Eigen::MatrixXcd* V) {
    const auto n = static_cast<lapack_int>(M.rows());
    w.resize(n);
    if (V)
        V->resize(n, n);
    const lapack_int info =
        LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', V ? 'V' : 'N', n, M.data(), n, w.data(),
                      nullptr, n, V ? V->data() : nullptr, n);
    if (info != 0)
        throw SolverFailure("zgeev failed with info=" + std::to_string(info));
}

/// max |phi| scaled to 1, first component above 1e-12 of the max rotated to
/// zero phase. No-op on the zero vector.
inline void normalize_eigenfunction(Eigen::VectorXcd& phi) {
    const double peak = phi.cwiseAbs().maxCoeff();
    if (peak == 0.0)
        return;
    Eigen::Index j0 = 0;
    while (j0 < phi.size() && std::abs(phi(j0)) <= 1e-12 * peak)
        ++j0;
    phi *= std::conj(phi(j0)) / std::abs(phi(j0)) / peak;
}

inline ModeSpectrum spectrum_from(const ReducedPencil& red, int k, bool want_vectors,
                                  bool drop_constant_mode) {
    Eigen::MatrixXcd M;
    if (red.standard) {
        M = red.A;
    } else {
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(red.B);
        if (!lu.isInvertible())
            throw SolverFailure("solve_mode: reduced mass matrix is singular");
        M = lu.solve(red.A);
    }
    const bool need_vectors = want_vectors || drop_constant_mode;
    Eigen::VectorXcd w;
    Eigen::MatrixXcd V;
    zgeev(std::move(M), w, need_vectors ? &V : nullptr);

    std::vector<int> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    if (drop_constant_mode) {
        // CaseII, k=0, alpha0 = alpha1 = 0: the constant vector is an exact
        // neutral eigenvector; deflate the eigenpair most aligned with it.
        const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(V.rows());
        int worst = 0;
        double best_corr = -1.0;
        for (int j = 0; j < static_cast<int>(w.size()); ++j) {
            const double corr = std::abs(ones.dot(V.col(j))) /
                                (std::sqrt(static_cast<double>(V.rows())) * V.col(j).norm());
            if (corr > best_corr) {
                best_corr = corr;
                worst = j;
            }
        }
        order.erase(std::find(order.begin(), order.end(), worst));
    }
    std::sort(order.begin(), order.end(), [&](int p, int q) {
        if (w(p).real() != w(q).real())
            return w(p).real() > w(q).real();
        return w(p).imag() < w(q).imag();
    });

    ModeSpectrum spec;
    spec.k = k;
    spec.resolution = red.n_full;
    spec.eigenvalues.reserve(order.size());
    for (int j : order)
        spec.eigenvalues.push_back(w(j));
    spec.converged.assign(order.size(), true);
    if (want_vectors) {
        spec.eigenfunctions.reserve(order.size());
        for (int j : order) {
            Eigen::VectorXcd phi = red.extend(V.col(j));
            normalize_eigenfunction(phi);
            spec.eigenfunctions.push_back(std::move(phi));
        }
    }
    return spec;
}

} // namespace detail

inline ModeSpectrum solve_mode(const ModeOperator& op, bool want_vectors = false) {
    try {
        return detail::spectrum_from(reduce(op), op.k, want_vectors, false);
    } catch (const SolverFailure& e) {
        throw SolverFailure(std::string(e.what()) + " (k=" + std::to_string(op.k) + ")");
    }
}

inline ModeSpectrum solve_mode(const K0Operator& op, bool want_vectors = false) {
    try {
        return detail::spectrum_from(reduce(op), 0, want_vectors, op.project_zero_mean);
    } catch (const SolverFailure& e) {
        throw SolverFailure(std::string(e.what()) + " (k=0)");
    }
}

/// Keep the eigenvalues of `spec` that have a partner within a relative
/// tolerance (absolute floor 1e-8) in the refined spectrum `refined`, and
/// drop anything with |lambda| above 1e8. Eigenfunctions of kept entries
/// survive.
inline ModeSpectrum filter_spurious(const ModeSpectrum& spec, const ModeSpectrum& refined,
                                    double tol) {
    constexpr double kMagnitudeCutoff = 1e8;
    ModeSpectrum out;
    out.k = spec.k;
    out.resolution = spec.resolution;
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
        const std::complex<double> lam = spec.eigenvalues[i];
        if (std::abs(lam) > kMagnitudeCutoff)
            continue;
        double dmin = std::numeric_limits<double>::infinity();
        for (const std::complex<double>& mu : refined.eigenvalues)
            dmin = std::min(dmin, std::abs(lam - mu));
        if (dmin <= std::max(tol * std::abs(lam), 1e-8)) {
            out.eigenvalues.push_back(lam);
            out.converged.push_back(true);
            if (i < spec.eigenfunctions.size())
                out.eigenfunctions.push_back(spec.eigenfunctions[i]);
        }
    }
    return out;
}

constexpr double kDefaultFilterTol = 1e-6;

/// Filtered spectrum of one mode at resolution N, using a 3N/2 companion
/// solve to reject spurious eigenvalues.
inline ModeSpectrum converged_spectrum(const FlowConfig& cfg, int k, const ChebGrid& grid,
                                       const ChebGrid& refined, bool want_vectors = false,
                                       double tol = kDefaultFilterTol) {
    if (k == 0) {
        ModeSpectrum s = solve_mode(assemble_k0(cfg, grid), want_vectors);
        ModeSpectrum r = solve_mode(assemble_k0(cfg, refined), false);
        return filter_spurious(s, r, tol);
    }
    ModeSpectrum s = solve_mode(assemble_os(cfg, k, grid), want_vectors);
    ModeSpectrum r = solve_mode(assemble_os(cfg, k, refined), false);
    return filter_spurious(s, r, tol);
}

/// Scan k = 0..kmax (negative k are covered by the Re-spectrum symmetry)
/// and report the spectral abscissa over all scanned modes.
inline AbscissaReport spectral_abscissa(const FlowConfig& cfg, int kmax, int N,
                                        double tol = kDefaultFilterTol) {
    if (kmax < 1)
        throw std::invalid_argument("spectral_abscissa: kmax must be >= 1");
    const ChebGrid grid = make_grid(N);
    const ChebGrid refined = make_grid(3 * N / 2);
    AbscissaReport rep;
    for (int k = 0; k <= kmax; ++k) {
        const ModeSpectrum spec = converged_spectrum(cfg, k, grid, refined, false, tol);
        if (spec.eigenvalues.empty())
            throw SolverFailure("spectral_abscissa: no converged eigenvalues at k=" +
                                std::to_string(k));
        const double mk = spec.eigenvalues.front().real();
        rep.per_k.emplace_back(k, mk);
        if (mk > rep.m) {
            rep.m = mk;
            rep.argmax_k = k;
        }
    }
    return rep;
}

/// Converged eigenpairs of one mode in both eigenvalue conventions, in the
/// normalization with k > 0 and R > 0 that defines the phase-speed problem:
/// when the profile slope is negative the mode is solved at -k (its
/// Re-spectrum twin), so that (c, phi) satisfies
///   (d^2-k^2)^2 phi = i k R (y - c)(d^2-k^2) phi.
/// Requires a non-constant base flow for the lambda -> c map.
inline std::vector<OSEigenpair> converged_eigenpairs(const FlowConfig& cfg, int k,
                                                     const ChebGrid& grid,
                                                     const ChebGrid& refined,
                                                     double tol = kDefaultFilterTol) {
    if (k <= 0)
        throw std::invalid_argument("converged_eigenpairs: requires k > 0");
    const CouetteProfile profile = build_profile(cfg);
    if (profile.slope == 0.0)
        throw ZeroReynolds("converged_eigenpairs: constant base flow, c is undetermined");
    const int k_solve = profile.slope < 0.0 ? -k : k;
    const ModeSpectrum spec = converged_spectrum(cfg, k_solve, grid, refined, true, tol);
    const std::complex<double> i(0.0, 1.0);
    std::vector<OSEigenpair> pairs;
    pairs.reserve(spec.eigenvalues.size());
    for (std::size_t n = 0; n < spec.eigenvalues.size(); ++n) {
        OSEigenpair p;
        p.lambda = spec.eigenvalues[n];
        p.c = (i * p.lambda / static_cast<double>(k_solve) - profile.intercept) / profile.slope;
        p.phi = spec.eigenfunctions[n];
        pairs.push_back(std::move(p));
    }
    return pairs;
}

} // namespace couette
