#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "couette/chebyshev.hpp"
#include "couette/errors.hpp"
#include "couette/mode_operators.hpp"

namespace couette {

/// Discrete squared-norm energy of one mode along a trajectory.
struct EvolveHistory {
    std::vector<double> t;
    std::vector<double> energy;
};

struct DecayFit {
    double rate = 0.0; ///< fitted decay rate of the squared-norm energy, positive for decay
    double r2 = 0.0;   ///< least-squares fit quality on log energy
    EvolveHistory history;
};

namespace detail {

/// Backward-Euler march of B dphi/dt = A phi on the BC-reduced system.
/// The fourth-order pencil is stiff, so an L-stable one-step scheme is used;
/// it also crushes under-resolved fast modes instead of letting them ring.
inline EvolveHistory march(const ReducedPencil& red, const ChebGrid& grid,
                           const Eigen::VectorXcd& phi0, double dt, double T) {
    if (!(dt > 0.0))
        throw std::invalid_argument("evolve_mode: dt must be positive");
    if (T < 100.0 * dt)
        throw std::invalid_argument("evolve_mode: need T >= 100*dt");
    if (phi0.size() != red.n_full)
        throw SizeMismatch("evolve_mode: initial data does not match grid");

    const auto ni = static_cast<Eigen::Index>(red.interior.size());
    Eigen::MatrixXcd S = red.standard ? Eigen::MatrixXcd::Identity(ni, ni) - dt * red.A
                                      : Eigen::MatrixXcd(red.B - dt * red.A);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(S);
    if (!lu.isInvertible())
        throw SingularStep("evolve_mode: implicit step matrix is singular");

    Eigen::VectorXcd x(ni);
    for (Eigen::Index j = 0; j < ni; ++j)
        x(j) = phi0(red.interior[j]);

    auto energy = [&](const Eigen::VectorXcd& xi) {
        const Eigen::VectorXcd full = red.extend(xi);
        return integrate(grid, Eigen::VectorXd(full.cwiseAbs2()));
    };

    EvolveHistory hist;
    const auto steps = static_cast<long>(std::llround(T / dt));
    hist.t.reserve(steps + 1);
    hist.energy.reserve(steps + 1);
    hist.t.push_back(0.0);
    hist.energy.push_back(energy(x));
    for (long n = 1; n <= steps; ++n) {
        x = red.standard ? lu.solve(x) : lu.solve(Eigen::VectorXcd(red.B * x));
        hist.t.push_back(n * dt);
        hist.energy.push_back(energy(x));
    }
    return hist;
}

} // namespace detail

inline EvolveHistory evolve_mode(const ModeOperator& op, const Eigen::VectorXcd& phi0,
                                 const ChebGrid& grid, double dt, double T) {
    return detail::march(reduce(op), grid, phi0, dt, T);
}

inline EvolveHistory evolve_mode(const K0Operator& op, const Eigen::VectorXcd& phi0,
                                 const ChebGrid& grid, double dt, double T) {
    return detail::march(reduce(op), grid, phi0, dt, T);
}

/// Least-squares slope of log energy over the trailing 80% of the horizon
/// (the leading 20% is treated as transient). The energy is a squared norm,
/// so a mode with Re lambda = m decays at fitted rate 2|m|.
inline DecayFit fit_decay(const EvolveHistory& hist) {
    if (hist.t.size() != hist.energy.size() || hist.t.empty())
        throw SizeMismatch("fit_decay: malformed history");
    const double t_min = 0.2 * hist.t.back();
    std::vector<double> ts, ls;
    for (std::size_t j = 0; j < hist.t.size(); ++j) {
        if (hist.t[j] < t_min)
            continue;
        if (!(hist.energy[j] > 0.0))
            throw NonPositiveEnergy("fit_decay: energy must stay positive in the fit window");
        ts.push_back(hist.t[j]);
        ls.push_back(std::log(hist.energy[j]));
    }
    if (ts.size() < 50)
        throw std::invalid_argument("fit_decay: need at least 50 post-transient samples");

    const double n = static_cast<double>(ts.size());
    double st = 0.0, sl = 0.0, stt = 0.0, stl = 0.0;
    for (std::size_t j = 0; j < ts.size(); ++j) {
        st += ts[j];
        sl += ls[j];
        stt += ts[j] * ts[j];
        stl += ts[j] * ls[j];
    }
    const double slope = (n * stl - st * sl) / (n * stt - st * st);
    const double mean_l = sl / n;

    double ss_res = 0.0, ss_tot = 0.0;
    const double intercept = mean_l - slope * (st / n);
    for (std::size_t j = 0; j < ts.size(); ++j) {
        const double pred = intercept + slope * ts[j];
        ss_res += (ls[j] - pred) * (ls[j] - pred);
        ss_tot += (ls[j] - mean_l) * (ls[j] - mean_l);
    }
    DecayFit fit;
    fit.rate = -slope;
    fit.r2 = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    fit.history = hist;
    return fit;
}

} // namespace couette
