#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "couette/errors.hpp"

namespace couette {

/// Boundary-condition layout of the channel.
///
/// CaseI:  no-slip wall at y=1 moving with speed a, Navier-slip wall at y=0
///         (coefficient alpha) moving with speed b.
/// CaseII: Navier-slip walls at both ends, coefficients alpha1 (top, speed a)
///         and alpha0 (bottom, speed b).
enum class FlowCase { CaseI, CaseII };

/// Full physical parameter set. All quantities are nondimensional; the
/// channel height is 1 and the streamwise period is 2*pi, so wavenumbers
/// are integers.
struct FlowConfig {
    FlowCase flow_case = FlowCase::CaseI;
    double mu = 1.0;     ///< viscosity, > 0
    double alpha = 0.0;  ///< slip coefficient (CaseI only)
    double alpha0 = 0.0; ///< bottom slip coefficient (CaseII only)
    double alpha1 = 0.0; ///< top slip coefficient (CaseII only)
    double a = 0.0;      ///< top wall speed
    double b = 0.0;      ///< bottom wall speed

    static FlowConfig case_i(double mu, double alpha, double a, double b) {
        FlowConfig c;
        c.flow_case = FlowCase::CaseI;
        c.mu = mu;
        c.alpha = alpha;
        c.a = a;
        c.b = b;
        return c;
    }

    static FlowConfig case_ii(double mu, double alpha0, double alpha1, double a, double b) {
        FlowConfig c;
        c.flow_case = FlowCase::CaseII;
        c.mu = mu;
        c.alpha0 = alpha0;
        c.alpha1 = alpha1;
        c.a = a;
        c.b = b;
        return c;
    }

    /// Denominator of the base-profile formulas. Zero is a degenerate
    /// parameter point, except for the vorticity-free walls alpha0 = alpha1
    /// = 0 where the wall speeds drop out of the problem and the steady
    /// state is a constant (or trivial) flow.
    double profile_denominator() const {
        return flow_case == FlowCase::CaseI ? mu + alpha
                                            : mu * (alpha0 + alpha1) + alpha0 * alpha1;
    }

    bool vorticity_free_walls() const {
        return flow_case == FlowCase::CaseII && alpha0 == 0.0 && alpha1 == 0.0;
    }

    void validate() const {
        if (!(mu > 0.0))
            throw std::invalid_argument("FlowConfig: viscosity mu must be positive");
        if (profile_denominator() == 0.0 && !vorticity_free_walls())
            throw DegenerateDenominator("FlowConfig: base-profile denominator is zero");
    }
};

/// Affine base flow U(y) = slope*y + intercept on y in [0,1].
struct CouetteProfile {
    double slope = 0.0;
    double intercept = 0.0;
    double operator()(double y) const { return slope * y + intercept; }
};

/// Per-wavenumber parameters derived from a FlowConfig.
struct ModeParams {
    int k = 0;
    double reynolds = 0.0; ///< effective Reynolds number, >= 0
    double xi = 0.0;       ///< k * alpha * (a - b), or the two-wall analogue
};

inline CouetteProfile build_profile(const FlowConfig& cfg) {
    cfg.validate();
    const double d = cfg.profile_denominator();
    CouetteProfile p;
    if (cfg.vorticity_free_walls()) {
        // Both Navier conditions degenerate to zero wall vorticity; every
        // constant flow is steady. Matching wall speeds select U = a, any
        // mismatch the trivial state U = 0.
        p.slope = 0.0;
        p.intercept = cfg.a == cfg.b ? cfg.a : 0.0;
        return p;
    }
    if (cfg.flow_case == FlowCase::CaseI) {
        p.slope = cfg.alpha * (cfg.a - cfg.b) / d;
        p.intercept = (cfg.mu * cfg.a + cfg.alpha * cfg.b) / d;
    } else {
        p.slope = cfg.alpha0 * cfg.alpha1 * (cfg.a - cfg.b) / d;
        p.intercept = (cfg.mu * (cfg.alpha1 * cfg.a + cfg.alpha0 * cfg.b) +
                       cfg.alpha0 * cfg.alpha1 * cfg.b) /
                      d;
    }
    return p;
}

/// Effective Reynolds number |slope| / mu. Zero iff the base flow is constant.
inline double effective_reynolds(const FlowConfig& cfg) {
    return std::abs(build_profile(cfg).slope) / cfg.mu;
}

inline ModeParams mode_params(const FlowConfig& cfg, int k) {
    ModeParams m;
    m.k = k;
    m.reynolds = effective_reynolds(cfg);
    m.xi = cfg.flow_case == FlowCase::CaseI
               ? k * cfg.alpha * (cfg.a - cfg.b)
               : k * cfg.alpha0 * cfg.alpha1 * (cfg.a - cfg.b);
    return m;
}

/// Change of variables between the operator eigenvalue lambda and the
/// Orr-Sommerfeld phase speed c:
///   lambda = -i*k*(|slope| * c + intercept),
/// so Re(lambda) = k * mu * R * Im(c).
inline std::complex<double> lambda_from_c(const FlowConfig& cfg, int k, std::complex<double> c) {
    if (k == 0)
        throw ZeroWavenumber("lambda_from_c: k must be nonzero");
    const CouetteProfile p = build_profile(cfg);
    const std::complex<double> i(0.0, 1.0);
    return -i * static_cast<double>(k) * (std::abs(p.slope) * c + p.intercept);
}

/// Inverse of lambda_from_c. Requires a non-constant base flow.
inline std::complex<double> c_from_lambda(const FlowConfig& cfg, int k, std::complex<double> lambda) {
    if (k == 0)
        throw ZeroWavenumber("c_from_lambda: k must be nonzero");
    const CouetteProfile p = build_profile(cfg);
    if (p.slope == 0.0)
        throw ZeroReynolds("c_from_lambda: constant base flow, c is undetermined");
    const std::complex<double> i(0.0, 1.0);
    return (i * lambda / static_cast<double>(k) - p.intercept) / std::abs(p.slope);
}

} // namespace couette
