#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "couette/errors.hpp"
#include "couette/flow_config.hpp"

namespace couette {

/// Which closed-form sufficient condition fired. I_* are the one-sided-slip
/// conditions, II_* the two-sided ones.
enum class CriterionId { I_i, I_ii, II_iii, II_iv };

/// The conditions are sufficient only: Unknown never asserts instability.
enum class Verdict { ProvenStable, Unknown };

struct CriterionResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<CriterionId> criterion; ///< set iff ProvenStable
    double margin = 0.0;                  ///< slack in the binding inequality
    std::vector<std::pair<std::string, double>> details;

    bool proven() const { return verdict == Verdict::ProvenStable; }
};

/// Best constant of the zero-mean Poincare inequality on (0,1), in either
/// the ||f|| <= C ||f'|| form (1/pi) or its square (1/pi^2). The two-sided
/// stability threshold is evaluated under a chosen convention because the
/// source analysis mixes them.
enum class PoincareConvention { NormForm, SquaredForm };

struct PoincareConstant {
    double value = 0.0;
    PoincareConvention convention = PoincareConvention::NormForm;
};

inline PoincareConstant poincare_constant(PoincareConvention conv) {
    const double pi = std::numbers::pi;
    return {conv == PoincareConvention::NormForm ? 1.0 / pi : 1.0 / (pi * pi), conv};
}

/// Unique root in (0,1) of 2*d^3 + d - 1 = 0, the breakpoint below which the
/// piecewise wavenumber bound loses its monotone branch.
inline double delta0() {
    double d = 0.6;
    for (int it = 0; it < 60; ++it) {
        const double f = 2.0 * d * d * d + d - 1.0;
        const double fp = 6.0 * d * d + 1.0;
        const double step = f / fp;
        d -= step;
        if (std::abs(step) < 1e-16)
            break;
    }
    return d;
}

/// Infimum over k > 0 (and supremum over the delta family) of the
/// wavenumber bound: 2*sqrt(2)*sqrt(h), h = 1 - (slip drop)/mu.
inline double bound_min_f(double h) {
    if (h <= 0.0)
        throw NonpositiveH("bound_min_f: requires h > 0");
    return 2.0 * std::sqrt(2.0) * std::sqrt(h);
}

/// Piecewise lower-bound function of the wavenumber, parametrized by
/// delta in (delta0, 1]; used by the tests to cross-check bound_min_f by
/// direct minimization.
inline double bound_f(double k, double delta, double h) {
    const double brk = (delta < 1.0)
                           ? std::sqrt(0.5) * delta / std::sqrt(1.0 - delta)
                           : std::numeric_limits<double>::infinity();
    if (k >= brk)
        return h / k + 2.0 * std::sqrt(2.0) * std::sqrt(1.0 - delta) * k * k;
    return h / k + 2.0 * delta * k;
}

/// One-sided slip criteria:
///   (i)  alpha >= 0 (dissipative wall), any mu > 0;
///   (ii) mu > -3*alpha > 0 and R1 * (1 + 3*alpha/mu)^(-1/2) < 2*sqrt(2).
inline CriterionResult check_case1(const FlowConfig& cfg) {
    if (cfg.flow_case != FlowCase::CaseI)
        throw std::invalid_argument("check_case1: config is not CaseI");
    const double reynolds = effective_reynolds(cfg); // validates the config
    const double two_sqrt2 = 2.0 * std::sqrt(2.0);

    CriterionResult res;
    res.details.emplace_back("mu", cfg.mu);
    res.details.emplace_back("alpha", cfg.alpha);
    res.details.emplace_back("reynolds", reynolds);
    if (cfg.alpha >= 0.0) {
        res.verdict = Verdict::ProvenStable;
        res.criterion = CriterionId::I_i;
        res.margin = std::numeric_limits<double>::infinity();
        return res;
    }
    const double mu_floor = -3.0 * cfg.alpha;
    res.details.emplace_back("mu_floor", mu_floor);
    if (!(cfg.mu > mu_floor)) {
        res.margin = cfg.mu - mu_floor;
        return res;
    }
    const double lhs = reynolds / std::sqrt(1.0 + 3.0 * cfg.alpha / cfg.mu);
    res.details.emplace_back("lhs", lhs);
    res.details.emplace_back("threshold", two_sqrt2);
    res.margin = two_sqrt2 - lhs;
    if (lhs < two_sqrt2) {
        res.verdict = Verdict::ProvenStable;
        res.criterion = CriterionId::I_ii;
    }
    return res;
}

/// Two-sided slip criteria:
///   (iii) alpha0 >= 0 and alpha1 >= 0, any mu > 0;
///   (iv)  mu above both viscosity floors and
///         R2 * (1 - (2*max|alpha_l| - alpha0 - alpha1)/mu)^(-1/2) < 2*sqrt(2).
inline CriterionResult check_case2(const FlowConfig& cfg,
                                   PoincareConvention conv = PoincareConvention::NormForm) {
    if (cfg.flow_case != FlowCase::CaseII)
        throw std::invalid_argument("check_case2: config is not CaseII");
    const double reynolds = effective_reynolds(cfg);
    const double two_sqrt2 = 2.0 * std::sqrt(2.0);

    CriterionResult res;
    res.details.emplace_back("mu", cfg.mu);
    res.details.emplace_back("alpha0", cfg.alpha0);
    res.details.emplace_back("alpha1", cfg.alpha1);
    res.details.emplace_back("reynolds", reynolds);
    if (cfg.alpha0 >= 0.0 && cfg.alpha1 >= 0.0) {
        res.verdict = Verdict::ProvenStable;
        res.criterion = CriterionId::II_iii;
        res.margin = std::numeric_limits<double>::infinity();
        return res;
    }
    const double cp = poincare_constant(conv).value;
    const double amax = std::max(std::abs(cfg.alpha0), std::abs(cfg.alpha1));
    const double asum = cfg.alpha0 + cfg.alpha1;
    const double drop = 2.0 * amax - asum;
    const double mu_floor = std::max((1.0 + cp) * amax - cp * asum, drop);
    res.details.emplace_back("poincare", cp);
    res.details.emplace_back("mu_floor", mu_floor);
    if (!(cfg.mu > mu_floor)) {
        res.margin = cfg.mu - mu_floor;
        return res;
    }
    const double lhs = reynolds / std::sqrt(1.0 - drop / cfg.mu);
    res.details.emplace_back("lhs", lhs);
    res.details.emplace_back("threshold", two_sqrt2);
    res.margin = two_sqrt2 - lhs;
    if (lhs < two_sqrt2) {
        res.verdict = Verdict::ProvenStable;
        res.criterion = CriterionId::II_iv;
    }
    return res;
}

inline CriterionResult check_criteria(const FlowConfig& cfg,
                                      PoincareConvention conv = PoincareConvention::NormForm) {
    return cfg.flow_case == FlowCase::CaseI ? check_case1(cfg) : check_case2(cfg, conv);
}

inline const char* to_string(CriterionId id) {
    switch (id) {
    case CriterionId::I_i: return "I_i";
    case CriterionId::I_ii: return "I_ii";
    case CriterionId::II_iii: return "II_iii";
    case CriterionId::II_iv: return "II_iv";
    }
    return "?";
}

} // namespace couette
