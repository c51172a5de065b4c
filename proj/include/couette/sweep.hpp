#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "couette/criteria.hpp"
#include "couette/eigensolver.hpp"
#include "couette/flow_config.hpp"

namespace couette {

enum class SweepParam { Mu, Alpha, Alpha0, Alpha1, AMinusB };

inline const char* to_string(SweepParam p) {
    switch (p) {
    case SweepParam::Mu: return "mu";
    case SweepParam::Alpha: return "alpha";
    case SweepParam::Alpha0: return "alpha0";
    case SweepParam::Alpha1: return "alpha1";
    case SweepParam::AMinusB: return "a_minus_b";
    }
    return "?";
}

struct AxisSpec {
    SweepParam param = SweepParam::Alpha;
    double lo = 0.0, hi = 0.0;
    int count = 2;
};

/// Cartesian parameter grid: up to three swept axes, fixed values for the
/// rest, and the solver settings shared by every point.
struct SweepGrid {
    FlowCase flow_case = FlowCase::CaseI;
    std::vector<AxisSpec> axes;
    double mu = 1.0;
    double alpha = 0.0, alpha0 = 0.0, alpha1 = 0.0;
    double a_minus_b = 0.0;
    int kmax = 16;
    int N = 96;
    PoincareConvention convention = PoincareConvention::NormForm;
    double filter_tol = kDefaultFilterTol;
    std::size_t budget = 100000;

    std::size_t total_points() const {
        std::size_t n = 1;
        for (const AxisSpec& ax : axes)
            n *= static_cast<std::size_t>(ax.count);
        return n;
    }

    void validate() const {
        if (axes.empty() || axes.size() > 3)
            throw std::invalid_argument("SweepGrid: need 1 to 3 axes");
        for (const AxisSpec& ax : axes) {
            if (ax.count < 2)
                throw std::invalid_argument("SweepGrid: axis counts must be >= 2");
            const bool case_i = flow_case == FlowCase::CaseI;
            if (case_i && (ax.param == SweepParam::Alpha0 || ax.param == SweepParam::Alpha1))
                throw std::invalid_argument("SweepGrid: alpha0/alpha1 are CaseII parameters");
            if (!case_i && ax.param == SweepParam::Alpha)
                throw std::invalid_argument("SweepGrid: alpha is a CaseI parameter");
        }
        if (total_points() > budget)
            throw std::invalid_argument("SweepGrid: grid exceeds the point budget");
        if (!(filter_tol > 0.0))
            throw std::invalid_argument("SweepGrid: filter tolerance must be positive");
    }
};

enum class SweepPolicy { CriteriaOnly, Full, EigenOnUnknown };
enum class PointClass { ProvenStable, NumericallyStable, NumericallyUnstable };

inline const char* to_string(PointClass c) {
    switch (c) {
    case PointClass::ProvenStable: return "ProvenStable";
    case PointClass::NumericallyStable: return "NumericallyStable";
    case PointClass::NumericallyUnstable: return "NumericallyUnstable";
    }
    return "?";
}

struct SweepRecord {
    std::vector<double> coords; ///< swept-axis values, axis order
    FlowConfig config;          ///< realized parameter point (a = a-b, b = 0)
    std::optional<CriterionResult> criterion;
    std::optional<AbscissaReport> abscissa;
    std::optional<PointClass> classification;
    std::string error;                ///< nonempty when the point failed
    bool soundness_violation = false; ///< ProvenStable with computed m >= 0
};

namespace detail {

inline FlowConfig config_at(const SweepGrid& grid, const std::vector<double>& coords) {
    double mu = grid.mu, alpha = grid.alpha, alpha0 = grid.alpha0, alpha1 = grid.alpha1;
    double amb = grid.a_minus_b;
    for (std::size_t i = 0; i < grid.axes.size(); ++i) {
        switch (grid.axes[i].param) {
        case SweepParam::Mu: mu = coords[i]; break;
        case SweepParam::Alpha: alpha = coords[i]; break;
        case SweepParam::Alpha0: alpha0 = coords[i]; break;
        case SweepParam::Alpha1: alpha1 = coords[i]; break;
        case SweepParam::AMinusB: amb = coords[i]; break;
        }
    }
    return grid.flow_case == FlowCase::CaseI ? FlowConfig::case_i(mu, alpha, amb, 0.0)
                                             : FlowConfig::case_ii(mu, alpha0, alpha1, amb, 0.0);
}

inline SweepRecord eval_point(const SweepGrid& grid, SweepPolicy policy, std::size_t index) {
    SweepRecord rec;
    rec.coords.resize(grid.axes.size());
    std::size_t rem = index;
    for (std::size_t i = grid.axes.size(); i-- > 0;) {
        const AxisSpec& ax = grid.axes[i];
        const std::size_t j = rem % ax.count;
        rem /= ax.count;
        rec.coords[i] = ax.lo + (ax.hi - ax.lo) * static_cast<double>(j) / (ax.count - 1);
    }
    rec.config = config_at(grid, rec.coords);
    try {
        rec.criterion = check_criteria(rec.config, grid.convention);
        const bool want_eigen =
            policy == SweepPolicy::Full ||
            (policy == SweepPolicy::EigenOnUnknown && !rec.criterion->proven());
        if (want_eigen)
            rec.abscissa = spectral_abscissa(rec.config, grid.kmax, grid.N, grid.filter_tol);
        if (rec.criterion->proven()) {
            rec.classification = PointClass::ProvenStable;
            if (rec.abscissa && !(rec.abscissa->m < 0.0))
                rec.soundness_violation = true;
        } else if (rec.abscissa) {
            rec.classification = rec.abscissa->m < 0.0 ? PointClass::NumericallyStable
                                                       : PointClass::NumericallyUnstable;
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

} // namespace detail

/// Evaluate every grid point under the given policy. Points are independent,
/// so the work is farmed out to a small pool and merged by index; the record
/// order (row-major over the axes) does not depend on the worker count.
inline std::vector<SweepRecord> run_sweep(const SweepGrid& grid, SweepPolicy policy,
                                          unsigned workers = 0) {
    grid.validate();
    const std::size_t total = grid.total_points();
    std::vector<SweepRecord> records(total);
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(total));

    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total)
                break;
            records[i] = detail::eval_point(grid, policy, i);
        }
    };
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(body);
        for (std::thread& th : pool)
            th.join();
    }
    return records;
}

} // namespace couette
