#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "couette/chebyshev.hpp"
#include "couette/errors.hpp"
#include "couette/flow_config.hpp"

namespace couette {

/// Discrete Orr-Sommerfeld pencil for one nonzero wavenumber:
///   A phi = lambda * B phi,
/// with A = mu*(D^2-k^2)^2 - i*k*U(y)*(D^2-k^2) and B = (D^2-k^2) on
/// interior rows. Boundary conditions are enforced by row replacement in A
/// (the matching B rows are zero):
///   CaseI : phi(0) = phi(1) = phi'(1) = 0,  phi''(0) = (alpha/mu)  phi'(0)
///   CaseII: phi(0) = phi(1) = 0,            phi''(0) = (alpha0/mu) phi'(0),
///                                           phi''(1) = -(alpha1/mu) phi'(1)
/// The U'' term of the general Orr-Sommerfeld operator is absent because the
/// base profile is affine.
struct ModeOperator {
    int k = 0;
    FlowCase flow_case = FlowCase::CaseI;
    int N = 0;
    Eigen::MatrixXcd A, B;
    std::array<int, 4> bc_rows{};
};

/// Discrete k=0 problem lambda*u = mu*u'' with Robin/Dirichlet rows:
///   CaseI : mu u'(0) - alpha  u(0) = 0,  u(1) = 0
///   CaseII: mu u'(0) - alpha0 u(0) = 0,  mu u'(1) + alpha1 u(1) = 0
/// With CaseII and alpha0 = alpha1 = 0 the constant function is a neutral
/// direction (the tangent along the family of Couette flows); the solver
/// removes it, reporting the spectrum on the zero-mean complement.
struct K0Operator {
    FlowCase flow_case = FlowCase::CaseI;
    int N = 0;
    Eigen::MatrixXcd M;
    std::array<int, 2> bc_rows{};
    bool project_zero_mean = false;
};

inline ModeOperator assemble_os(const FlowConfig& cfg, int k, const ChebGrid& grid) {
    if (k == 0)
        throw ZeroWavenumber("assemble_os: k must be nonzero (use assemble_k0)");
    const CouetteProfile U = build_profile(cfg);
    const int N = grid.N;
    const double k2 = static_cast<double>(k) * k;
    const std::complex<double> i(0.0, 1.0);

    Eigen::MatrixXd lap = grid.D2 - k2 * Eigen::MatrixXd::Identity(N, N);
    Eigen::MatrixXd bilap = lap * lap;

    ModeOperator op;
    op.k = k;
    op.flow_case = cfg.flow_case;
    op.N = N;
    op.bc_rows = {0, 1, N - 2, N - 1};
    op.A = cfg.mu * bilap.cast<std::complex<double>>();
    for (int r = 0; r < N; ++r)
        op.A.row(r) -= i * static_cast<double>(k) * U(grid.y(r)) *
                       lap.row(r).cast<std::complex<double>>();
    op.B = lap.cast<std::complex<double>>();

    op.A.row(0).setZero();
    op.A(0, 0) = 1.0; // phi(0) = 0
    op.A.row(N - 1).setZero();
    op.A(N - 1, N - 1) = 1.0; // phi(1) = 0
    if (cfg.flow_case == FlowCase::CaseI) {
        op.A.row(1) = (grid.D2.row(0) - (cfg.alpha / cfg.mu) * grid.D1.row(0))
                          .cast<std::complex<double>>();
        op.A.row(N - 2) = grid.D1.row(N - 1).cast<std::complex<double>>();
    } else {
        op.A.row(1) = (grid.D2.row(0) - (cfg.alpha0 / cfg.mu) * grid.D1.row(0))
                          .cast<std::complex<double>>();
        op.A.row(N - 2) = (grid.D2.row(N - 1) + (cfg.alpha1 / cfg.mu) * grid.D1.row(N - 1))
                              .cast<std::complex<double>>();
    }
    for (int r : op.bc_rows)
        op.B.row(r).setZero();
    return op;
}

inline K0Operator assemble_k0(const FlowConfig& cfg, const ChebGrid& grid) {
    cfg.validate();
    const int N = grid.N;
    K0Operator op;
    op.flow_case = cfg.flow_case;
    op.N = N;
    op.bc_rows = {0, N - 1};
    op.M = cfg.mu * grid.D2.cast<std::complex<double>>();
    if (cfg.flow_case == FlowCase::CaseI) {
        op.M.row(0) = (cfg.mu * grid.D1.row(0)).cast<std::complex<double>>();
        op.M(0, 0) -= cfg.alpha;
        op.M.row(N - 1).setZero();
        op.M(N - 1, N - 1) = 1.0;
    } else {
        op.M.row(0) = (cfg.mu * grid.D1.row(0)).cast<std::complex<double>>();
        op.M(0, 0) -= cfg.alpha0;
        op.M.row(N - 1) = (cfg.mu * grid.D1.row(N - 1)).cast<std::complex<double>>();
        op.M(N - 1, N - 1) += cfg.alpha1;
        op.project_zero_mean = (cfg.alpha0 == 0.0 && cfg.alpha1 == 0.0);
    }
    return op;
}

/// Boundary-condition rows eliminated against the interior unknowns
/// (Schur-style reduction). The boundary values of any interior vector are
/// recovered as lift * x_interior, which removes the zero rows of the mass
/// matrix and with them the infinite generalized eigenvalues.
struct ReducedPencil {
    Eigen::MatrixXcd A;     ///< reduced stiffness, ni x ni
    Eigen::MatrixXcd B;     ///< reduced mass; identity when `standard`
    Eigen::MatrixXcd lift;  ///< nb x ni boundary reconstruction
    std::vector<int> interior, boundary;
    int n_full = 0;
    bool standard = false;  ///< true for the k=0 problems (B = I)

    Eigen::VectorXcd extend(const Eigen::VectorXcd& xi) const {
        Eigen::VectorXcd full(n_full);
        const Eigen::VectorXcd xb = lift * xi;
        for (std::size_t j = 0; j < interior.size(); ++j)
            full(interior[j]) = xi(j);
        for (std::size_t j = 0; j < boundary.size(); ++j)
            full(boundary[j]) = xb(j);
        return full;
    }
};

namespace detail {

template <std::size_t NB>
inline ReducedPencil reduce_rows(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd* B,
                                 const std::array<int, NB>& bc_rows, int N) {
    ReducedPencil red;
    red.n_full = N;
    red.boundary.assign(bc_rows.begin(), bc_rows.end());
    std::vector<bool> is_bc(N, false);
    for (int r : bc_rows)
        is_bc[r] = true;
    for (int j = 0; j < N; ++j)
        if (!is_bc[j])
            red.interior.push_back(j);

    Eigen::MatrixXcd Cb(NB, NB), Ci(NB, red.interior.size());
    for (std::size_t r = 0; r < NB; ++r) {
        for (std::size_t c = 0; c < NB; ++c)
            Cb(r, c) = A(bc_rows[r], red.boundary[c]);
        for (std::size_t c = 0; c < red.interior.size(); ++c)
            Ci(r, c) = A(bc_rows[r], red.interior[c]);
    }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(Cb);
    if (!lu.isInvertible())
        throw SolverFailure("reduce: boundary-condition rows are singular");
    red.lift = -lu.solve(Ci);

    const auto ni = static_cast<Eigen::Index>(red.interior.size());
    auto shrink = [&](const Eigen::MatrixXcd& M) {
        Eigen::MatrixXcd Mii(ni, ni), Mib(ni, NB);
        for (Eigen::Index r = 0; r < ni; ++r) {
            for (Eigen::Index c = 0; c < ni; ++c)
                Mii(r, c) = M(red.interior[r], red.interior[c]);
            for (std::size_t c = 0; c < NB; ++c)
                Mib(r, c) = M(red.interior[r], red.boundary[c]);
        }
        return Eigen::MatrixXcd(Mii + Mib * red.lift);
    };
    red.A = shrink(A);
    if (B) {
        red.B = shrink(*B);
    } else {
        red.standard = true;
    }
    return red;
}

} // namespace detail

inline ReducedPencil reduce(const ModeOperator& op) {
    return detail::reduce_rows(op.A, &op.B, op.bc_rows, op.N);
}

inline ReducedPencil reduce(const K0Operator& op) {
    return detail::reduce_rows(op.M, nullptr, op.bc_rows, op.N);
}

} // namespace couette
