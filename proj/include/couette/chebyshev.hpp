#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "couette/errors.hpp"

namespace couette {

/// Chebyshev-Gauss-Lobatto collocation grid on [0,1].
///
/// Nodes are stored in ascending order, y[0] = 0 and y[N-1] = 1, so
/// boundary rows sit at indices 0 and N-1. D1..D4 are dense nodal
/// differentiation matrices; w are Clenshaw-Curtis quadrature weights
/// (sum = 1, the length of the interval). Immutable after construction.
struct ChebGrid {
    int N = 0;
    Eigen::VectorXd y;
    Eigen::MatrixXd D1, D2, D3, D4;
    Eigen::VectorXd w;
};

/// Build an N-node grid. The first-derivative matrix uses the negative-sum
/// trick for its diagonal; higher derivatives are powers of D1, which keeps
/// rounding under control for N up to a few hundred.
inline ChebGrid make_grid(int N) {
    if (N < 8)
        throw TooFewNodes("make_grid: need at least 8 nodes");
    const int n = N - 1;
    const double pi = std::numbers::pi;

    ChebGrid g;
    g.N = N;
    g.y.resize(N);
    Eigen::VectorXd x(N);
    for (int j = 0; j < N; ++j) {
        x(j) = std::cos(j * pi / n);
        g.y(j) = 0.5 * (1.0 - x(j));
    }
    g.y(0) = 0.0;
    g.y(n) = 1.0;

    // Differentiation matrix on the standard [-1,1] nodes, then the chain
    // rule for y = (1-x)/2 gives d/dy = -2 d/dx.
    Eigen::MatrixXd Dx(N, N);
    auto endpoint_weight = [n](int j) { return (j == 0 || j == n) ? 2.0 : 1.0; };
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            if (i == j)
                continue;
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            Dx(i, j) = endpoint_weight(i) / endpoint_weight(j) * sign / (x(i) - x(j));
        }
    }
    for (int i = 0; i < N; ++i) {
        double s = 0.0;
        for (int j = 0; j < N; ++j)
            if (j != i)
                s += Dx(i, j);
        Dx(i, i) = -s; // rows of D1 annihilate constants exactly
    }
    g.D1 = -2.0 * Dx;
    g.D2 = g.D1 * g.D1;
    g.D3 = g.D2 * g.D1;
    g.D4 = g.D3 * g.D1;

    // Clenshaw-Curtis weights on [-1,1], halved for the unit interval.
    g.w.resize(N);
    if (n % 2 == 0) {
        g.w(0) = g.w(n) = 1.0 / (n * n - 1.0);
    } else {
        g.w(0) = g.w(n) = 1.0 / (n * static_cast<double>(n));
    }
    for (int j = 1; j < n; ++j) {
        const double theta = j * pi / n;
        double v = 1.0;
        for (int k = 1; k <= (n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2); ++k)
            v -= 2.0 * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
        if (n % 2 == 0)
            v -= std::cos(n * theta) / (n * n - 1.0);
        g.w(j) = 2.0 * v / n;
    }
    g.w *= 0.5;
    return g;
}

/// Clenshaw-Curtis value of the integral over [0,1] of nodal samples.
inline std::complex<double> integrate(const ChebGrid& g, const Eigen::VectorXcd& f) {
    if (f.size() != g.N)
        throw SizeMismatch("integrate: sample count does not match grid");
    std::complex<double> s(0.0, 0.0);
    for (int j = 0; j < g.N; ++j)
        s += g.w(j) * f(j);
    return s;
}

inline double integrate(const ChebGrid& g, const Eigen::VectorXd& f) {
    if (f.size() != g.N)
        throw SizeMismatch("integrate: sample count does not match grid");
    return g.w.dot(f);
}

/// Barycentric interpolation of nodal samples at a point of [0,1].
/// Exact at the nodes.
inline std::complex<double> interpolate(const ChebGrid& g, const Eigen::VectorXcd& f, double y) {
    if (f.size() != g.N)
        throw SizeMismatch("interpolate: sample count does not match grid");
    if (y < 0.0 || y > 1.0)
        throw OutOfDomain("interpolate: point outside [0,1]");
    std::complex<double> num(0.0, 0.0);
    double den = 0.0;
    for (int j = 0; j < g.N; ++j) {
        const double dy = y - g.y(j);
        if (dy == 0.0)
            return f(j);
        double bw = (j % 2 == 0) ? 1.0 : -1.0;
        if (j == 0 || j == g.N - 1)
            bw *= 0.5;
        const double c = bw / dy;
        num += c * f(j);
        den += c;
    }
    return num / den;
}

inline double interpolate(const ChebGrid& g, const Eigen::VectorXd& f, double y) {
    return interpolate(g, Eigen::VectorXcd(f.cast<std::complex<double>>()), y).real();
}

} // namespace couette
