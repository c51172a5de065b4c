#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "couette/chebyshev.hpp"

using namespace couette;
using Catch::Approx;
constexpr double pi = std::numbers::pi;

TEST_CASE("grid construction") {
    CHECK_THROWS_AS(make_grid(7), TooFewNodes);
    const ChebGrid g = make_grid(8);
    CHECK(g.y(0) == 0.0);
    CHECK(g.y(g.N - 1) == 1.0);
    for (int j = 1; j < g.N; ++j)
        CHECK(g.y(j) > g.y(j - 1));
}

TEST_CASE("differentiation is exact on low-degree polynomials") {
    const ChebGrid g = make_grid(32);
    SECTION("cubic") {
        Eigen::VectorXd f(g.N), ref(g.N);
        for (int j = 0; j < g.N; ++j) {
            f(j) = std::pow(g.y(j), 3);
            ref(j) = 3.0 * g.y(j) * g.y(j);
        }
        CHECK(((g.D1 * f) - ref).cwiseAbs().maxCoeff() < 1e-11);
    }
    SECTION("all monomials up to degree N-2") {
        for (int m = 0; m <= g.N - 2; ++m) {
            Eigen::VectorXd f(g.N), ref(g.N);
            for (int j = 0; j < g.N; ++j) {
                f(j) = std::pow(g.y(j), m);
                ref(j) = m == 0 ? 0.0 : m * std::pow(g.y(j), m - 1);
            }
            const double err = ((g.D1 * f) - ref).cwiseAbs().maxCoeff();
            CHECK(err < 1e-12 * std::max(1.0, ref.cwiseAbs().maxCoeff()));
        }
    }
    SECTION("second derivative on degree <= N-3") {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        Eigen::VectorXd coef(g.N - 2);
        for (int i = 0; i < coef.size(); ++i)
            coef(i) = u(rng);
        Eigen::VectorXd f = Eigen::VectorXd::Zero(g.N), ref = Eigen::VectorXd::Zero(g.N);
        for (int j = 0; j < g.N; ++j) {
            for (int m = 0; m < coef.size(); ++m) {
                f(j) += coef(m) * std::pow(g.y(j), m);
                if (m >= 2)
                    ref(j) += coef(m) * m * (m - 1) * std::pow(g.y(j), m - 2);
            }
        }
        const double scale = ref.cwiseAbs().maxCoeff();
        CHECK(((g.D2 * f) - ref).cwiseAbs().maxCoeff() < 1e-10 * scale);
    }
    SECTION("row sums of D1 vanish") {
        CHECK((g.D1 * Eigen::VectorXd::Ones(g.N)).cwiseAbs().maxCoeff() < 1e-12 * g.N * g.N);
    }
}

TEST_CASE("Clenshaw-Curtis quadrature") {
    const ChebGrid g = make_grid(32);
    SECTION("weights integrate constants exactly") {
        CHECK(g.w.sum() == Approx(1.0).margin(1e-13));
    }
    SECTION("beta-function polynomial") {
        Eigen::VectorXd f(g.N);
        for (int j = 0; j < g.N; ++j)
            f(j) = std::pow(g.y(j), 4) * std::pow(1.0 - g.y(j), 4);
        CHECK(integrate(g, f) == Approx(1.0 / 630.0).margin(1e-12));
    }
    SECTION("zero integrand") {
        const Eigen::VectorXd z = Eigen::VectorXd::Zero(g.N);
        CHECK(integrate(g, z) == 0.0);
    }
    SECTION("sine") {
        Eigen::VectorXd f(g.N);
        for (int j = 0; j < g.N; ++j)
            f(j) = std::sin(pi * g.y(j));
        CHECK(integrate(g, f) == Approx(2.0 / pi).margin(1e-12));
    }
    SECTION("size mismatch is rejected") {
        const Eigen::VectorXd bad = Eigen::VectorXd::Zero(g.N - 1);
        CHECK_THROWS_AS(integrate(g, bad), SizeMismatch);
    }
    SECTION("fundamental theorem of calculus") {
        Eigen::VectorXd f(g.N);
        for (int j = 0; j < g.N; ++j)
            f(j) = std::exp(g.y(j)) * std::cos(3.0 * g.y(j));
        const double f1 = f(g.N - 1), f0 = f(0);
        CHECK(integrate(g, Eigen::VectorXd(g.D1 * f)) == Approx(f1 - f0).margin(1e-10));
    }
}

TEST_CASE("barycentric interpolation") {
    const ChebGrid g = make_grid(32);
    SECTION("reproduces polynomials") {
        Eigen::VectorXd f(g.N);
        for (int j = 0; j < g.N; ++j)
            f(j) = g.y(j) * g.y(j);
        CHECK(interpolate(g, f, 0.5) == Approx(0.25).margin(1e-13));
    }
    SECTION("exact at nodes") {
        Eigen::VectorXd f = Eigen::VectorXd::Random(g.N);
        for (int j = 0; j < g.N; ++j)
            CHECK(interpolate(g, f, g.y(j)) == f(j));
    }
    SECTION("exponential reference") {
        Eigen::VectorXd f(g.N);
        for (int j = 0; j < g.N; ++j)
            f(j) = std::exp(g.y(j));
        CHECK(interpolate(g, f, 0.3) == Approx(std::exp(0.3)).margin(1e-10));
    }
    SECTION("out of domain is rejected") {
        Eigen::VectorXd f = Eigen::VectorXd::Zero(g.N);
        CHECK_THROWS_AS(interpolate(g, f, -0.01), OutOfDomain);
        CHECK_THROWS_AS(interpolate(g, f, 1.01), OutOfDomain);
    }
}
