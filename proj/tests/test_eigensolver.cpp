#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "couette/eigensolver.hpp"

using namespace couette;
using Catch::Approx;
using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

TEST_CASE("k = 0 spectra match the Sturm-Liouville closed forms") {
    const ChebGrid g = make_grid(64);
    SECTION("CaseI vorticity-free wall") {
        const auto spec = solve_mode(assemble_k0(FlowConfig::case_i(1.0, 0.0, 1.0, 0.0), g));
        for (int n = 0; n < 5; ++n) {
            const double exact = -std::pow((n + 0.5) * pi, 2);
            CHECK(std::abs(spec.eigenvalues[n].real() - exact) < 1e-8 * std::abs(exact));
            CHECK(std::abs(spec.eigenvalues[n].imag()) < 1e-8);
        }
    }
    SECTION("viscosity scales the spectrum linearly") {
        const auto s1 = solve_mode(assemble_k0(FlowConfig::case_i(1.0, 0.0, 1.0, 0.0), g));
        const auto s2 = solve_mode(assemble_k0(FlowConfig::case_i(2.0, 0.0, 1.0, 0.0), g));
        for (int n = 0; n < 10; ++n)
            CHECK(std::abs(s2.eigenvalues[n] - 2.0 * s1.eigenvalues[n]) <
                  1e-12 * std::abs(s1.eigenvalues[n]));
    }
    SECTION("CaseII Neumann walls on the zero-mean complement") {
        const auto spec = solve_mode(assemble_k0(FlowConfig::case_ii(1.0, 0.0, 0.0, 0.0, 0.0), g));
        CHECK(spec.eigenvalues.front().real() == Approx(-pi * pi).epsilon(1e-8));
        // the neutral constant mode was deflated, not reported
        CHECK(spec.eigenvalues.front().real() < -1.0);
    }
}

TEST_CASE("eigenfunctions come back normalized") {
    const ChebGrid g = make_grid(48);
    const auto spec =
        solve_mode(assemble_k0(FlowConfig::case_i(1.0, 0.0, 1.0, 0.0), g), true);
    REQUIRE(spec.eigenfunctions.size() == spec.eigenvalues.size());
    for (int n = 0; n < 5; ++n) {
        const auto& phi = spec.eigenfunctions[n];
        CHECK(phi.cwiseAbs().maxCoeff() == Approx(1.0).margin(1e-12));
        Eigen::Index j0 = 0;
        while (std::abs(phi(j0)) <= 1e-12)
            ++j0;
        CHECK(std::abs(std::arg(phi(j0))) < 1e-10);
    }
}

TEST_CASE("Galilean shift of the wall speeds shifts only Im lambda") {
    // Nearest matching rather than positional: high modes come in
    // near-degenerate Re pairs whose sort order is rounding-sensitive.
    const ChebGrid g = make_grid(48);
    const int k = 1;
    const auto s1 = solve_mode(assemble_os(FlowConfig::case_i(1.0, 0.0, 1.0, 1.0), k, g));
    const auto s2 = solve_mode(assemble_os(FlowConfig::case_i(1.0, 0.0, 2.0, 2.0), k, g));
    REQUIRE(s1.eigenvalues.size() == s2.eigenvalues.size());
    const cplx shift(0.0, -static_cast<double>(k) * 1.0);
    for (const cplx& ev : s1.eigenvalues) {
        double dmin = std::numeric_limits<double>::infinity();
        for (const cplx& ev2 : s2.eigenvalues)
            dmin = std::min(dmin, std::abs(ev2 - (ev + shift)));
        CHECK(dmin < 1e-9 * std::max(1.0, std::abs(ev)));
    }
}

TEST_CASE("constant base flow is spectrally stable") {
    const ChebGrid g = make_grid(48), gr = make_grid(72);
    const auto cfg = FlowConfig::case_i(0.7, 2.0, 1.0, 1.0); // a = b, R = 0
    for (int k = 1; k <= 3; ++k) {
        const auto spec = converged_spectrum(cfg, k, g, gr);
        REQUIRE(!spec.eigenvalues.empty());
        for (const cplx& ev : spec.eigenvalues)
            CHECK(ev.real() < 0.0);
    }
}

TEST_CASE("spurious-mode filter") {
    ModeSpectrum a;
    a.k = 1;
    a.eigenvalues = {cplx(-1.0, 2.0), cplx(-3.0, 0.0), cplx(1e12, 0.0)};
    a.converged = {true, true, true};
    SECTION("identical inputs survive unchanged except the cutoff") {
        const auto out = filter_spurious(a, a, 1e-6);
        REQUIRE(out.eigenvalues.size() == 2);
        CHECK(out.eigenvalues[0] == a.eigenvalues[0]);
        CHECK(out.eigenvalues[1] == a.eigenvalues[1]);
    }
    SECTION("unmatched entries are dropped") {
        ModeSpectrum b = a;
        b.eigenvalues = {cplx(-1.0, 2.0), cplx(-40.0, 0.0)};
        const auto out = filter_spurious(a, b, 1e-6);
        REQUIRE(out.eigenvalues.size() == 1);
        CHECK(out.eigenvalues[0] == cplx(-1.0, 2.0));
    }
    SECTION("closed-form modes survive resolution refinement") {
        const ChebGrid g48 = make_grid(48), g64 = make_grid(64);
        const auto cfg = FlowConfig::case_i(1.0, 0.0, 1.0, 0.0);
        const auto out = filter_spurious(solve_mode(assemble_k0(cfg, g48)),
                                         solve_mode(assemble_k0(cfg, g64)), 1e-6);
        REQUIRE(out.eigenvalues.size() >= 5);
        for (int n = 0; n < 5; ++n) {
            const double exact = -std::pow((n + 0.5) * pi, 2);
            CHECK(std::abs(out.eigenvalues[n].real() - exact) < 1e-9 * std::abs(exact));
        }
    }
}

TEST_CASE("spectral abscissa scans") {
    SECTION("dissipative one-sided slip is stable") {
        const auto rep =
            spectral_abscissa(FlowConfig::case_i(1.0, 1.0, 2.0, 0.0), 8, 96);
        CHECK(rep.m < 0.0);
        CHECK(rep.per_k.size() == 9);
        double best = rep.per_k.front().second;
        for (const auto& [k, mk] : rep.per_k)
            best = std::max(best, mk);
        CHECK(rep.m == best);
    }
    SECTION("absorptive k = 0 bound") {
        const ChebGrid g = make_grid(64), gr = make_grid(96);
        const auto cfg = FlowConfig::case_i(1.0, -0.1, 1.0, 0.0);
        const auto spec = converged_spectrum(cfg, 0, g, gr);
        REQUIRE(!spec.eigenvalues.empty());
        CHECK(spec.eigenvalues.front().real() <= -(1.0 - 0.3) + 1e-8);
    }
    SECTION("two-sided vorticity-free trivial flow") {
        const auto rep =
            spectral_abscissa(FlowConfig::case_ii(1.0, 0.0, 0.0, 0.0, 0.0), 4, 64);
        CHECK(rep.m <= -1.0);
    }
    SECTION("abscissa is Galilean invariant") {
        const auto r1 = spectral_abscissa(FlowConfig::case_i(1.0, 0.5, 2.0, 0.0), 3, 48);
        const auto r2 = spectral_abscissa(FlowConfig::case_i(1.0, 0.5, 3.0, 1.0), 3, 48);
        for (std::size_t j = 0; j < r1.per_k.size(); ++j)
            CHECK(r1.per_k[j].second == Approx(r2.per_k[j].second).margin(1e-8));
    }
}

TEST_CASE("spectrum symmetry under k -> -k") {
    const ChebGrid g = make_grid(64), gr = make_grid(96);
    const auto cfg = FlowConfig::case_i(1.0, -0.1, 1.0, 0.0);
    const auto plus = converged_spectrum(cfg, 2, g, gr);
    const auto minus = converged_spectrum(cfg, -2, g, gr);
    REQUIRE(plus.eigenvalues.size() == minus.eigenvalues.size());
    for (std::size_t n = 0; n < plus.eigenvalues.size(); ++n)
        CHECK(plus.eigenvalues[n].real() ==
              Approx(minus.eigenvalues[n].real()).margin(1e-10));
}

TEST_CASE("resolution robustness of the abscissa") {
    const auto cfg = FlowConfig::case_i(1.0, -0.1, 1.0, 0.0);
    const auto r1 = spectral_abscissa(cfg, 3, 64);
    const auto r2 = spectral_abscissa(cfg, 3, 96);
    CHECK(r1.m == Approx(r2.m).margin(1e-7));
}
