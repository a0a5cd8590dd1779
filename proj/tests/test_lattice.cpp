#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "exciton/constants.hpp"
#include "exciton/lattice.hpp"

using namespace exciton;

namespace {

LatticeParams defaults() { return {}; }

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("parameter validation") {
    LatticeParams p = defaults();
    CHECK_NOTHROW(p.validate());

    p.transition_energy_ev = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = defaults();
    p.transition_energy_ev = NAN;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = defaults();
    p.lattice_constant_angstrom = -2.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = defaults();
    p.dipole_e_angstrom = -1e-9;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = defaults();
    p.theta_rad = -0.1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = defaults();
    p.theta_rad = constants::pi + 0.1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = defaults();
    p.neighbor_cutoff = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("dipole coupling against direct evaluation") {
    LatticeParams p = defaults();

    // oracle: K mu^2 / L^3 (1 - 3 cos^2), K = 14.399645 eV A
    p.theta_rad = 0.0;
    const double parallel = 14.399645 / 1e9 * (1.0 - 3.0);
    CHECK(dipole_coupling_ev(p, 1000.0) == doctest::Approx(parallel).epsilon(1e-14));
    CHECK(dipole_coupling_ev(p, 1000.0) == doctest::Approx(-2.87993e-8).epsilon(1e-5));

    p.theta_rad = 0.5 * constants::pi;
    CHECK(dipole_coupling_ev(p, 1000.0) == doctest::Approx(14.399645 / 1e9).epsilon(1e-14));
    CHECK(dipole_coupling_ev(p, 1000.0) == doctest::Approx(1.43996e-8).epsilon(1e-5));

    // vanishes at the magic angle up to the rounding of cos^2
    p.theta_rad = magic_angle_rad();
    const double scale = 14.399645 / 1e9;
    CHECK(std::fabs(dipole_coupling_ev(p, 1000.0)) <= 1e-14 * scale);

    // 1/L^3 falloff
    p.theta_rad = 0.0;
    CHECK(dipole_coupling_ev(p, 500.0)
          == doctest::Approx(8.0 * dipole_coupling_ev(p, 1000.0)).epsilon(1e-14));
}

TEST_CASE("dipole coupling rejects bad separations") {
    const LatticeParams p = defaults();
    CHECK_THROWS_AS(dipole_coupling_ev(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(dipole_coupling_ev(p, -3.0), std::domain_error);
    CHECK_THROWS_AS(dipole_coupling_ev(p, NAN), std::domain_error);
    CHECK_THROWS_AS(dipole_coupling_ev(p, INFINITY), std::domain_error);
}

TEST_CASE("dispersion at the band center") {
    LatticeParams p = defaults();
    // E_a + 2 hbar J(0)
    const double expected = 1.0 + 2.0 * (14.399645 / 1e9 * (1.0 - 3.0));
    CHECK(dispersion(p, 0.0).energy_ev == doctest::Approx(expected).epsilon(1e-15));
    CHECK(dispersion(p, 0.0).energy_ev == doctest::Approx(1.0 - 5.75986e-8).epsilon(1e-13));
}

TEST_CASE("dispersion degenerate cases") {
    LatticeParams p = defaults();
    p.dipole_e_angstrom = 0.0;
    for (const double ka : {0.0, 0.3, 1.5, constants::pi})
        CHECK(dispersion(p, ka).energy_ev == 1.0);

    // cos(pi/2) ~ 6e-17 shifts the energy below half an ulp of 1
    p = defaults();
    CHECK(dispersion(p, 0.5 * constants::pi).energy_ev == 1.0);
}

TEST_CASE("dispersion domain") {
    const LatticeParams p = defaults();
    CHECK_NOTHROW(dispersion(p, constants::pi));
    CHECK_NOTHROW(dispersion(p, -constants::pi));
    CHECK_THROWS_AS(dispersion(p, 3.2), std::domain_error);
    CHECK_THROWS_AS(dispersion(p, -3.2), std::domain_error);
    CHECK_THROWS_AS(dispersion(p, NAN), std::domain_error);
}

TEST_CASE("dispersion is even in ka, bit for bit") {
    const LatticeParams p = defaults();
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> ka_dist(0.0, constants::pi);
    for (int i = 0; i < 2000; ++i) {
        const double ka = ka_dist(rng);
        CHECK(dispersion(p, ka).energy_ev == dispersion(p, -ka).energy_ev);
    }
}

TEST_CASE("theta mirror symmetry") {
    std::mt19937 rng(78);
    std::uniform_real_distribution<double> theta_hi(0.5 * constants::pi, constants::pi);
    std::uniform_real_distribution<double> ka_dist(0.0, constants::pi);
    for (int i = 0; i < 2000; ++i) {
        // For theta >= pi/2 the mirror pi - theta is exact, so the fold makes
        // both evaluations identical.
        const double theta = theta_hi(rng);
        const double mirrored = constants::pi - theta;
        LatticeParams a = defaults();
        a.theta_rad = theta;
        LatticeParams b = defaults();
        b.theta_rad = mirrored;
        CHECK(dipole_coupling_ev(a, 700.0) == dipole_coupling_ev(b, 700.0));
        const double ka = ka_dist(rng);
        CHECK(dispersion(a, ka).energy_ev == dispersion(b, ka).energy_ev);
    }
    // General pairs stay within 1e-15 relative.
    std::uniform_real_distribution<double> theta_all(0.0, constants::pi);
    for (int i = 0; i < 2000; ++i) {
        const double theta = theta_all(rng);
        LatticeParams a = defaults();
        a.theta_rad = theta;
        LatticeParams b = defaults();
        b.theta_rad = constants::pi - theta;
        CHECK(dipole_coupling_ev(a, 700.0)
              == doctest::Approx(dipole_coupling_ev(b, 700.0)).epsilon(1e-15));
    }
}

TEST_CASE("band is quasi-flat at the default parameters") {
    const LatticeParams p = defaults();
    for (int i = 0; i <= 1000; ++i) {
        const double ka = i * constants::pi / 1000;
        const double e = dispersion(p, ka).energy_ev;
        CHECK(std::fabs(e - p.transition_energy_ev) / p.transition_energy_ev < 1e-7);
    }
}

TEST_CASE("band containment and the neighbor-shell tail bound") {
    std::mt19937 rng(79);
    std::uniform_real_distribution<double> theta_all(0.0, constants::pi);
    std::uniform_real_distribution<double> ka_dist(-constants::pi, constants::pi);
    for (int i = 0; i < 500; ++i) {
        LatticeParams base = defaults();
        base.theta_rad = theta_all(rng);
        const double ka = ka_dist(rng);
        const double j1 = std::fabs(dipole_coupling_ev(base, base.lattice_constant_angstrom));
        const double e1 = dispersion(base, ka).energy_ev;
        CHECK(std::fabs(e1 - base.transition_energy_ev) <= 2.0 * j1 * (1.0 + 1e-12));

        for (const int cutoff : {2, 3, 5}) {
            LatticeParams extended = base;
            extended.neighbor_cutoff = cutoff;
            double tail = 0.0;
            for (int n = 2; n <= cutoff; ++n)
                tail += 2.0 * j1 / (static_cast<double>(n) * n * n);
            const double em = dispersion(extended, ka).energy_ev;
            CHECK(std::fabs(em - e1) <= tail * (1.0 + 1e-12) + 1e-30);
        }
    }
}

TEST_CASE("band edges") {
    LatticeParams p = defaults();
    const auto [lo, hi] = band_edges_ev(p);
    const double width = hi - lo;
    const double j = std::fabs(dipole_coupling_ev(p, p.lattice_constant_angstrom));
    CHECK(width == doctest::Approx(4.0 * j).epsilon(1e-10));
    CHECK(width == doctest::Approx(4.0 * 2.87993e-8).epsilon(1e-5));

    p.dipole_e_angstrom = 0.0;
    const auto [lo0, hi0] = band_edges_ev(p);
    CHECK(hi0 - lo0 == 0.0);

    p = defaults();
    p.theta_rad = magic_angle_rad();
    const auto [lom, him] = band_edges_ev(p);
    const double scale = 4.0 * 14.399645 / 1e9;
    CHECK(him - lom <= 1e-14 * scale);
}

TEST_CASE("band edges with several shells match a dense scan") {
    LatticeParams p = defaults();
    p.neighbor_cutoff = 3;
    p.theta_rad = 0.3;
    const auto [lo, hi] = band_edges_ev(p);
    double scan_lo = dispersion(p, 0.0).energy_ev, scan_hi = scan_lo;
    for (int i = 1; i <= 100000; ++i) {
        const double e = dispersion(p, i * constants::pi / 100000).energy_ev;
        scan_lo = std::min(scan_lo, e);
        scan_hi = std::max(scan_hi, e);
    }
    CHECK(lo <= scan_lo + 1e-15);
    CHECK(hi >= scan_hi - 1e-15);
    CHECK(lo == doctest::Approx(scan_lo).epsilon(1e-12));
    CHECK(hi == doctest::Approx(scan_hi).epsilon(1e-12));
}

TEST_CASE("allowed wave numbers") {
    const auto two = allowed_ka(2);
    REQUIRE(two.size() == 3);
    CHECK(two[0] == -constants::pi);
    CHECK(two[1] == 0.0);
    CHECK(two[2] == constants::pi);

    const auto four = allowed_ka(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0] == -constants::pi);
    CHECK(four[1] == -0.5 * constants::pi);
    CHECK(four[2] == 0.0);
    CHECK(four[3] == 0.5 * constants::pi);
    CHECK(four[4] == constants::pi);

    CHECK_THROWS_AS(allowed_ka(1), std::domain_error);
    CHECK_THROWS_AS(allowed_ka(0), std::domain_error);
    CHECK_THROWS_AS(allowed_ka(-4), std::domain_error);
    CHECK_THROWS_AS(allowed_ka(7), std::domain_error);
}

TEST_CASE("allowed wave number grid properties") {
    for (const int n : {2, 4, 10, 64, 500}) {
        const auto grid = allowed_ka(n);
        REQUIRE(grid.size() == static_cast<size_t>(n) + 1);
        CHECK(grid.front() == -constants::pi);
        CHECK(grid.back() == constants::pi);
        for (size_t i = 1; i < grid.size(); ++i)
            CHECK(grid[i] > grid[i - 1]);
        for (size_t i = 0; i < grid.size(); ++i)
            CHECK(grid[i] == -grid[grid.size() - 1 - i]);
        // interior points are 2 pi p / N
        for (int p = 1; p < n / 2; ++p)
            CHECK(grid[n / 2 + p] == doctest::Approx(2.0 * constants::pi * p / n).epsilon(1e-15));
    }
}

TEST_CASE("magic angle value") {
    CHECK(rad_to_deg(magic_angle_rad()) == doctest::Approx(54.7356).epsilon(1e-5));
    const double c = std::cos(magic_angle_rad());
    CHECK(1.0 - 3.0 * c * c == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

} // TEST_SUITE
