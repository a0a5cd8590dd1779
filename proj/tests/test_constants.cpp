#include <doctest.h>

#include <cmath>
#include <random>

#include "exciton/constants.hpp"

using namespace exciton;

TEST_SUITE("constants") {

TEST_CASE("hbar*c and the Coulomb constant match their SI composition") {
    // hbar*c in eV*Angstrom from the SI constants themselves
    const double hbar_c_si = constants::hbar_si * constants::c_si
                           / constants::ev_to_joule / constants::angstrom_to_m;
    CHECK(std::fabs(constants::hbar_c_ev_angstrom - 1973.269804) / 1973.269804 < 1e-9);
    CHECK(std::fabs(constants::hbar_c_ev_angstrom - hbar_c_si) / hbar_c_si < 1e-9);

    const double coulomb_si = constants::ev_to_joule * constants::ev_to_joule
                            / (4.0 * constants::pi * constants::eps0_si)
                            / constants::ev_to_joule / constants::angstrom_to_m;
    CHECK(std::fabs(constants::coulomb_ev_angstrom - 14.399645) / 14.399645 < 1e-8);
    CHECK(std::fabs(constants::coulomb_ev_angstrom - coulomb_si) / coulomb_si < 1e-7);
}

TEST_CASE("energy_to_rate") {
    CHECK(energy_to_rate(0.0) == 0.0);

    // oracle: direct SI quotient (1.602176634e-19 J) / (1.054571817e-34 J s)
    const double oracle_1ev = 1.602176634e-19 / 1.054571817e-34;
    CHECK(energy_to_rate(1.0) == doctest::Approx(oracle_1ev).epsilon(1e-12));
    CHECK(energy_to_rate(1.0) == doctest::Approx(1.519267e15).epsilon(1e-6));

    // linearity is exact for power-of-two scaling
    CHECK(energy_to_rate(2.0) == 2.0 * energy_to_rate(1.0));
    CHECK(energy_to_rate(0.25) == 0.25 * energy_to_rate(1.0));
}

TEST_CASE("eV/J round trip is the identity to 1e-12") {
    std::mt19937 rng(202401);
    std::uniform_real_distribution<double> energy(1e-6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double e = energy(rng);
        CHECK(joule_to_ev(ev_to_joule(e)) == doctest::Approx(e).epsilon(1e-12));
    }
}

TEST_CASE("conversions are linear") {
    std::mt19937 rng(202402);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    std::uniform_real_distribution<double> value(1e-3, 1e3);
    for (int i = 0; i < 200; ++i) {
        const double a = scale(rng);
        const double x = value(rng);
        CHECK(ev_to_joule(a * x) == doctest::Approx(a * ev_to_joule(x)).epsilon(1e-15));
        CHECK(energy_to_rate(a * x) == doctest::Approx(a * energy_to_rate(x)).epsilon(1e-15));
        CHECK(deg_to_rad(a * x) == doctest::Approx(a * deg_to_rad(x)).epsilon(1e-15));
    }
}

TEST_CASE("degree conversions hit the special angles exactly") {
    CHECK(deg_to_rad(180.0) == constants::pi);
    CHECK(deg_to_rad(90.0) == 0.5 * constants::pi);
    CHECK(deg_to_rad(0.0) == 0.0);
    CHECK(rad_to_deg(deg_to_rad(37.5)) == doctest::Approx(37.5).epsilon(1e-14));
}

} // TEST_SUITE
