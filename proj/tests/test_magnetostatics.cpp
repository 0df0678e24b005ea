#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "atomchip/constants.hpp"
#include "atomchip/magnetostatics.hpp"
#include "atomchip/quadrature.hpp"
#include "atomchip/species.hpp"
#include "atomchip/units.hpp"

using namespace atomchip;

namespace {
const AtomSpecies rb = AtomSpecies::rb87();
}

TEST_CASE("crossing-wire barrier has the Lorentzian profile") {
    const double I = 2e-3;
    const double z = 1e-6;
    const double B0 = 1e-4;
    const auto bar = x_wire_barrier(rb, I, z, B0);

    CHECK(bar.offset() == doctest::Approx(rb.muA() * B0).epsilon(1e-14));
    CHECK(bar.peak() ==
          doctest::Approx(rb.muA() * constants::mu0 * I /
                          (2.0 * constants::pi * z)).epsilon(1e-14));

    // Value at the top and half-width at x = z.
    CHECK(bar.potential(0.0) == doctest::Approx(bar.offset() + bar.peak()).epsilon(1e-14));
    CHECK(bar.excess(z) == doctest::Approx(0.5 * bar.peak()).epsilon(1e-14));
    CHECK(bar.excess(3.0 * z) == doctest::Approx(bar.peak() / 10.0).epsilon(1e-14));

    // Even in x.
    CHECK(bar.excess(0.7 * z) == doctest::Approx(bar.excess(-0.7 * z)).epsilon(1e-15));

    // Monotone decay away from the crossing.
    double prev = bar.excess(0.0);
    for (int i = 1; i <= 20; ++i) {
        const double cur = bar.excess(i * 0.3 * z);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("integrated barrier excess matches the closed form") {
    const double I = 1e-3;
    const double z = 2e-6;
    const auto bar = x_wire_barrier(rb, I, z, 0.0);

    // Closed form: independent of the height z.
    CHECK(bar.excessIntegral() ==
          doctest::Approx(rb.muA() * constants::mu0 * I / 2.0).epsilon(1e-14));

    // Direct quadrature over a wide finite window; the Lorentzian tail beyond
    // 1e4 half-widths carries a relative weight of 2/(pi * 1e4).
    const double span = 1e4 * z;
    const double numeric =
        quad::integrate([&](double x) { return bar.excess(x); }, -span, span, 1e-12);
    CHECK(numeric == doctest::Approx(bar.excessIntegral()).epsilon(1e-3));

    // Same closed form at a different height: the integral must not move.
    const auto bar2 = x_wire_barrier(rb, I, 7.0 * z, 0.0);
    CHECK(bar2.excessIntegral() == doctest::Approx(bar.excessIntegral()).epsilon(1e-14));
}

TEST_CASE("crossing-wire barrier rejects unphysical inputs") {
    CHECK_THROWS_AS(x_wire_barrier(rb, 1e-3, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(x_wire_barrier(rb, 1e-3, -1e-6, 0.0), std::domain_error);
    CHECK_THROWS_AS(x_wire_barrier(rb, -1e-3, 1e-6, 0.0), std::domain_error);
    CHECK_THROWS_AS(x_wire_barrier(rb, 1e-3, 1e-6, -1e-4), std::domain_error);
    CHECK_NOTHROW(x_wire_barrier(rb, 0.0, 1e-6, 0.0)); // zero current = no barrier
}

TEST_CASE("lattice amplitude follows the K1 kernel") {
    // Reference from tools/oracles/gen_test_anchors.py (mpmath, 30 digits):
    // I = 1 mA, lambda = 1 um, dyCenter = 50 nm, z = 1 um.
    const double I = 1e-3;
    const double k = 2.0 * constants::pi / 1e-6;
    const double dy = 50e-9;
    const double z = 1e-6;
    const double V0 = lattice_amplitude(rb, I, k, dy, z);
    CHECK(V0 == doctest::Approx(2.2705056493031406e-29).epsilon(1e-10));

    // Linear in both the drive current and the modulation amplitude.
    CHECK(lattice_amplitude(rb, 2.0 * I, k, dy, z) == doctest::Approx(2.0 * V0).epsilon(1e-14));
    CHECK(lattice_amplitude(rb, I, k, 3.0 * dy, z) == doctest::Approx(3.0 * V0).epsilon(1e-14));

    // Height decay at fixed k is pure K1: strictly weaker further out.
    CHECK(lattice_amplitude(rb, I, k, dy, 1.5 * z) < V0);
    CHECK(lattice_amplitude(rb, I, k, dy, 2.0 * z) <
          lattice_amplitude(rb, I, k, dy, 1.5 * z));
}

TEST_CASE("lattice site frequency matches the quoted oscillator form") {
    const double k = 2.0 * constants::pi / 1e-6;
    const double V0 = 2.2705056493031406e-29;
    const double om = lattice_trap_frequency(rb, V0, k);
    // Reference from tools/oracles/gen_test_anchors.py.
    CHECK(om == doctest::Approx(78810.470497274723).epsilon(1e-10));
    CHECK(om == doctest::Approx(std::sqrt(V0 * k * k / rb.mass)).epsilon(1e-14));

    CHECK_THROWS_AS(lattice_trap_frequency(rb, 0.0, k), std::domain_error);
    CHECK_THROWS_AS(lattice_trap_frequency(rb, -1e-30, k), std::domain_error);
    CHECK_THROWS_AS(lattice_trap_frequency(rb, V0, 0.0), std::domain_error);
    CHECK_THROWS_AS(lattice_amplitude(rb, 1e-3, -1.0, 50e-9, 1e-6), std::domain_error);
    CHECK_THROWS_AS(lattice_amplitude(rb, 1e-3, 1e6, 50e-9, 0.0), std::domain_error);
}

TEST_CASE("magnetic moment projection scales with the sublevel") {
    CHECK(rb.muA() == doctest::Approx(constants::muB).epsilon(1e-14)); // gF mF = 1
    const AtomSpecies half = AtomSpecies::rb87(1);
    CHECK(half.muA() == doctest::Approx(0.5 * constants::muB).epsilon(1e-14));
    const AtomSpecies zero = AtomSpecies::rb87(0);
    CHECK(zero.muA() == 0.0);
    // Barrier heights inherit the ratio.
    const double p2 = x_wire_barrier(rb, 1e-3, 1e-6, 0.0).peak();
    const double p1 = x_wire_barrier(half, 1e-3, 1e-6, 0.0).peak();
    CHECK(p2 == doctest::Approx(2.0 * p1).epsilon(1e-14));
}
