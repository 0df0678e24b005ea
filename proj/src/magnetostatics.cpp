#include "atomchip/magnetostatics.hpp"

#include "atomchip/bessel.hpp"
#include "atomchip/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace atomchip {

double CrossingWireBarrier::offset() const { return muA * B0; }

double CrossingWireBarrier::peak() const {
    return muA * constants::mu0 * I / (2.0 * constants::pi * z);
}

double CrossingWireBarrier::excess(double x) const {
    return (muA * constants::mu0 * I / (2.0 * constants::pi)) * z / (z * z + x * x);
}

double CrossingWireBarrier::potential(double x) const { return offset() + excess(x); }

double CrossingWireBarrier::excessIntegral() const {
    // int z/(z^2+x^2) dx over the real line is pi, independent of z.
    return muA * constants::mu0 * I / 2.0;
}

CrossingWireBarrier x_wire_barrier(const AtomSpecies& atom, double I, double z,
                                   double B0) {
    if (!(z > 0.0))
        throw std::domain_error("x_wire_barrier: height above the crossing must be positive");
    if (I < 0.0)
        throw std::domain_error("x_wire_barrier: current must be non-negative");
    if (B0 < 0.0)
        throw std::domain_error("x_wire_barrier: guide-bottom field must be non-negative");
    return CrossingWireBarrier{atom.muA(), I, z, B0};
}

double lattice_amplitude(const AtomSpecies& atom, double I, double k,
                         double dyCenter, double z) {
    if (!(k > 0.0)) throw std::domain_error("lattice_amplitude: wavevector must be positive");
    if (!(z > 0.0)) throw std::domain_error("lattice_amplitude: height must be positive");
    return atom.muA() * constants::mu0 * I * k * k * dyCenter * bessel_K1(k * z);
}

double lattice_trap_frequency(const AtomSpecies& atom, double V0, double k) {
    if (!(V0 > 0.0))
        throw std::domain_error("lattice_trap_frequency: lattice depth must be positive");
    if (!(k > 0.0))
        throw std::domain_error("lattice_trap_frequency: wavevector must be positive");
    return std::sqrt(V0 * k * k / atom.mass);
}

} // namespace atomchip
