#pragma once

#include "atomchip/species.hpp"

namespace atomchip {

// Potential bump added to a side guide by a crossing wire carrying current I,
// seen by an atom moving along the guide axis x at height z above the
// crossing:  V(x) = muA*B0 + (muA*mu0*I / 2pi) * z / (z^2 + x^2).
// B0 is the guide-bottom field, so V - muA*B0 is the barrier proper.
struct CrossingWireBarrier {
    double muA = 0.0; // magnetic moment of the state [J/T]
    double I = 0.0;   // crossing-wire current [A]
    double z = 0.0;   // height of the guide above the crossing wire [m]
    double B0 = 0.0;  // guide-bottom field [T]

    double offset() const;            // muA * B0 [J]
    double peak() const;              // barrier height above the offset [J]
    double potential(double x) const; // V(x) [J]
    double excess(double x) const;    // V(x) - offset [J]

    // Closed form of the integrated excess, int (V - offset) dx over the whole
    // axis: muA * mu0 * I / 2.
    double excessIntegral() const;
};

CrossingWireBarrier x_wire_barrier(const AtomSpecies& atom, double I, double z,
                                   double B0);

// Snake-wire lattice: modulating a wire's centerline with amplitude dyCenter
// at wavevector k produces a periodic potential of amplitude
//   V0 = muA * mu0 * I * k^2 * dyCenter * K1(k z)
// at height z above the wire.
double lattice_amplitude(const AtomSpecies& atom, double I, double k,
                         double dyCenter, double z);

// Harmonic frequency at the bottom of a lattice site of depth V0 and
// wavevector k: omega = sqrt(V0 k^2 / m).
double lattice_trap_frequency(const AtomSpecies& atom, double V0, double k);

} // namespace atomchip
