#pragma once

#include <functional>

#include "atomchip/geometry.hpp"
#include "atomchip/species.hpp"

namespace atomchip {

// Retarded atom-surface dispersion potentials in the pairwise-additive
// spirit: every macroscopic body contributes
//   U = -(hbar c alpha0 / 2 pi) F / s^4
// with s its closest-approach distance, alpha0 the static polarizability
// volume and F a dimensionless strength factor.

struct CpPotential {
    double U = 0.0;       // potential energy [J] (negative = attractive)
    double strength = 0.0; // effective F = -U * 2 pi s^4 / (hbar c alpha0)
    bool shortRange = false; // s below ~100 nm: retarded form marginal there
};

// Half-space strength factor with the static-permittivity reduction
//   F(eps) = (3/4) (eps - 1)/(eps + 1) * phi(eps),  phi == 1 in this model;
// eps -> inf recovers the perfect-conductor 3/4.
double planar_strength(double epsilon);

// Planar stack at distance z below the atom, modeled as a sum of single-layer
// terms: the top layer acts as a half-space at distance z, and each deeper
// interface adds the strength difference at its own distance.  Against the
// exact layered-media result this summed model is biased by roughly 8-15%
// (recorded here as metadata, not a computed correction).
CpPotential planar_cp(double alpha0, const LayerStack& stack, double z);
inline constexpr double kPlanarSumBiasLow = 0.08;
inline constexpr double kPlanarSumBiasHigh = 0.15;

// Conducting cylinder of radius a, atom at distance R from the axis (R > a):
//   U = -(hbar c alpha0 / 2 pi) F(a/R) / (R - a)^4,
// F = 0.53 (a/R) + 0.22 for a/R > 0.2, F = -2/(3 ln(a/R)) for a/R << 0.1,
// joined by a monotone cubic blend on [0.1, 0.2].
double cylinder_strength(double aOverR);
CpPotential cylinder_cp(double alpha0, double a, double R);

// Wire-on-chip combination.  Heights are measured from the top of the
// dielectric stack (z = 0); the wire occupies [0, h] and is modeled as a
// cylinder of radius h/2, so an atom at height z sees the wire surface at
// z - h and the planar stack at z.  `wireOnly` / `surfaceOnly` select the
// individual contributions.
enum class CpBodies { Combined, WireOnly, SurfaceOnly };
CpPotential combined_cp(const AtomSpecies& atom, const LayerStack& stack,
                        double wireHeight, double z,
                        CpBodies bodies = CpBodies::Combined);

// Superpose an attractive surface potential onto a magnetic barrier along
// the approach coordinate and re-characterize the result: new maximum, outer
// location, and whether a barrier survives at the probe energy.
struct ModifiedBarrier {
    std::function<double(double)> potential; // combined V(z) [J]
    double peak = 0.0;       // max of combined V on the bracket [J]
    double peakPosition = 0.0;
    bool barrierSurvives = false; // peak still above the probe energy
};
ModifiedBarrier cp_modified_barrier(const std::function<double(double)>& magnetic,
                                    const std::function<double(double)>& cp,
                                    double zlo, double zhi, double probeEnergy,
                                    int scanPoints = 400);

} // namespace atomchip
