#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "atomchip/magnetostatics.hpp"
#include "atomchip/species.hpp"

namespace atomchip {

struct WkbOptions {
    int gridPoints = 256;        // scan resolution between bracket ends (>= 50)
    double turningRelTol = 1e-10; // relative tolerance on turning points
    double actionRelTol = 1e-8;   // relative tolerance on the action integral
};

struct WkbResult {
    double action = 0.0;      // (2/hbar) * int sqrt(2 m (V - E)) dx
    double probability = 1.0; // exp(-action)
    std::optional<double> x1; // inner turning point (empty if E clears the barrier)
    std::optional<double> x2; // outer turning point
    double barrierMax = 0.0;  // max of V on the bracket
};

// Semiclassical transmission through the barrier V(x) at energy E for a
// particle of the given mass.  The bracket [xlo, xhi] must contain the whole
// barrier; V is sampled on a uniform scan grid (gridPoints >= 50) to locate
// the classically forbidden region, the outermost turning points are refined
// by bracketed root finding, and the action integral is evaluated with an
// endpoint-singularity-safe rule.  E at or above the barrier top returns
// probability 1 with no turning points.
WkbResult wkb_probability(const std::function<double(double)>& V, double E,
                          double mass, double xlo, double xhi,
                          const WkbOptions& opts = {});

// Relative current drop (I_from - I_to)/I_from that moves the crossing-wire
// transmission from Pfrom (default 1e-3) to Pto (default 0.1) for an atom of
// energy E travelling at height z above the crossing wire.  The transmission
// is strictly decreasing in I, so the result is positive whenever Pto > Pfrom.
double current_sensitivity(const AtomSpecies& atom, double z, double E,
                           double Pfrom = 1e-3, double Pto = 0.1);

// Largest height d at which a snake-wire lattice of period lambda driven with
// current I and centerline amplitude dyCenter still resolves its sites, i.e.
// the lattice depth satisfies V0 >= (eta^2/16) hbar^2 k^2 / m (equivalently
// 2 V0 >= (eta/2) hbar omega with omega the site frequency).  Returns 0 when
// no height satisfies the bound (e.g. zero current or amplitude).
double resolution_height(const AtomSpecies& atom, double I, double lambda,
                         double eta, double dyCenter);

// Interacting ground-state density in a 3-D harmonic trap.  N >> 1 uses the
// Thomas-Fermi inverted parabola; N = 1 falls back to the single-particle
// Gaussian ground state.  Coordinates are trap-centered.
struct DensityProfile {
    double mass = 0.0;
    double aScatter = 0.0;
    std::array<double, 3> omega{0.0, 0.0, 0.0};
    double N = 0.0;
    double mu = 0.0;                    // chemical potential above trap bottom [J]
    std::array<double, 3> radii{0, 0, 0}; // TF radii (or Gaussian sigmas for N=1)
    bool thomasFermi = true;

    double density(double x, double y, double z) const;        // [m^-3]
    double columnFraction(double x, double y) const;            // (1/N) int n dz
    double columnHalfLength(double x, double y) const;          // allowed |z| at mu
    double meanVz2() const;                                     // [m^2/s^2]
};

DensityProfile thomas_fermi_density(const AtomSpecies& atom,
                                    const std::array<double, 3>& omega, double N);

} // namespace atomchip
