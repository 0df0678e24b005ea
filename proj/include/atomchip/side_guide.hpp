#pragma once

#include <array>

#include "atomchip/casimir_polder.hpp"
#include "atomchip/geometry.hpp"
#include "atomchip/species.hpp"
#include "atomchip/tunneling.hpp"

namespace atomchip {

// Side-guide trap above a chip wire.  Coordinates: z = 0 at the top of the
// dielectric stack, the wire occupies z in [0, h] (centerline y = 0), and the
// guide minimum sits at height z = d.  The bias field is chosen to cancel the
// wire field at the trap: Bb = mu0 I / (2 pi (d - h/2)); an axial Ioffe field
// B0 keeps the bottom finite.  The wire is treated as a thin conductor for
// the trapping field (d >> h) and as a cylinder of radius h/2 for the
// dispersion potential.
struct SideGuideSystem {
    AtomSpecies atom = AtomSpecies::rb87();
    WireGeometry wire{};
    LayerStack stack{};
    double I = 0.0;           // [A]
    double d = 0.0;           // trap height above the stack surface [m]
    double B0 = 0.0;          // Ioffe field [T]
    double omegaXFactor = 0.1; // axial frequency as a fraction of the radial one
    double N = 1000.0;        // atom number

    void validate() const;

    double wireCenterZ() const { return 0.5 * wire.h; }
    double r0() const { return d - wireCenterZ(); } // trap-to-wire-center distance
    double biasField() const;                        // [T]
    double gradient() const;                         // [T/m]
    double omegaPerp() const;                        // [rad/s]
    std::array<double, 3> trapFrequencies() const;   // (wx, wy, wz)
    double larmorOmega() const;                      // Zeeman splitting / hbar

    // Field magnitude and trapping potential (relative to the trap bottom
    // muA * B0) at transverse position (y, z).
    double fieldMagnitude(double y, double z) const;
    double magneticPotential(double y, double z) const;

    // Dispersion potential at (y, z) for the selected bodies, scaled by
    // cpScale (1 = physical).
    double dispersionPotential(double y, double z, CpBodies bodies,
                               double cpScale) const;

    DensityProfile densityProfile() const;
};

struct SurfaceTunnelingOptions {
    CpBodies bodies = CpBodies::Combined;
    double cpScale = 1.0;
    int ySamples = 81;    // transverse columns across the cloud
    int zScan = 600;      // scan resolution along the escape path
};

struct SurfaceTunnelingResult {
    double rate = 0.0;       // total loss rate [1/s]
    double lifetime = 0.0;   // 1/rate (inf when the cloud is sealed)
    bool anyBarrierFree = false; // some column had no barrier at all
    int openColumns = 0;     // columns with a finite escape channel
    int columns = 0;         // columns carrying atoms
};

// Column-resolved semiclassical loss rate of a trapped condensate toward the
// chip: every transverse column (x, y) attempts at nu = sqrt(<v_z^2>) / 2L
// and leaks with its barrier transmission at the chemical potential,
//   Gamma = iint dx dy  P(x,y) nu(x,y) T(y).
SurfaceTunnelingResult surface_tunneling_rate(const SideGuideSystem& sys,
                                              const SurfaceTunnelingOptions& opts = {});

} // namespace atomchip
