#pragma once

#include <array>

namespace atomchip {

// Size-dependent resistivity and safe-current model for nanofabricated wires.

struct FsParams {
    double bulkRho = 2.21e-8; // bulk resistivity [Ohm m] (Au at 300 K)
    double mfp = 40e-9;       // electron mean free path [m]
    double p = 0.0;           // specular-reflection fraction (0 = fully diffusive)
};

// Fuchs-Sondheimer thin-conductor resistivity for a rectangular cross-section
// w x h: rho = bulkRho [1 + (3/8)(1-p) mfp (1/w + 1/h)].  Symmetric in w, h.
double fs_resistivity(double w, double h, const FsParams& params = {});

// Maximum sustainable current of a w x h wire.  Dissipation per unit length
// scales as J^2 rho A while heat extraction through the substrate contact
// scales with the cross-section perimeter, capping the current density at
//   J_max = J_cal (bulkRho / rho(w,h)) (sRef / sqrt(w h)),
// calibrated so a 20 nm square wire carries 0.5 mA.  I_max = J_max w h grows
// monotonically with the cross-section.
struct SafeCurrentParams {
    FsParams fs{};
    double jCal = 3.125e12; // calibrated current-density scale [A/m^2]
    double sRef = 20e-9;    // reference size [m]
};
double max_safe_current(double w, double h, const SafeCurrentParams& params = {});

// Transverse field gradient mu0 I / (2 pi d^2) of a side guide at distance d
// above a w = h = d wire.  At constant current density the gradient is
// independent of d; at the respective safe currents smaller wires win.
struct CurrentDensityScaling {
    double gradientAtConstJ = 0.0;  // [T/m] at current density J
    double gradientAtMaxI = 0.0;    // [T/m] at the wire's safe current
    double maxCurrent = 0.0;        // [A]
};
CurrentDensityScaling current_density_scaling_check(double size, double J,
                                                    const SafeCurrentParams& params = {});

} // namespace atomchip
