#pragma once

#include <string>
#include <vector>

#include "atomchip/corrugation.hpp"
#include "atomchip/geometry.hpp"
#include "atomchip/species.hpp"
#include "atomchip/thermal_noise.hpp"

namespace atomchip {

// A candidate trapped-atom register design: one wire of the given material
// and cross-section holding atoms a height d above its top surface.
struct DesignInput {
    AtomSpecies atom = AtomSpecies::rb87();
    WireGeometry wire{};
    WireMaterial material = WireMaterial::gold();
    double temperature = 300.0;  // wire temperature [K]
    double d = 0.0;              // atom height above the wire top [m]
    double B0 = 0.0;             // holding field (sets the Larmor frequency) [T]
    double gateTime = 0.0;       // [s]
    double dMuPar = 0.0;         // qubit differential moment [J/T]; 0 = one
                                 // Zeeman step within the working manifold
    double conductivityRatio = 1.0; // sigma_axial / sigma_transverse
    RoughnessModel roughness{};  // edge roughness; dy0 = 0 means smooth wire
    double tunnelLifetime = INFINITY; // externally evaluated surface loss [s]

    void validate() const;
};

struct DesignThresholds {
    double minGateOps = 1e4;
    double maxFieldRoughness = 1e-2; // dB/B along the guide
};

enum class Verdict { Pass, Fail, Indeterminate };

struct DesignReport {
    double spinFlipRate = 0.0;        // [1/s]
    double decoherenceRate = 0.0;     // [1/s]
    double spinFlipLifetime = 0.0;    // [s]
    double coherenceTime = 0.0;       // [s]
    double tunnelLifetime = 0.0;      // [s]
    double gateOps = 0.0;             // limiting lifetime / gate time
    double fieldRoughness = 0.0;      // dB/B
    bool quasiStaticValid = true;     // skin depth >> distance and thickness
    bool roughnessValid = true;       // corrugation closed form in its regime
    Verdict verdict = Verdict::Indeterminate;
    std::vector<std::string> notes;
};

// Evaluate a design against the thresholds.  The verdict is Pass when every
// channel is computable inside its validity regime, the gate-operations
// figure of merit reaches minGateOps, and the relative field roughness stays
// under maxFieldRoughness; Fail when a computable channel breaks a bound;
// Indeterminate when a needed channel leaves its validity regime.
DesignReport design_report(const DesignInput& in,
                           const DesignThresholds& thresholds = {});

std::string verdict_name(Verdict v);

} // namespace atomchip
