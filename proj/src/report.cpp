#include "atomchip/report.hpp"

#include "atomchip/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace atomchip {

using constants::hbar;
using constants::muB;

void DesignInput::validate() const {
    atom.validate();
    wire.validate();
    if (!(temperature > 0.0))
        throw std::domain_error("DesignInput: temperature must be positive");
    if (!(d > 0.0))
        throw std::domain_error("DesignInput: height must be positive");
    if (!(B0 > 0.0))
        throw std::domain_error("DesignInput: holding field must be positive");
    if (!(gateTime > 0.0))
        throw std::domain_error("DesignInput: gate time must be positive");
    if (!(conductivityRatio >= 1.0))
        throw std::domain_error("DesignInput: conductivity ratio must be >= 1");
    if (!(tunnelLifetime > 0.0))
        throw std::domain_error("DesignInput: tunnel lifetime must be positive");
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        default: return "INDETERMINATE";
    }
}

DesignReport design_report(const DesignInput& in, const DesignThresholds& th) {
    in.validate();
    DesignReport rep;

    // Johnson-noise channels from the wire volume under the atom.
    const double rho = bloch_gruneisen_resistivity(in.material, in.temperature);
    const double sigma0 = 1.0 / rho;
    ConductivityTensor sigma;
    sigma.T = in.temperature;
    sigma.sxx = sigma0;
    sigma.syy = sigma0 / in.conductivityRatio;
    sigma.szz = sigma0 / in.conductivityRatio;

    const SourceBox box = SourceBox::wireBelow(in.wire.w, in.wire.h, in.d);
    const GeometryFactors X = geometry_factors({0, 0, 0}, {0, 0, 0}, box);
    const NoiseSpectrum S = power_spectrum(sigma, X);

    rep.spinFlipRate = spin_flip_rate(in.atom.muA(), S);
    const double dMu = in.dMuPar > 0.0 ? in.dMuPar : std::abs(in.atom.gF) * muB;
    rep.decoherenceRate = spin_decoherence_rate(dMu, S);
    rep.spinFlipLifetime =
        rep.spinFlipRate > 0.0 ? 1.0 / rep.spinFlipRate : INFINITY;
    rep.coherenceTime =
        rep.decoherenceRate > 0.0 ? 1.0 / rep.decoherenceRate : INFINITY;
    rep.tunnelLifetime = in.tunnelLifetime;

    // The flat-spectrum noise model holds only while the skin depth dwarfs
    // the geometry at the spin-precession frequency.
    const double omegaL = std::abs(in.atom.gF) * muB * in.B0 / hbar;
    rep.quasiStaticValid = quasi_static_ok(sigma0, omegaL, in.d, in.wire.h);
    if (!rep.quasiStaticValid)
        rep.notes.push_back("skin depth comparable to the geometry: "
                            "flat-spectrum noise rates unreliable");

    rep.gateOps = gate_ops_figure_of_merit(rep.spinFlipRate, rep.decoherenceRate,
                                           rep.tunnelLifetime, in.gateTime);

    // Potential roughness along the guide from wire edge roughness.
    if (in.roughness.dy0 > 0.0) {
        const double zCenter = in.d + 0.5 * in.wire.h;
        const CorrugationRms c = corrugation_rms(in.roughness, zCenter);
        rep.fieldRoughness = c.ratio;
        rep.roughnessValid = !c.farFieldWarning;
        if (c.farFieldWarning)
            rep.notes.push_back("corrugation evaluated outside the near-field "
                                "regime: dB/B unreliable");
    } else {
        rep.fieldRoughness = 0.0;
        rep.roughnessValid = true;
    }

    const bool opsOk = rep.gateOps >= th.minGateOps;
    const bool roughOk = rep.fieldRoughness <= th.maxFieldRoughness;

    // A violation is definite when the violated channel is inside its
    // validity regime (the tunnel lifetime is an input, so it alone failing
    // the ops budget is definite regardless of the noise model).  Definite
    // violations give Fail; otherwise any channel out of regime blocks
    // certification.
    const bool tunnelAloneFails =
        in.tunnelLifetime / in.gateTime < th.minGateOps;
    const bool opsViolation =
        !opsOk && (rep.quasiStaticValid || tunnelAloneFails);
    const bool roughViolation = !roughOk && rep.roughnessValid;
    if (opsViolation || roughViolation) {
        rep.verdict = Verdict::Fail;
        if (opsViolation) rep.notes.push_back("gate-operations budget below threshold");
        if (roughViolation) rep.notes.push_back("potential roughness above threshold");
    } else if (!rep.quasiStaticValid || !rep.roughnessValid) {
        rep.verdict = Verdict::Indeterminate;
    } else {
        rep.verdict = Verdict::Pass;
    }
    return rep;
}

} // namespace atomchip
