#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "atomchip/geometry.hpp"

namespace atomchip {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

// Rectangular source volume in the atom frame (atom conventionally near the
// origin): transverse cross-section [y0,y1] x [z0,z1], axial extent
// [-xHalf, xHalf].
struct SourceBox {
    double y0 = 0.0, y1 = 0.0;
    double z0 = 0.0, z1 = 0.0;
    double xHalf = 0.0;

    void validate() const;
    double volume() const { return (y1 - y0) * (z1 - z0) * 2.0 * xHalf; }
    bool contains(const Vec3& p) const;

    // Wire of cross-section w x h whose top surface sits a distance d below
    // the atom at the origin.  Axial extent follows the convention
    // xHalf = max(100 d, 10 w).
    static SourceBox wireBelow(double w, double h, double d);
};

// Geometric correlation tensor of near-field current noise,
//   X_ij = 1/2 int_V (x1-x')_i (x2-x')_j / (|x1-x'|^3 |x2-x'|^3) dV,
// in units of 1/length.  Evaluated by adaptive quadrature (relative
// tolerance relTol); the axial integral is analytic in the coincident-point
// case.  Both field points must lie outside the source volume.
struct GeometryFactors {
    double xx = 0.0, yy = 0.0, zz = 0.0;
    double xy = 0.0, xz = 0.0, yz = 0.0;
};

GeometryFactors geometry_factors(const Vec3& x1, const Vec3& x2,
                                 const SourceBox& box, double relTol = 1e-6);

// Monte-Carlo estimate of the same tensor with per-component standard errors;
// used as an independent oracle.
struct GeometryFactorsMC {
    GeometryFactors value;
    GeometryFactors stderror;
};
GeometryFactorsMC geometry_factors_mc(const Vec3& x1, const Vec3& x2,
                                      const SourceBox& box, std::uint64_t seed,
                                      std::int64_t samples = 10'000'000);

// Conductivity-weighted combinations entering the field-fluctuation tensor:
//   B_xx = s_zz X_yy + s_yy X_zz   (cyclic), off-diagonals B_ij = -s_kk X_ij.
struct BTensor {
    double xx = 0.0, yy = 0.0, zz = 0.0;
    double xy = 0.0, xz = 0.0, yz = 0.0;
};
BTensor b_tensor(const ConductivityTensor& sigma, const GeometryFactors& X);

// Same combinations normalized by the axial conductivity (dimensionless
// anisotropy measure): Ytilde_ij = B_ij / s_xx.
BTensor y_tilde(const ConductivityTensor& sigma, const GeometryFactors& X);

// Magnetic field noise power spectral density [T^2/Hz],
//   S_B^ij = (kB T / 4 pi^2 eps0^2 c^4) s_xx Ytilde_ij,
// flat in frequency within the quasi-static regime.
struct NoiseSpectrum {
    double xx = 0.0, yy = 0.0, zz = 0.0;
    double xy = 0.0, xz = 0.0, yz = 0.0;
};
NoiseSpectrum power_spectrum(const ConductivityTensor& sigma,
                             const GeometryFactors& X);

// Quasi-static validity: the skin depth at the probing frequency must exceed
// 10x both the atom distance and the conductor thickness.
double skin_depth(double sigma0, double omega);
bool quasi_static_ok(double sigma0, double omega, double d, double h);

// Transition rates.  muPerp / dMuPar / muPar are magnetic-moment matrix
// elements [J/T]; spectra in [T^2/Hz]; rates in [1/s].
double spin_flip_rate(double muPerp, const NoiseSpectrum& S);
double spin_decoherence_rate(double dMuPar, const NoiseSpectrum& S);
double spatial_decoherence_rate(double muPar, double S11, double S22, double S12);

// Heating 0 -> f (f = 1 or 2) of a harmonic mode of frequency omegaAxis from
// the axial field spectrum S(x1, x2) [T^2/Hz] sampled along the mode axis:
//   Gamma = (muPar^2/hbar^2) intint M_f0(x1) S(x1,x2) M_f0(x2) dx1 dx2,
// with M_f0 = phi_f phi_0 the oscillator overlap densities.
double heating_rate(double muPar, double mass, double omegaAxis, int targetLevel,
                    const std::function<double(double, double)>& Sxx,
                    double relTol = 1e-5);

// Spin-flip noise suppression relative to an isotropic conductor of the same
// axial conductivity: (s_zz X_yy + s_yy X_zz) / (s_xx (X_yy + X_zz)).
double suppression_ratio(const ConductivityTensor& sigma, const GeometryFactors& X);

// Johnson-noise figure T / rho(T) of a candidate wire material relative to
// gold at 300 K.  rho(T) = rho0 + rhoPhonon(T), with the phonon part given by
// the Bloch-Grueneisen form calibrated to the material's room-temperature
// resistivity.
struct WireMaterial {
    double rho0 = 0.0;        // residual resistivity [Ohm m]
    double debyeTheta = 0.0;  // Debye temperature [K]
    double rhoPhonon300 = 0.0; // phonon resistivity at 300 K [Ohm m]

    static WireMaterial gold();              // pure Au: Theta_D = 170 K
    static WireMaterial silverGoldAlloy();   // Ag + 6% Au: Theta_D = 215 K
};
double bloch_gruneisen_resistivity(const WireMaterial& m, double T);
double alloy_noise_ratio(const WireMaterial& m, double T);

// Figure of merit: number of gate operations fitting into the most
// restrictive coherence/lifetime channel,
//   min(1/gammaFlip, 1/gammaDecoherence, tunnelLifetime) / gateTime.
// Diverging rates give 0 ops; gateTime must be positive.
double gate_ops_figure_of_merit(double gammaFlip, double gammaDecoherence,
                                double tunnelLifetime, double gateTime);

} // namespace atomchip
