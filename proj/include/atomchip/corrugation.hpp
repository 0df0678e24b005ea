#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "atomchip/species.hpp"

namespace atomchip {

// Spectral model of wire edge roughness.  The centerline displacement
// dy_c(x) is expanded over the one-sided discrete grid k_n = 2 pi n / L,
// n = 1 .. floor(L / lambdaMin), with amplitudes |dy_c(k)| = dy0 (k0/k)^alpha
// and deterministic pseudo-random phases keyed by (seed, n).  The model rms
// over a k-band is the quadrature sum of the one-sided amplitudes; the
// real-space centerline is the conjugate-symmetric synthesis
// sum_n 2 |dy_c(k_n)| cos(k_n x + phi_n).
struct RoughnessModel {
    double L = 0.0;         // wire length / fundamental period [m]
    double lambdaMin = 0.0; // shortest resolved wavelength [m]
    double alpha = 0.0;     // spectral exponent (0 = white, 1 = 1/f)
    double k0 = 0.0;        // reference wavevector [1/m]
    double dy0 = 0.0;       // amplitude at k0 [m]
    std::uint64_t seed = 0; // phase seed

    void validate() const;
    int modeCount() const;          // floor(L / lambdaMin)
    double k(int n) const;          // 2 pi n / L (n = 1..modeCount)
    double amplitude(double k) const;
    double phase(int n) const;      // uniform in [0, 2pi), from (seed, n)

    // Quadrature sum of amplitudes over k in [kLo, kHi] (inclusive).
    double modelRms(double kLo, double kHi) const;
    double modelRms() const;        // over the whole grid

    // sum over the grid of k^{-2 alpha} restricted to [kLo, kHi].
    double spectralSum(double kLo, double kHi) const;

    double centerline(double x) const; // real-space synthesis [m]
};

// Build a roughness model whose model rms over wavelengths
// [lambdaLo, lambdaHi] equals rmsTarget.  alpha = 0 gives constant
// amplitudes across the grid.
RoughnessModel synth_roughness(double rmsTarget, double lambdaLo, double lambdaHi,
                               double alpha, double L, double lambdaMin,
                               std::uint64_t seed);

// Symmetric transverse current response of a wire of width w to edge spectra
// dyPlus_k, dyMinus_k at wavevector k (signed), evaluated at transverse
// position y (field coefficient of e^{ikx}):
//   dJy = i J0 k (dy+ + dy-) e^{-|k|w/2} / (1 + e^{-|k|w}) cosh(k y).
// Exponentials are organized so no intermediate overflows for |y| <= w/2.
std::complex<double> current_response(double k, double w, double y, double J0,
                                      std::complex<double> dyPlus,
                                      std::complex<double> dyMinus);

// One-sided spectrum of the axial field corrugation at height z above the
// wire center: b_k = (I mu0 / 2pi) k^2 dy_c(k) K1(|k| z).
struct FieldSpectrum {
    std::vector<double> k;                 // one-sided grid
    std::vector<std::complex<double>> b;   // field coefficients [T]
    double modelRms = 0.0;                 // sqrt(sum |b_k|^2) [T]
};
FieldSpectrum delta_b_spectrum(const RoughnessModel& rough, double I, double z);

// Real-space field realization sum_n 2|b_n| cos(k_n x + phi_n) at position x.
double delta_b_realized(const RoughnessModel& rough, double I, double z, double x);

// Root-mean-square of the realized field over [x0, x0 + window], sampled at
// `samples` points (rotation-recurrence accelerated; no trig in the inner
// loop).
double delta_b_realized_rms(const RoughnessModel& rough, double I, double z,
                            double x0, double window, int samples);

// Closed-form relative field corrugation dB_rms / B0 at height z,
//   dB/B0 = A(alpha) dy_rms / (2z)^{3/2 - alpha},
// with A(alpha)^2 = (L/pi) / sum_k k^{-2 alpha} * [1 + (pi/4)(3 - 2 alpha)]
// * Gamma(3 - 2 alpha) and dy_rms the model rms over the same grid.  Valid in
// the near-field regime z << L; the warning flag trips at z >= L/10.
struct CorrugationRms {
    double ratio = 0.0;        // dB_rms / B0
    bool farFieldWarning = false;
};
CorrugationRms corrugation_rms(const RoughnessModel& rough, double z);

// A(alpha) itself; sumK is sum_k k^{-2alpha} over the intended grid.
double corrugation_amplitude_factor(double alpha, double L, double sumK);

// Idealized grid sums quoted for the two canonical exponents
// (L/lambdaMin for alpha = 0, L^2/24 for alpha = 1).
double idealized_spectral_sum(double alpha, double L, double lambdaMin);

// Direct Biot-Savart evaluation of the per-mode field amplitude at height z
// above the center of a wire whose centerline (symmetric edge displacement)
// or width (antisymmetric) is modulated as dyAmplitude * cos(k x).  The wire
// volume is discretized with at least cellsPerLambda cells per wavelength
// (>= 8 enforced) and the axial extent covers the kernel support.  Returns
// the fitted amplitude of dB_x.
double biot_savart_oracle(double I, double w, double h, double k,
                          double dyAmplitude, double z,
                          bool antisymmetric = false, int cellsPerLambda = 16);

} // namespace atomchip
