#pragma once

// Modified Bessel functions of the second kind, K0, K1, K2, for positive
// real argument.  Implemented in-repo so the magnetostatic kernels carry no
// external special-function dependency: power series below u = 2, Temme's
// continued-fraction evaluation above.  Relative error < 1e-10 across
// [1e-4, 50] (verified against a frozen high-precision table).

namespace atomchip {

double bessel_K0(double u);
double bessel_K1(double u);
double bessel_K2(double u);

// Leading asymptotic form sqrt(pi/2u) e^{-u} (1 + 3/(8u)), used only as a
// cross-check of the full implementation at moderate argument.
double bessel_K1_asymptotic(double u);

} // namespace atomchip
