#include "atomchip/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace atomchip {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

// Power-series evaluation of K0 and K1 for 0 < x < 2, via
//   I_nu(x)  = sum_k (x/2)^{nu+2k} / (k! (k+nu)!)
//   K0(x)    = -(ln(x/2) + gamma) I0(x) + sum_k h_k (x^2/4)^k / (k!)^2
//   K1(x)    =  ln(x/2) I1(x) + 1/x - (x/4) sum_k [h_k + h_{k+1}] (x^2/4)^k / (k!(k+1)!)
// with harmonic numbers h_0 = 0, h_k = 1 + 1/2 + ... + 1/k (psi(k+1) = -gamma + h_k).
void bessel_k01_series(double x, double& k0, double& k1) {
    const double q = 0.25 * x * x; // (x/2)^2
    const double lg = std::log(0.5 * x);

    // K0
    {
        double term = 1.0;   // (q^k) / (k!)^2
        double hk = 0.0;     // harmonic number h_k
        double sumI = term;  // I0 series
        double sumH = 0.0;   // sum with harmonic weights
        for (int k = 1; k < 60; ++k) {
            term *= q / (static_cast<double>(k) * k);
            hk += 1.0 / k;
            sumI += term;
            sumH += term * hk;
            if (term * (hk + 1.0) < 1e-18 * (std::abs(sumH) + sumI)) break;
        }
        k0 = -(lg + kEulerGamma) * sumI + sumH;
    }

    // K1
    {
        double term = 1.0;     // q^k / (k!(k+1)!)
        double hk = 0.0;       // h_k
        double hk1 = 1.0;      // h_{k+1}
        double sumI = term;    // I1(x)/(x/2)
        double sumW = term * (hk + hk1);
        for (int k = 1; k < 60; ++k) {
            term *= q / (static_cast<double>(k) * (k + 1.0));
            hk += 1.0 / k;
            hk1 += 1.0 / (k + 1.0);
            sumI += term;
            sumW += term * (hk + hk1);
            if (term * (hk + hk1 + 1.0) < 1e-18 * (std::abs(sumW) + sumI)) break;
        }
        // psi(k+1) + psi(k+2) = -2 gamma + h_k + h_{k+1} splits the weighted
        // sum into a -2 gamma multiple of the I1 series plus sumW.
        const double i1 = 0.5 * x * sumI;
        k1 = lg * i1 + 1.0 / x + 0.5 * x * kEulerGamma * sumI - 0.25 * x * sumW;
    }
}

// Temme's continued-fraction evaluation (order mu = 0) for x >= 2, giving K0
// and K1 simultaneously.  Converges in a few dozen iterations to full double
// precision on [2, inf).
void bessel_k01_cf2(double x, double& k0, double& k1) {
    constexpr int kMaxIter = 400;
    constexpr double kEps = 1e-16;

    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25; // 1/4 - mu^2 with mu = 0
    double q = a1;
    double cc = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= kMaxIter; ++i) {
        a -= 2.0 * (i - 1);
        cc = -a * cc / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += cc * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    h = a1 * h;
    k0 = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    k1 = k0 * (x + 0.5 - h) / x;
}

void bessel_k01(double x, double& k0, double& k1) {
    if (!(x > 0.0))
        throw std::domain_error("bessel_K: argument must be positive");
    if (x < 2.0)
        bessel_k01_series(x, k0, k1);
    else
        bessel_k01_cf2(x, k0, k1);
}

} // namespace

double bessel_K0(double u) {
    double k0, k1;
    bessel_k01(u, k0, k1);
    return k0;
}

double bessel_K1(double u) {
    double k0, k1;
    bessel_k01(u, k0, k1);
    return k1;
}

double bessel_K2(double u) {
    double k0, k1;
    bessel_k01(u, k0, k1);
    return k0 + 2.0 * k1 / u; // upward recurrence K_{nu+1} = K_{nu-1} + (2 nu / u) K_nu
}

double bessel_K1_asymptotic(double u) {
    return std::sqrt(kPi / (2.0 * u)) * std::exp(-u) * (1.0 + 3.0 / (8.0 * u));
}

} // namespace atomchip
