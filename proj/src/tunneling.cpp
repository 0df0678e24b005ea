#include "atomchip/tunneling.hpp"

#include "atomchip/bessel.hpp"
#include "atomchip/constants.hpp"
#include "atomchip/quadrature.hpp"
#include "atomchip/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace atomchip {

using constants::hbar;
using constants::mu0;
using constants::pi;

WkbResult wkb_probability(const std::function<double(double)>& V, double E,
                          double mass, double xlo, double xhi,
                          const WkbOptions& opts) {
    if (opts.gridPoints < 50)
        throw std::invalid_argument("wkb_probability: need at least 50 scan points");
    if (!(xhi > xlo))
        throw std::invalid_argument("wkb_probability: empty bracket");
    if (!(mass > 0.0))
        throw std::invalid_argument("wkb_probability: mass must be positive");

    // Scan for the classically forbidden region.
    const int n = opts.gridPoints;
    const double dx = (xhi - xlo) / (n - 1);
    double vmax = -INFINITY;
    int firstAbove = -1, lastAbove = -1;
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = V(xlo + i * dx);
        vmax = std::max(vmax, v[i]);
        if (v[i] > E) {
            if (firstAbove < 0) firstAbove = i;
            lastAbove = i;
        }
    }

    WkbResult res;
    res.barrierMax = vmax;
    if (firstAbove < 0) { // E clears the barrier everywhere
        res.action = 0.0;
        res.probability = 1.0;
        return res;
    }

    // Refine the outermost crossings V(x) = E.  If the barrier is already
    // above E at a bracket edge the turning point collapses onto that edge.
    auto excess = [&](double x) { return V(x) - E; };
    double x1 = xlo, x2 = xhi;
    if (firstAbove > 0)
        x1 = roots::find_root(excess, xlo + (firstAbove - 1) * dx,
                              xlo + firstAbove * dx, opts.turningRelTol);
    if (lastAbove < n - 1)
        x2 = roots::find_root(excess, xlo + lastAbove * dx,
                              xlo + (lastAbove + 1) * dx, opts.turningRelTol);
    res.x1 = x1;
    res.x2 = x2;

    // Action integrand; clamped at zero so inner dips below E (double-humped
    // barriers) contribute nothing.
    auto kappa = [&](double x) {
        const double ex = V(x) - E;
        return ex > 0.0 ? std::sqrt(2.0 * mass * ex) : 0.0;
    };
    const double integral =
        quad::integrate_endpoint_singular(kappa, x1, x2, opts.actionRelTol);
    res.action = 2.0 * integral / hbar;
    res.probability = std::exp(-res.action);
    return res;
}

namespace {

// Transmission through the crossing-wire bump at energy E as a function of
// current, used by the sensitivity solver.
double crossing_probability(const AtomSpecies& atom, double z, double E, double I) {
    const CrossingWireBarrier b = x_wire_barrier(atom, I, z, 0.0);
    // The barrier has half-width z; +-12 z covers it amply at the relevant
    // transmissions.
    auto V = [&](double x) { return b.excess(x); };
    return wkb_probability(V, E, atom.mass, -12.0 * z, 12.0 * z).probability;
}

} // namespace

double current_sensitivity(const AtomSpecies& atom, double z, double E,
                           double Pfrom, double Pto) {
    if (!(E > 0.0))
        throw std::domain_error("current_sensitivity: energy must be positive");
    if (!(Pfrom > 0.0) || Pfrom >= 1.0 || !(Pto > 0.0) || Pto >= 1.0)
        throw std::domain_error("current_sensitivity: probabilities must lie in (0,1)");
    if (Pfrom >= Pto)
        throw std::domain_error(
            "current_sensitivity: the window runs from low to high "
            "transmission (Pfrom < Pto)");

    // Currents below Ic leave the barrier top under E (P = 1); transmissions
    // in (0,1) need I > Ic.
    const double Ic = 2.0 * pi * z * E / (atom.muA() * mu0);
    auto solveFor = [&](double P) {
        const double target = std::log(P);
        auto f = [&](double I) {
            return std::log(crossing_probability(atom, z, E, I)) - target;
        };
        return roots::find_root_expanding(f, Ic * (1.0 + 1e-9), 2.0 * Ic, 1e-10);
    };
    const double Ifrom = solveFor(Pfrom);
    const double Ito = solveFor(Pto);
    return (Ifrom - Ito) / Ifrom;
}

double resolution_height(const AtomSpecies& atom, double I, double lambda,
                         double eta, double dyCenter) {
    if (!(lambda > 0.0))
        throw std::domain_error("resolution_height: lattice period must be positive");
    if (!(eta > 0.0))
        throw std::domain_error("resolution_height: resolvability margin must be positive");
    if (I <= 0.0 || dyCenter <= 0.0) return 0.0; // no lattice: nothing resolves

    const double k = 2.0 * pi / lambda;
    // V0(d) >= (eta^2/16) hbar^2 k^2 / m  <=>  K1(k d) >= rhs.
    const double rhs =
        eta * eta * hbar * hbar / (16.0 * atom.mass * atom.muA() * mu0 * I * dyCenter);
    // K1 decreases monotonically from +inf, so a solution exists for any
    // positive rhs; find the crossing K1(u) = rhs.
    auto f = [&](double u) { return bessel_K1(u) - rhs; };
    double lo = 1e-8, hi = 1.0;
    while (f(hi) > 0.0 && hi < 1e4) hi *= 2.0;
    if (f(hi) > 0.0) return hi / k; // rhs microscopically small: cap the search
    const double u = roots::find_root(f, lo, hi, 1e-12);
    return u / k;
}

// --- density profile -------------------------------------------------------

double DensityProfile::density(double x, double y, double z) const {
    if (!thomasFermi) {
        // Single-particle Gaussian ground state, |phi_0|^2.
        double n = N;
        const double r[3] = {x, y, z};
        for (int i = 0; i < 3; ++i) {
            const double s = radii[i];
            n *= std::exp(-r[i] * r[i] / (s * s)) / (std::sqrt(pi) * s);
        }
        return n;
    }
    const double q = mu - 0.5 * mass *
                              (omega[0] * omega[0] * x * x +
                               omega[1] * omega[1] * y * y +
                               omega[2] * omega[2] * z * z);
    if (q <= 0.0) return 0.0;
    return q * mass / (4.0 * pi * hbar * hbar * aScatter);
}

double DensityProfile::columnHalfLength(double x, double y) const {
    const double q = mu - 0.5 * mass * (omega[0] * omega[0] * x * x +
                                        omega[1] * omega[1] * y * y);
    if (q <= 0.0) return 0.0;
    return std::sqrt(2.0 * q / mass) / omega[2];
}

double DensityProfile::columnFraction(double x, double y) const {
    if (!thomasFermi) {
        double p = 1.0;
        const double r[2] = {x, y};
        for (int i = 0; i < 2; ++i) {
            const double s = radii[i];
            p *= std::exp(-r[i] * r[i] / (s * s)) / (std::sqrt(pi) * s);
        }
        return p;
    }
    const double q = mu - 0.5 * mass * (omega[0] * omega[0] * x * x +
                                        omega[1] * omega[1] * y * y);
    if (q <= 0.0) return 0.0;
    const double Z = std::sqrt(2.0 * q / mass) / omega[2];
    // int (q - m wz^2 z^2 / 2) dz over [-Z, Z] = (4/3) q Z.
    return (4.0 / 3.0) * q * Z * mass / (4.0 * pi * hbar * hbar * aScatter) / N;
}

double DensityProfile::meanVz2() const {
    // Zero-point motion plus, in the interacting case, the Thomas-Fermi
    // interaction contribution (2/7) mu per particle along each release axis.
    double v2 = 0.5 * hbar * omega[2] / mass;
    if (thomasFermi) v2 += (2.0 / 7.0) * mu / mass;
    return v2;
}

DensityProfile thomas_fermi_density(const AtomSpecies& atom,
                                    const std::array<double, 3>& omega, double N) {
    for (double w : omega)
        if (!(w > 0.0))
            throw std::domain_error("thomas_fermi_density: trap frequencies must be positive");
    if (!(N >= 1.0))
        throw std::domain_error("thomas_fermi_density: need at least one atom");

    DensityProfile p;
    p.mass = atom.mass;
    p.aScatter = atom.scatteringLength;
    p.omega = omega;
    p.N = N;

    if (N < 1.5) { // single atom: harmonic-oscillator ground state
        p.thomasFermi = false;
        p.mu = 0.5 * hbar * (omega[0] + omega[1] + omega[2]);
        for (int i = 0; i < 3; ++i) p.radii[i] = std::sqrt(hbar / (atom.mass * omega[i]));
        return p;
    }

    if (!(atom.scatteringLength > 0.0))
        throw std::domain_error("thomas_fermi_density: interacting profile needs a > 0");

    const double wbar = std::cbrt(omega[0] * omega[1] * omega[2]);
    const double abar = std::sqrt(hbar / (atom.mass * wbar));
    p.mu = 0.5 * hbar * wbar *
           std::pow(15.0 * N * atom.scatteringLength / abar, 0.4);
    for (int i = 0; i < 3; ++i)
        p.radii[i] = std::sqrt(2.0 * p.mu / atom.mass) / omega[i];
    return p;
}

} // namespace atomchip
