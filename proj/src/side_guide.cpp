#include "atomchip/side_guide.hpp"

#include "atomchip/constants.hpp"
#include "atomchip/quadrature.hpp"
#include "atomchip/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace atomchip {

using constants::hbar;
using constants::mu0;
using constants::pi;

void SideGuideSystem::validate() const {
    atom.validate();
    wire.validate();
    stack.validate();
    if (!(I > 0.0))
        throw std::domain_error("SideGuideSystem: current must be positive");
    if (!(d > wire.h))
        throw std::domain_error("SideGuideSystem: trap must sit above the wire top");
    if (!(B0 > 0.0))
        throw std::domain_error("SideGuideSystem: Ioffe field must be positive");
    if (!(omegaXFactor > 0.0) || omegaXFactor > 1.0)
        throw std::domain_error("SideGuideSystem: axial factor must lie in (0, 1]");
    if (!(N >= 1.0))
        throw std::domain_error("SideGuideSystem: need at least one atom");
    if (!(atom.muA() > 0.0))
        throw std::domain_error("SideGuideSystem: atom must be weak-field seeking");
}

double SideGuideSystem::biasField() const { return mu0 * I / (2.0 * pi * r0()); }

double SideGuideSystem::gradient() const {
    const double r = r0();
    return mu0 * I / (2.0 * pi * r * r);
}

double SideGuideSystem::omegaPerp() const {
    return gradient() * std::sqrt(atom.muA() / (atom.mass * B0));
}

std::array<double, 3> SideGuideSystem::trapFrequencies() const {
    const double wp = omegaPerp();
    return {omegaXFactor * wp, wp, wp};
}

double SideGuideSystem::larmorOmega() const {
    return std::abs(atom.gF) * constants::muB * B0 / hbar;
}

double SideGuideSystem::fieldMagnitude(double y, double z) const {
    const double u = z - wireCenterZ();
    const double rr = y * y + u * u;
    if (rr <= 0.0) return INFINITY;
    const double k = mu0 * I / (2.0 * pi); // field = k / r around the wire
    const double by = biasField() - k * u / rr;
    const double bz = k * y / rr;
    return std::sqrt(B0 * B0 + by * by + bz * bz);
}

double SideGuideSystem::magneticPotential(double y, double z) const {
    return atom.muA() * (fieldMagnitude(y, z) - B0);
}

double SideGuideSystem::dispersionPotential(double y, double z, CpBodies bodies,
                                            double cpScale) const {
    if (cpScale == 0.0) return 0.0;
    double u = 0.0;
    if (bodies == CpBodies::Combined || bodies == CpBodies::SurfaceOnly) {
        if (z <= 0.0) return -1e-18; // inside the stack: already lost
        u += planar_cp(atom.alpha0, stack, z).U;
    }
    if (bodies == CpBodies::Combined || bodies == CpBodies::WireOnly) {
        const double a = 0.5 * wire.h;
        const double dz = z - wireCenterZ();
        const double R = std::sqrt(y * y + dz * dz);
        if (R <= a * (1.0 + 1e-12)) return -1e-18; // inside the wire body
        u += cylinder_cp(atom.alpha0, a, R).U;
    }
    return cpScale * u;
}

DensityProfile SideGuideSystem::densityProfile() const {
    return thomas_fermi_density(atom, trapFrequencies(), N);
}

namespace {

// Height of the potential minimum along the vertical line at transverse
// offset y.  For the pure guide field the minimum of the transverse field
// magnitude sits at u = (r0 + sqrt(r0^2 + 4 y^2))/2 above the wire center;
// the dispersion tail only nudges it, so a local scan around the seed with a
// parabolic polish is enough.
double column_well_z(const SideGuideSystem& sys,
                     const std::function<double(double, double)>& V, double y) {
    const double r = sys.r0();
    const double seed =
        sys.wireCenterZ() + 0.5 * (r + std::sqrt(r * r + 4.0 * y * y));
    const int n = 61;
    const double zlo = 0.6 * seed, zhi = 1.5 * seed;
    double best = seed, vbest = V(y, seed);
    for (int i = 0; i < n; ++i) {
        const double z = zlo + (zhi - zlo) * i / (n - 1);
        const double v = V(y, z);
        if (v < vbest) { vbest = v; best = z; }
    }
    // Parabolic refinement on the scan triple around the minimum.
    const double h = (zhi - zlo) / (n - 1);
    const double vm = V(y, best - h), vp = V(y, best + h);
    const double denom = vm - 2.0 * vbest + vp;
    if (denom > 0.0) {
        const double shift = 0.5 * h * (vm - vp) / denom;
        if (std::abs(shift) < h) best += shift;
    }
    return best;
}

struct ColumnChannel {
    double transmission = 0.0;
    bool carriesAtoms = false;
    bool barrierFree = false;
    bool open = false;
};

// Escape channel of the column at transverse offset y: transmission of the
// barrier between the well bottom and the chip at total energy `level`
// (measured on the same absolute scale as V).
ColumnChannel column_channel(const SideGuideSystem& sys,
                             const std::function<double(double, double)>& V,
                             double y, double level, int zScan) {
    ColumnChannel ch;
    const double zWell = column_well_z(sys, V, y);
    if (!(V(y, zWell) < level)) return ch; // no trapped atoms on this column
    ch.carriesAtoms = true;

    // Lower end of the escape path: just above the wire surface when the
    // column runs into it, otherwise just above the stack.
    const double a = 0.5 * sys.wire.h;
    double zStop;
    if (std::abs(y) < a) {
        const double clear = std::sqrt(a * a - y * y);
        zStop = sys.wireCenterZ() + clear + std::max(0.25e-9, 1e-3 * a);
    } else {
        zStop = 0.5e-9;
    }
    if (zStop >= zWell) return ch; // geometrically sealed

    auto Vz = [&](double z) { return V(y, z); };
    WkbOptions opts;
    opts.gridPoints = std::max(200, zScan);
    const WkbResult res = wkb_probability(Vz, level, sys.atom.mass, zStop, zWell, opts);
    if (!res.x1.has_value()) { // never rises above the level: free escape
        ch.barrierFree = true;
        ch.open = true;
        ch.transmission = 1.0;
        return ch;
    }
    // A lower turning point stuck at the bracket edge means the potential
    // stays above the level all the way to the body: the channel is sealed
    // and the (huge) truncated action only underestimates that.
    ch.open = *res.x1 > zStop + 1e-12;
    ch.transmission = res.probability;
    return ch;
}

} // namespace

SurfaceTunnelingResult surface_tunneling_rate(const SideGuideSystem& sys,
                                              const SurfaceTunnelingOptions& opts) {
    sys.validate();
    if (opts.ySamples < 9)
        throw std::invalid_argument("surface_tunneling_rate: need at least 9 columns");
    if (!(opts.cpScale >= 0.0))
        throw std::domain_error("surface_tunneling_rate: cpScale must be >= 0");

    const DensityProfile prof = sys.densityProfile();
    auto V = [&](double y, double z) {
        return sys.magneticPotential(y, z) +
               sys.dispersionPotential(y, z, opts.bodies, opts.cpScale);
    };

    // Absolute energy of the cloud surface: full-potential bottom of the
    // central column plus the chemical potential.
    const double vBottom = V(0.0, column_well_z(sys, V, 0.0));
    const double level = vBottom + prof.mu;

    // Transverse extent of the cloud.
    const double yMax = prof.thomasFermi ? prof.radii[1] : 4.0 * prof.radii[1];
    const double vbar = std::sqrt(prof.meanVz2());

    SurfaceTunnelingResult out;

    // The channel is symmetric in y; sample half the cloud and integrate the
    // density-weighted transmission with the trapezoid rule (the weight
    // vanishes smoothly at the edge).
    const int n = opts.ySamples;
    const double dy = yMax / (n - 1);
    double integral = 0.0; // int T(y) q0(y)^{3/2} dy (TF) or int T g(y) dy (Gaussian)
    for (int i = 0; i < n; ++i) {
        const double y = i * dy;
        double weight;
        if (prof.thomasFermi) {
            const double q0 =
                prof.mu - 0.5 * prof.mass * prof.omega[1] * prof.omega[1] * y * y;
            if (q0 <= 0.0) continue;
            weight = std::pow(q0, 1.5);
        } else {
            const double s = prof.radii[1];
            weight = std::exp(-y * y / (s * s)) / (std::sqrt(pi) * s);
        }
        const ColumnChannel ch = column_channel(sys, V, y, level, opts.zScan);
        if (!ch.carriesAtoms) continue;
        ++out.columns;
        if (ch.open) ++out.openColumns;
        if (ch.barrierFree) out.anyBarrierFree = true;
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        integral += 2.0 * w * dy * weight * ch.transmission; // both signs of y
    }

    if (prof.thomasFermi) {
        // Gamma = vbar sqrt(2 m) / (9 pi hbar^2 a N wx) * int q0^{3/2} T dy,
        // the closed form of iint dx dy P(x,y) [vbar / 2L(x,y)] T(y) for the
        // Thomas-Fermi column density and well length L = 2 Z(x,y).
        out.rate = vbar * std::sqrt(2.0 * prof.mass) /
                   (9.0 * pi * hbar * hbar * prof.aScatter * prof.N *
                    prof.omega[0]) *
                   integral;
    } else {
        // Single-atom ground state: attempt rate vbar / 2L with L = 2 sigma_z.
        const double L = 2.0 * prof.radii[2];
        out.rate = vbar / (2.0 * L) * integral;
    }

    out.lifetime = out.rate > 0.0 ? 1.0 / out.rate : INFINITY;
    return out;
}

} // namespace atomchip
