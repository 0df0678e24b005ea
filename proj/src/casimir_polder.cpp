#include "atomchip/casimir_polder.hpp"

#include "atomchip/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace atomchip {

using constants::c;
using constants::hbar;
using constants::pi;

namespace {
constexpr double kShortRange = 100e-9; // retarded form marginal below this
} // namespace

double planar_strength(double epsilon) {
    if (epsilon < 1.0)
        throw std::domain_error("planar_strength: permittivity must be >= 1");
    if (std::isinf(epsilon)) return 0.75;
    return 0.75 * (epsilon - 1.0) / (epsilon + 1.0);
}

CpPotential planar_cp(double alpha0, const LayerStack& stack, double z) {
    stack.validate();
    if (!(z > 0.0)) throw std::domain_error("planar_cp: distance must be positive");
    if (!(alpha0 > 0.0)) throw std::domain_error("planar_cp: polarizability must be positive");

    // Top layer as a half-space at z; each deeper interface contributes the
    // strength step between the media it separates, at its own distance.
    double U = 0.0;
    double prevStrength = planar_strength(stack.layers.front().epsilon);
    U -= hbar * c * alpha0 / (2.0 * pi) * prevStrength / std::pow(z, 4);
    for (std::size_t i = 1; i < stack.layers.size(); ++i) {
        const double s = planar_strength(stack.layers[i].epsilon);
        const double depth = stack.depthOfLayer(i);
        U -= hbar * c * alpha0 / (2.0 * pi) * (s - prevStrength) /
             std::pow(z + depth, 4);
        prevStrength = s;
    }

    CpPotential out;
    out.U = U;
    out.strength = -U * 2.0 * pi * std::pow(z, 4) / (hbar * c * alpha0);
    out.shortRange = z < kShortRange;
    return out;
}

double cylinder_strength(double x) {
    if (!(x > 0.0) || x >= 1.0)
        throw std::domain_error("cylinder_strength: need 0 < a/R < 1");
    auto thick = [](double t) { return 0.53 * t + 0.22; };
    auto thin = [](double t) { return -2.0 / (3.0 * std::log(t)); };
    if (x >= 0.2) return thick(x);
    if (x <= 0.1) return thin(x);
    // Monotone cubic Hermite blend between the thin-wire log form at 0.1 and
    // the linear fit at 0.2; endpoint slopes limited against the secant so
    // the joint cannot overshoot.
    const double x0 = 0.1, x1 = 0.2;
    const double f0 = thin(x0), f1 = thick(x1);
    const double secant = (f1 - f0) / (x1 - x0);
    double m0 = 2.0 / (3.0 * x0 * std::log(x0) * std::log(x0));
    double m1 = 0.53;
    m0 = std::min(m0, 3.0 * secant);
    m1 = std::min(m1, 3.0 * secant);
    const double t = (x - x0) / (x1 - x0);
    const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
    const double h10 = t * (1.0 - t) * (1.0 - t);
    const double h01 = t * t * (3.0 - 2.0 * t);
    const double h11 = t * t * (t - 1.0);
    return h00 * f0 + h10 * (x1 - x0) * m0 + h01 * f1 + h11 * (x1 - x0) * m1;
}

CpPotential cylinder_cp(double alpha0, double a, double R) {
    if (!(a > 0.0)) throw std::domain_error("cylinder_cp: radius must be positive");
    if (R <= a) throw std::domain_error("cylinder_cp: atom must sit outside the cylinder");
    if (!(alpha0 > 0.0)) throw std::domain_error("cylinder_cp: polarizability must be positive");
    const double s = R - a;
    const double F = cylinder_strength(a / R);
    CpPotential out;
    out.U = -hbar * c * alpha0 / (2.0 * pi) * F / std::pow(s, 4);
    out.strength = F;
    out.shortRange = s < kShortRange;
    return out;
}

CpPotential combined_cp(const AtomSpecies& atom, const LayerStack& stack,
                        double wireHeight, double z, CpBodies bodies) {
    if (!(wireHeight > 0.0))
        throw std::domain_error("combined_cp: wire height must be positive");
    if (!(z > wireHeight))
        throw std::domain_error("combined_cp: atom must sit above the wire top");

    CpPotential out;
    double U = 0.0;
    if (bodies != CpBodies::SurfaceOnly) {
        const double a = 0.5 * wireHeight;
        const double R = z - 0.5 * wireHeight; // distance to the cylinder axis
        U += cylinder_cp(atom.alpha0, a, R).U;
    }
    if (bodies != CpBodies::WireOnly) {
        U += planar_cp(atom.alpha0, stack, z).U;
    }
    const double s = (bodies == CpBodies::SurfaceOnly) ? z : z - wireHeight;
    out.U = U;
    out.strength = -U * 2.0 * pi * std::pow(s, 4) / (hbar * c * atom.alpha0);
    out.shortRange = s < kShortRange;
    return out;
}

ModifiedBarrier cp_modified_barrier(const std::function<double(double)>& magnetic,
                                    const std::function<double(double)>& cp,
                                    double zlo, double zhi, double probeEnergy,
                                    int scanPoints) {
    if (!(zhi > zlo)) throw std::invalid_argument("cp_modified_barrier: empty bracket");
    if (scanPoints < 50)
        throw std::invalid_argument("cp_modified_barrier: need at least 50 scan points");

    ModifiedBarrier out;
    out.potential = [magnetic, cp](double zz) { return magnetic(zz) + cp(zz); };
    double best = -INFINITY, bestZ = zlo;
    const double dz = (zhi - zlo) / (scanPoints - 1);
    for (int i = 0; i < scanPoints; ++i) {
        const double zz = zlo + i * dz;
        const double v = out.potential(zz);
        if (v > best) {
            best = v;
            bestZ = zz;
        }
    }
    // Parabolic refinement around the scan maximum.
    if (bestZ > zlo && bestZ < zhi) {
        const double vm = out.potential(bestZ - dz);
        const double v0 = best;
        const double vp = out.potential(bestZ + dz);
        const double denom = vm - 2.0 * v0 + vp;
        if (denom < 0.0) {
            const double shift = 0.5 * (vm - vp) / denom;
            if (std::abs(shift) <= 1.0) {
                bestZ += shift * dz;
                best = out.potential(bestZ);
            }
        }
    }
    out.peak = best;
    out.peakPosition = bestZ;
    out.barrierSurvives = best > probeEnergy;
    return out;
}

} // namespace atomchip
