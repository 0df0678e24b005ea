#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace atomchip {

// Rectangular wire cross-section: width w (along y), thickness h (along z),
// length L (along x).  The trapping physics assumes an effectively infinite
// straight wire, so L must dwarf the transverse dimensions.
struct WireGeometry {
    double w = 0.0; // [m]
    double h = 0.0; // [m]
    double L = 0.0; // [m]

    void validate() const {
        if (w <= 0.0 || h <= 0.0 || L <= 0.0)
            throw std::invalid_argument("WireGeometry: all dimensions must be positive");
        if (L < 10.0 * std::min(w, h))
            throw std::invalid_argument(
                "WireGeometry: length must be at least 10x the smaller transverse dimension");
    }

    double area() const { return w * h; }
};

// One dielectric layer.  thickness = +inf marks the semi-infinite bottom
// substrate; exactly one such layer must terminate the stack.
struct Layer {
    double epsilon = 1.0;   // relative permittivity (static)
    double thickness = 0.0; // [m]; infinity for the substrate
    bool semiInfinite() const { return std::isinf(thickness); }
};

// Planar stack listed top (closest to the atom) to bottom.
struct LayerStack {
    std::vector<Layer> layers;

    void validate() const {
        if (layers.empty())
            throw std::invalid_argument("LayerStack: at least one layer required");
        for (std::size_t i = 0; i < layers.size(); ++i) {
            const Layer& l = layers[i];
            if (l.epsilon < 1.0)
                throw std::invalid_argument("LayerStack: relative permittivity must be >= 1");
            const bool last = (i + 1 == layers.size());
            if (last && !l.semiInfinite())
                throw std::invalid_argument("LayerStack: bottom layer must be semi-infinite");
            if (!last && (!(l.thickness > 0.0) || l.semiInfinite()))
                throw std::invalid_argument(
                    "LayerStack: interior layers need positive finite thickness");
        }
    }

    // Depth of the top of layer i below the stack surface.
    double depthOfLayer(std::size_t i) const {
        double depth = 0.0;
        for (std::size_t j = 0; j < i; ++j) depth += layers[j].thickness;
        return depth;
    }
};

// Diagonal conductivity tensor of the noise-producing material, aligned with
// the wire axes (x along the wire, y across, z vertical), plus its
// temperature.  Off-diagonal terms are assumed zero (crystal axes aligned).
struct ConductivityTensor {
    double sxx = 0.0; // [S/m]
    double syy = 0.0;
    double szz = 0.0;
    double T = 0.0;   // [K]

    void validate() const {
        if (sxx <= 0.0 || syy <= 0.0 || szz <= 0.0)
            throw std::invalid_argument("ConductivityTensor: diagonal entries must be positive");
        if (T <= 0.0)
            throw std::invalid_argument("ConductivityTensor: temperature must be positive");
    }

    static ConductivityTensor isotropic(double sigma0, double T) {
        return ConductivityTensor{sigma0, sigma0, sigma0, T};
    }
};

// Operating point of a trap above the chip surface.
struct TrapContext {
    double d = 0.0;        // atom-surface distance [m]
    double I = 0.0;        // wire current [A]
    double B0 = 0.0;       // field at the trap bottom (Ioffe field) [T]
    double omega0f = 0.0;  // transition angular frequency probed by noise [rad/s]
    std::array<double, 3> trapFrequencies{0.0, 0.0, 0.0}; // (wx, wy, wz) [rad/s]
    double mu = 0.0;       // chemical potential [J]
    double N = 0.0;        // atom number

    void validate() const {
        if (d <= 0.0) throw std::invalid_argument("TrapContext: distance must be positive");
        if (B0 < 0.0) throw std::invalid_argument("TrapContext: Ioffe field must be non-negative");
        for (double w : trapFrequencies)
            if (w < 0.0) throw std::invalid_argument("TrapContext: trap frequencies must be non-negative");
        if (N < 0.0) throw std::invalid_argument("TrapContext: atom number must be non-negative");
    }
};

} // namespace atomchip
