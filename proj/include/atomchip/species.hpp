#pragma once

#include <stdexcept>
#include <string>

#include "atomchip/constants.hpp"
#include "atomchip/units.hpp"

namespace atomchip {

// A trappable atomic species in a given Zeeman sublevel |F, mF>.
//
// Sign convention: muA = gF * mF * muB is stored as the (non-negative)
// projection of the magnetic moment on the local field for a weak-field
// seeking state, so the trapping potential is U = +muA * |B|.  States with
// gF * mF <= 0 are not weak-field seekers and are rejected wherever a trap
// is built around them; muA itself may still be queried (it is zero for
// mF = 0).
struct AtomSpecies {
    std::string name;        // e.g. "Rb87"
    double mass = 0.0;       // [kg]
    double gF = 0.0;         // Lande g-factor of the hyperfine manifold
    int F = 0;               // total spin of the manifold
    int mF = 0;              // magnetic sublevel of the working state
    double alpha0 = 0.0;     // static polarizability volume [m^3]
    double scatteringLength = 0.0; // s-wave scattering length [m]

    // Magnetic moment projection of the working state [J/T].
    double muA() const { return gF * static_cast<double>(mF) * constants::muB; }

    std::string stateLabel() const {
        return "|F=" + std::to_string(F) + ",mF=" + std::to_string(mF) + ">";
    }

    void validate() const {
        if (mass <= 0.0) throw std::invalid_argument("AtomSpecies: mass must be positive");
        if (std::abs(mF) > F) throw std::invalid_argument("AtomSpecies: |mF| must not exceed F");
        if (alpha0 < 0.0) throw std::invalid_argument("AtomSpecies: polarizability must be non-negative");
    }

    // 87Rb in the F=2 manifold (gF = 1/2); default working state |2,2>.
    static AtomSpecies rb87(int mF = 2) {
        AtomSpecies s;
        s.name = "Rb87";
        s.mass = 1.44316e-25;
        s.gF = 0.5;
        s.F = 2;
        s.mF = mF;
        s.alpha0 = units::polarizability_volume_si(47.3e-24); // 47.3e-24 cm^3
        s.scatteringLength = 5.2e-9;
        s.validate();
        return s;
    }
};

// Magnetic moment projection [J/T] of a state.
inline double magnetic_moment(const AtomSpecies& s) { return s.muA(); }
inline double magnetic_moment(double gF, int mF) {
    return gF * static_cast<double>(mF) * constants::muB;
}

} // namespace atomchip
