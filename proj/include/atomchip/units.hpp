#pragma once

#include "atomchip/constants.hpp"

// Unit conversions between the internal SI representation and the
// user-facing units common in the atom-chip literature (micrometers,
// nanometers, milliamps, microkelvin, gauss, cm^3 polarizability volumes).
// All library code works in SI; conversions happen only at the boundaries.

namespace atomchip::units {

inline constexpr double um = 1e-6;   // micrometer [m]
inline constexpr double nm = 1e-9;   // nanometer [m]
inline constexpr double mA = 1e-3;   // milliamp [A]
inline constexpr double uA = 1e-6;   // microamp [A]

// Magnetic field
inline constexpr double gauss_to_tesla(double gauss) { return gauss * 1e-4; }
inline constexpr double tesla_to_gauss(double tesla) { return tesla * 1e4; }

// Temperature expressed as energy
inline constexpr double microkelvin_to_joule(double uK) {
    return uK * 1e-6 * constants::kB;
}
inline constexpr double joule_to_microkelvin(double joule) {
    return joule / (1e-6 * constants::kB);
}

// Lengths
inline constexpr double micrometer_to_meter(double x) { return x * um; }
inline constexpr double meter_to_micrometer(double x) { return x / um; }
inline constexpr double nanometer_to_meter(double x) { return x * nm; }
inline constexpr double meter_to_nanometer(double x) { return x / nm; }

// Current
inline constexpr double milliamp_to_amp(double i) { return i * mA; }
inline constexpr double amp_to_milliamp(double i) { return i / mA; }

// Polarizability. Tabulated atomic polarizabilities quoted in cm^3 are
// polarizability *volumes*; the SI volume is used directly by the
// dispersion-potential formulas (U ~ hbar*c*alpha / z^4 carries units of
// energy only when alpha is a volume). The conventional SI polarizability
// (C m^2 / V) is 4*pi*eps0 times the volume.
inline constexpr double cm3_to_m3(double v) { return v * 1e-6; }
inline constexpr double polarizability_volume_si(double alpha_cm3) {
    return cm3_to_m3(alpha_cm3);
}
inline constexpr double polarizability_si(double alpha_cm3) {
    return 4.0 * constants::pi * constants::eps0 * cm3_to_m3(alpha_cm3);
}

} // namespace atomchip::units
