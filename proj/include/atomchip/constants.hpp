#pragma once

// Physical constants (CODATA 2018), SI units throughout.

namespace atomchip {

struct PhysicalConstants {
    static constexpr double mu0  = 1.25663706212e-6;   // vacuum permeability [T m / A]
    static constexpr double hbar = 1.054571817e-34;    // reduced Planck constant [J s]
    static constexpr double kB   = 1.380649e-23;       // Boltzmann constant [J / K]
    static constexpr double c    = 299792458.0;        // speed of light [m / s]
    static constexpr double eps0 = 8.8541878128e-12;   // vacuum permittivity [F / m]
    static constexpr double muB  = 9.2740100783e-24;   // Bohr magneton [J / T]
};

namespace constants {
inline constexpr double mu0  = PhysicalConstants::mu0;
inline constexpr double hbar = PhysicalConstants::hbar;
inline constexpr double kB   = PhysicalConstants::kB;
inline constexpr double c    = PhysicalConstants::c;
inline constexpr double eps0 = PhysicalConstants::eps0;
inline constexpr double muB  = PhysicalConstants::muB;
inline constexpr double pi   = 3.14159265358979323846;
} // namespace constants

} // namespace atomchip
