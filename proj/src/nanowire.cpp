#include "atomchip/nanowire.hpp"

#include "atomchip/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace atomchip {

using constants::mu0;
using constants::pi;

double fs_resistivity(double w, double h, const FsParams& params) {
    if (!(w > 0.0) || !(h > 0.0))
        throw std::domain_error("fs_resistivity: cross-section must be positive");
    if (params.p < 0.0 || params.p > 1.0)
        throw std::domain_error("fs_resistivity: specularity must lie in [0,1]");
    if (!(params.bulkRho > 0.0) || !(params.mfp > 0.0))
        throw std::domain_error("fs_resistivity: bulk resistivity and mfp must be positive");
    return params.bulkRho *
           (1.0 + 0.375 * (1.0 - params.p) * params.mfp * (1.0 / w + 1.0 / h));
}

double max_safe_current(double w, double h, const SafeCurrentParams& params) {
    const double rho = fs_resistivity(w, h, params.fs);
    const double jmax = params.jCal * (params.fs.bulkRho / rho) *
                        (params.sRef / std::sqrt(w * h));
    return jmax * w * h;
}

CurrentDensityScaling current_density_scaling_check(double size, double J,
                                                    const SafeCurrentParams& params) {
    if (!(size > 0.0)) throw std::domain_error("current_density_scaling_check: size must be positive");
    if (!(J > 0.0)) throw std::domain_error("current_density_scaling_check: current density must be positive");
    CurrentDensityScaling out;
    const double d = size; // trap distance scaled with the wire: w = h = d
    const double Iconst = J * size * size;
    out.gradientAtConstJ = mu0 * Iconst / (2.0 * pi * d * d);
    out.maxCurrent = max_safe_current(size, size, params);
    out.gradientAtMaxI = mu0 * out.maxCurrent / (2.0 * pi * d * d);
    return out;
}

} // namespace atomchip
