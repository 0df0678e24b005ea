#include "atomchip/thermal_noise.hpp"

#include "atomchip/constants.hpp"
#include "atomchip/quadrature.hpp"
#include "atomchip/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace atomchip {

using constants::c;
using constants::eps0;
using constants::hbar;
using constants::kB;
using constants::mu0;
using constants::pi;

void SourceBox::validate() const {
    if (!(y1 > y0) || !(z1 > z0) || !(xHalf > 0.0))
        throw std::invalid_argument("SourceBox: degenerate volume");
}

bool SourceBox::contains(const Vec3& p) const {
    return p.y >= y0 && p.y <= y1 && p.z >= z0 && p.z <= z1 && p.x >= -xHalf &&
           p.x <= xHalf;
}

SourceBox SourceBox::wireBelow(double w, double h, double d) {
    if (!(w > 0.0) || !(h > 0.0) || !(d > 0.0))
        throw std::invalid_argument("SourceBox: wire dimensions and distance must be positive");
    SourceBox b;
    b.y0 = -0.5 * w;
    b.y1 = 0.5 * w;
    b.z0 = -d - h;
    b.z1 = -d;
    b.xHalf = std::max(100.0 * d, 10.0 * w);
    return b;
}

namespace {

// Closed-form axial primitives for the coincident-point kernel:
//   F0 = int du / (u^2 + a^2)^3, F1 = int u du / (.)^3, F2 = int u^2 du / (.)^3.
double primF0(double u, double a2) {
    const double a = std::sqrt(a2);
    const double q = u * u + a2;
    return u / (4.0 * a2 * q * q) + 3.0 * u / (8.0 * a2 * a2 * q) +
           3.0 * std::atan(u / a) / (8.0 * a2 * a2 * a);
}
double primF1(double u, double a2) {
    const double q = u * u + a2;
    return -1.0 / (4.0 * q * q);
}
double primF2(double u, double a2) {
    const double a = std::sqrt(a2);
    const double q = u * u + a2;
    return -u / (4.0 * q * q) + u / (8.0 * a2 * q) + std::atan(u / a) / (8.0 * a2 * a);
}

struct AxialMoments {
    double f0, f1, f2; // definite integrals of the three primitives
};

AxialMoments axial_moments(double ulo, double uhi, double a2) {
    return {primF0(uhi, a2) - primF0(ulo, a2), primF1(uhi, a2) - primF1(ulo, a2),
            primF2(uhi, a2) - primF2(ulo, a2)};
}

GeometryFactors coincident_geometry_factors(const Vec3& p, const SourceBox& box,
                                            double relTol) {
    // X_ij = 1/2 int dy' dz' [axial moments] with rho = (p_y - y', p_z - z').
    auto component = [&](int which) {
        return quad::integrate2d(
            [&](double yp, double zp) {
                const double ry = p.y - yp;
                const double rz = p.z - zp;
                const double a2 = ry * ry + rz * rz;
                const AxialMoments m =
                    axial_moments(-box.xHalf - p.x, box.xHalf - p.x, a2);
                switch (which) {
                    case 0: return m.f2;            // xx
                    case 1: return ry * ry * m.f0;  // yy
                    case 2: return rz * rz * m.f0;  // zz
                    case 3: return -ry * m.f1;      // xy (u = p_x - x')
                    case 4: return -rz * m.f1;      // xz
                    default: return ry * rz * m.f0; // yz
                }
            },
            box.y0, box.y1, box.z0, box.z1, relTol * 0.5);
    };
    GeometryFactors X;
    X.xx = 0.5 * component(0);
    X.yy = 0.5 * component(1);
    X.zz = 0.5 * component(2);
    X.xy = 0.5 * component(3);
    X.xz = 0.5 * component(4);
    X.yz = 0.5 * component(5);
    return X;
}

GeometryFactors two_point_geometry_factors(const Vec3& x1, const Vec3& x2,
                                           const SourceBox& box, double relTol) {
    auto component = [&](int i, int j) {
        return quad::integrate2d(
            [&](double yp, double zp) {
                auto inner = [&](double xp) {
                    const double A[3] = {x1.x - xp, x1.y - yp, x1.z - zp};
                    const double B[3] = {x2.x - xp, x2.y - yp, x2.z - zp};
                    const double ra2 = A[0] * A[0] + A[1] * A[1] + A[2] * A[2];
                    const double rb2 = B[0] * B[0] + B[1] * B[1] + B[2] * B[2];
                    const double ra3 = ra2 * std::sqrt(ra2);
                    const double rb3 = rb2 * std::sqrt(rb2);
                    return A[i] * B[j] / (ra3 * rb3);
                };
                return quad::integrate(inner, -box.xHalf, box.xHalf, relTol * 0.1);
            },
            box.y0, box.y1, box.z0, box.z1, relTol * 0.5);
    };
    GeometryFactors X;
    X.xx = 0.5 * component(0, 0);
    X.yy = 0.5 * component(1, 1);
    X.zz = 0.5 * component(2, 2);
    // Symmetrized off-diagonals (x1 <-> x2 symmetry of the correlation).
    X.xy = 0.25 * (component(0, 1) + component(1, 0));
    X.xz = 0.25 * (component(0, 2) + component(2, 0));
    X.yz = 0.25 * (component(1, 2) + component(2, 1));
    return X;
}

} // namespace

GeometryFactors geometry_factors(const Vec3& x1, const Vec3& x2,
                                 const SourceBox& box, double relTol) {
    box.validate();
    if (box.contains(x1) || box.contains(x2))
        throw std::domain_error("geometry_factors: field point inside the source volume");
    const bool coincident = (x1.x == x2.x && x1.y == x2.y && x1.z == x2.z);
    if (coincident) return coincident_geometry_factors(x1, box, relTol);
    return two_point_geometry_factors(x1, x2, box, relTol);
}

GeometryFactorsMC geometry_factors_mc(const Vec3& x1, const Vec3& x2,
                                      const SourceBox& box, std::uint64_t seed,
                                      std::int64_t samples) {
    box.validate();
    if (box.contains(x1) || box.contains(x2))
        throw std::domain_error("geometry_factors_mc: field point inside the source volume");
    const double V = box.volume();
    double sum[6] = {0, 0, 0, 0, 0, 0};
    double sum2[6] = {0, 0, 0, 0, 0, 0};
    rng::PointRng r(seed, 0xC0FFEEull);
    for (std::int64_t s = 0; s < samples; ++s) {
        const double xp = -box.xHalf + 2.0 * box.xHalf * r.uniform();
        const double yp = box.y0 + (box.y1 - box.y0) * r.uniform();
        const double zp = box.z0 + (box.z1 - box.z0) * r.uniform();
        const double A[3] = {x1.x - xp, x1.y - yp, x1.z - zp};
        const double B[3] = {x2.x - xp, x2.y - yp, x2.z - zp};
        const double ra2 = A[0] * A[0] + A[1] * A[1] + A[2] * A[2];
        const double rb2 = B[0] * B[0] + B[1] * B[1] + B[2] * B[2];
        const double inv = 1.0 / (ra2 * std::sqrt(ra2) * rb2 * std::sqrt(rb2));
        const double vals[6] = {
            A[0] * B[0] * inv,
            A[1] * B[1] * inv,
            A[2] * B[2] * inv,
            0.5 * (A[0] * B[1] + A[1] * B[0]) * inv,
            0.5 * (A[0] * B[2] + A[2] * B[0]) * inv,
            0.5 * (A[1] * B[2] + A[2] * B[1]) * inv,
        };
        for (int i = 0; i < 6; ++i) {
            sum[i] += vals[i];
            sum2[i] += vals[i] * vals[i];
        }
    }
    GeometryFactorsMC out;
    double* val[6] = {&out.value.xx, &out.value.yy, &out.value.zz,
                      &out.value.xy, &out.value.xz, &out.value.yz};
    double* err[6] = {&out.stderror.xx, &out.stderror.yy, &out.stderror.zz,
                      &out.stderror.xy, &out.stderror.xz, &out.stderror.yz};
    const double n = static_cast<double>(samples);
    for (int i = 0; i < 6; ++i) {
        const double mean = sum[i] / n;
        const double var = std::max(0.0, sum2[i] / n - mean * mean);
        *val[i] = 0.5 * V * mean;
        *err[i] = 0.5 * V * std::sqrt(var / n);
    }
    return out;
}

BTensor b_tensor(const ConductivityTensor& sigma, const GeometryFactors& X) {
    sigma.validate();
    BTensor B;
    B.xx = sigma.szz * X.yy + sigma.syy * X.zz;
    B.yy = sigma.szz * X.xx + sigma.sxx * X.zz;
    B.zz = sigma.syy * X.xx + sigma.sxx * X.yy;
    B.xy = -sigma.szz * X.xy;
    B.xz = -sigma.syy * X.xz;
    B.yz = -sigma.sxx * X.yz;
    return B;
}

BTensor y_tilde(const ConductivityTensor& sigma, const GeometryFactors& X) {
    BTensor B = b_tensor(sigma, X);
    const double inv = 1.0 / sigma.sxx;
    B.xx *= inv; B.yy *= inv; B.zz *= inv;
    B.xy *= inv; B.xz *= inv; B.yz *= inv;
    return B;
}

NoiseSpectrum power_spectrum(const ConductivityTensor& sigma,
                             const GeometryFactors& X) {
    const BTensor B = b_tensor(sigma, X);
    const double pref = kB * sigma.T / (4.0 * pi * pi * eps0 * eps0 * c * c * c * c);
    NoiseSpectrum S;
    S.xx = pref * B.xx;
    S.yy = pref * B.yy;
    S.zz = pref * B.zz;
    S.xy = pref * B.xy;
    S.xz = pref * B.xz;
    S.yz = pref * B.yz;
    return S;
}

double skin_depth(double sigma0, double omega) {
    if (!(sigma0 > 0.0) || !(omega > 0.0))
        throw std::domain_error("skin_depth: conductivity and frequency must be positive");
    return std::sqrt(2.0 / (sigma0 * mu0 * omega));
}

bool quasi_static_ok(double sigma0, double omega, double d, double h) {
    return skin_depth(sigma0, omega) > 10.0 * std::max(d, h);
}

double spin_flip_rate(double muPerp, const NoiseSpectrum& S) {
    return muPerp * muPerp / (hbar * hbar) * (S.yy + S.zz);
}

double spin_decoherence_rate(double dMuPar, const NoiseSpectrum& S) {
    return dMuPar * dMuPar * S.xx / (2.0 * hbar * hbar);
}

double spatial_decoherence_rate(double muPar, double S11, double S22, double S12) {
    return muPar * muPar / (2.0 * hbar * hbar) * (S11 + S22 - 2.0 * S12);
}

double heating_rate(double muPar, double mass, double omegaAxis, int targetLevel,
                    const std::function<double(double, double)>& Sxx,
                    double relTol) {
    if (targetLevel != 1 && targetLevel != 2)
        throw std::domain_error("heating_rate: only transitions to levels 1 and 2 carry weight");
    if (!(omegaAxis > 0.0) || !(mass > 0.0))
        throw std::domain_error("heating_rate: mass and frequency must be positive");

    const double ell = std::sqrt(hbar / (mass * omegaAxis));
    // Oscillator overlap densities M_f0(x) = phi_f(x) phi_0(x):
    //   M_10 = sqrt(2) (x/l) g(x),  M_20 = (1/sqrt 2)(2 (x/l)^2 - 1) g(x),
    // with g = exp(-x^2/l^2) / (sqrt(pi) l).
    auto overlap = [&](double x) {
        const double u = x / ell;
        const double g = std::exp(-u * u) / (std::sqrt(pi) * ell);
        if (targetLevel == 1) return std::sqrt(2.0) * u * g;
        return (2.0 * u * u - 1.0) / std::sqrt(2.0) * g;
    };
    const double span = 6.0 * ell;
    const double integral = quad::integrate2d(
        [&](double x1, double x2) { return overlap(x1) * overlap(x2) * Sxx(x1, x2); },
        -span, span, -span, span, relTol);
    return muPar * muPar / (hbar * hbar) * integral;
}

double suppression_ratio(const ConductivityTensor& sigma, const GeometryFactors& X) {
    sigma.validate();
    // Denominator kept term-by-term so the isotropic case is exactly 1.
    return (sigma.szz * X.yy + sigma.syy * X.zz) /
           (sigma.sxx * X.yy + sigma.sxx * X.zz);
}

WireMaterial WireMaterial::gold() {
    WireMaterial m;
    m.rho0 = 0.0;
    m.debyeTheta = 170.0;
    m.rhoPhonon300 = 2.21e-8;
    return m;
}

WireMaterial WireMaterial::silverGoldAlloy() {
    // Dilute Au in Ag: impurity scattering supplies a residual resistivity on
    // the order of gold's room-temperature value; phonons follow silver.
    WireMaterial m;
    m.rho0 = 2.21e-8;
    m.debyeTheta = 215.0;
    m.rhoPhonon300 = 1.63e-8;
    return m;
}

namespace {

double bloch_gruneisen_integral(double upper) {
    // int_0^upper t^5 e^t / (e^t - 1)^2 dt, with the integrable t -> 0 limit
    // t^3 handled by the quadrature of the smooth rewritten integrand.
    return quad::integrate(
        [](double t) {
            if (t < 1e-8) return t * t * t;
            const double em = std::expm1(t);
            return std::pow(t, 5) * std::exp(t) / (em * em);
        },
        0.0, upper, 1e-10);
}

} // namespace

double bloch_gruneisen_resistivity(const WireMaterial& m, double T) {
    if (!(T > 0.0)) throw std::domain_error("bloch_gruneisen_resistivity: T must be positive");
    auto shape = [&](double temp) {
        return std::pow(temp / m.debyeTheta, 5) *
               bloch_gruneisen_integral(m.debyeTheta / temp);
    };
    const double C = m.rhoPhonon300 / shape(300.0);
    return m.rho0 + C * shape(T);
}

double alloy_noise_ratio(const WireMaterial& m, double T) {
    const WireMaterial au = WireMaterial::gold();
    const double figure = T / bloch_gruneisen_resistivity(m, T);
    const double reference = 300.0 / bloch_gruneisen_resistivity(au, 300.0);
    return figure / reference;
}

double gate_ops_figure_of_merit(double gammaFlip, double gammaDecoherence,
                                double tunnelLifetime, double gateTime) {
    if (!(gateTime > 0.0))
        throw std::domain_error("gate_ops_figure_of_merit: gate time must be positive");
    if (gammaFlip < 0.0 || gammaDecoherence < 0.0 || tunnelLifetime < 0.0)
        throw std::domain_error("gate_ops_figure_of_merit: rates and lifetimes must be non-negative");
    if (std::isinf(gammaFlip) || std::isinf(gammaDecoherence)) return 0.0;
    const double tFlip = gammaFlip > 0.0 ? 1.0 / gammaFlip : INFINITY;
    const double tDec = gammaDecoherence > 0.0 ? 1.0 / gammaDecoherence : INFINITY;
    const double tMin = std::min({tFlip, tDec, tunnelLifetime});
    return tMin / gateTime;
}

} // namespace atomchip
