#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

// Thin wrappers around Boost.Math quadrature with the tolerance conventions
// used throughout this library (relative tolerances, nested 2-D/3-D helpers
// with explicit error propagation).

namespace atomchip::quad {

// Adaptive Gauss-Kronrod on [a, b] (either may be infinite).
template <class F>
double integrate(F&& f, double a, double b, double relTol = 1e-10,
                 double* errEst = nullptr) {
    double err = 0.0;
    const double val = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        std::forward<F>(f), a, b, 15 /*max depth*/, relTol, &err);
    if (errEst) *errEst = err;
    return val;
}

// Tanh-sinh rule: superior for integrable endpoint singularities such as the
// inverse-square-root edges of classical turning points.
template <class F>
double integrate_endpoint_singular(F&& f, double a, double b,
                                   double relTol = 1e-9) {
    boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate(std::forward<F>(f), a, b, relTol);
}

// Nested 2-D integral over [ay,by] x [az,bz]; f(y, z).
template <class F>
double integrate2d(F&& f, double ay, double by, double az, double bz,
                   double relTol = 1e-8) {
    auto outer = [&](double z) {
        return integrate([&](double y) { return f(y, z); }, ay, by, relTol * 0.1);
    };
    return integrate(outer, az, bz, relTol);
}

// Nested 3-D integral over a box; f(x, y, z).
template <class F>
double integrate3d(F&& f, double ax, double bx, double ay, double by,
                   double az, double bz, double relTol = 1e-7) {
    auto outer = [&](double z) {
        return integrate2d([&](double x, double y) { return f(x, y, z); },
                           ax, bx, ay, by, relTol * 0.1);
    };
    return integrate(outer, az, bz, relTol);
}

} // namespace atomchip::quad
