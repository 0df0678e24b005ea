#pragma once

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace atomchip::roots {

// Bracketed root of f on [lo, hi] to relative tolerance relTol.  Requires a
// sign change across the bracket; throws otherwise.
template <class F>
double find_root(F&& f, double lo, double hi, double relTol = 1e-12) {
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::domain_error("find_root: no sign change across bracket");
    std::uintmax_t iters = 200;
    auto tol = [relTol](double a, double b) {
        return std::abs(b - a) <= relTol * (std::abs(a) + std::abs(b)) * 0.5;
    };
    auto r = boost::math::tools::toms748_solve(std::forward<F>(f), lo, hi, flo, fhi,
                                               tol, iters);
    return 0.5 * (r.first + r.second);
}

// Expand hi geometrically until f changes sign, then solve.  Useful for
// monotone physics curves whose scale is known only roughly.
template <class F>
double find_root_expanding(F&& f, double lo, double hiGuess,
                           double relTol = 1e-12, int maxDoublings = 200) {
    double hi = hiGuess;
    const double flo = f(lo);
    for (int i = 0; i < maxDoublings; ++i) {
        if ((f(hi) > 0.0) != (flo > 0.0)) return find_root(f, lo, hi, relTol);
        hi *= 2.0;
    }
    throw std::domain_error("find_root_expanding: no sign change found");
}

} // namespace atomchip::roots
