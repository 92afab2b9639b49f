// root_finding.hpp — bracketed root finder for monotone functions.
#pragma once

#include <cmath>
#include <string>

#include "becdeph/errors.hpp"

namespace becdeph::num {

// Find tau in [lo, hi] with |g(tau)| <= tol, for non-decreasing g with
// g(lo) <= 0 <= g(hi). Secant steps clipped into the bracket, bisection as
// fallback; deterministic. Throws NoBracket when g(hi) < -tol (the target is
// beyond reach on this interval) and std::invalid_argument when g(lo) > tol.
template <class G>
double find_root_monotone(G&& g, double lo, double hi, double tol, int* iterations = nullptr) {
    int iters = 0;
    auto eval = [&](double x) {
        ++iters;
        return g(x);
    };
    auto done = [&](double x) {
        if (iterations) *iterations = iters;
        return x;
    };

    double glo = eval(lo);
    if (std::fabs(glo) <= tol) return done(lo);
    if (glo > 0.0) throw std::invalid_argument("find_root_monotone: g(lo) > 0, not a bracket");
    double ghi = eval(hi);
    if (std::fabs(ghi) <= tol) return done(hi);
    if (ghi < 0.0)
        throw NoBracket("find_root_monotone: g stays negative up to hi = " + std::to_string(hi));

    for (int i = 0; i < 200; ++i) {
        // secant through the bracket, clipped away from the endpoints
        double x = lo - glo * (hi - lo) / (ghi - glo);
        const double mid = 0.5 * (lo + hi), w = hi - lo;
        if (!(x > lo + 1e-3 * w && x < hi - 1e-3 * w)) x = mid;
        if (!(x > lo && x < hi)) break;   // interval at roundoff width
        const double gx = eval(x);
        if (std::fabs(gx) <= tol) return done(x);
        if (gx < 0.0) {
            lo = x;
            glo = gx;
        } else {
            hi = x;
            ghi = gx;
        }
    }
    // interval collapsed without meeting tol; return the better endpoint
    return done(std::fabs(glo) <= std::fabs(ghi) ? lo : hi);
}

} // namespace becdeph::num
