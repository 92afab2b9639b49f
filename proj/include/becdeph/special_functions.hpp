// special_functions.hpp — Bessel J0 and a five-point derivative stencil.
#pragma once

#include <utility>

namespace becdeph::num {

// Bessel function of the first kind, order zero. Power series below x = 15,
// Hankel asymptotic expansion above; absolute error < 1e-12 on [0, 1e4].
double bessel_j0(double x);

// Five-point central difference, O(h^4).
template <class F>
double finite_diff(F&& f, double t, double h) {
    return (-f(t + 2.0 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2.0 * h)) / (12.0 * h);
}

} // namespace becdeph::num
