// dephasing.hpp — dephasing exponent Gamma(t) and qubit evolution under pure dephasing
#pragma once

#include <complex>
#include <vector>

#include "becdeph/quadrature.hpp"
#include "becdeph/reservoir.hpp"

namespace becdeph {

// Bloch vector (x, y, z) of the impurity qubit at t = 0.
struct QubitState {
    double x = 1.0;
    double y = 0.0;
    double z = 0.0;
};

// Throws std::invalid_argument if x^2 + y^2 + z^2 exceeds 1 beyond roundoff.
void validate_state(const QubitState& s);

// 2x2 density matrix in the {|e>, |g>} basis.
struct DensityMatrix {
    double p_e = 0.0;               // excited population
    double p_g = 0.0;               // ground population
    std::complex<double> coh{0.0};  // <e|rho|g>
};

struct GammaResult {
    double value = 0.0;
    double error = 0.0;  // quadrature error estimate
    int panels = 0;
};

// Momentum where the Gaussian envelope pushes the remaining tail of the
// Gamma integrand below abs_tol. Used as the upper integration limit.
double momentum_cutoff(const ReservoirModel& r, double abs_tol);

// Dephasing exponent Gamma(t) and its time derivative, each as an adaptive
// momentum-space integral. Throw NonConvergence if the panel budget runs out
// and std::invalid_argument for t < 0.
GammaResult gamma(const ReservoirModel& r, double t, const num::QuadratureSpec& spec = {});
GammaResult gamma_dot(const ReservoirModel& r, double t, const num::QuadratureSpec& spec = {});

// Pure dephasing: populations stay, coherence picks up exp(-gamma_value).
DensityMatrix evolve(const QubitState& s, double gamma_value);

struct CurvePoint {
    double t = 0.0;
    double gamma = 0.0;
    double gamma_dot = 0.0;
    double err_gamma = 0.0;
    double err_gamma_dot = 0.0;
    bool ok = false;  // false when the quadrature failed; values are NaN then
};

// Evaluates Gamma and its derivative on a time grid. Individual failures are
// recorded per point instead of aborting the whole curve.
std::vector<CurvePoint> sample_curve(const ReservoirModel& r, const std::vector<double>& times,
                                     const num::QuadratureSpec& spec = {});

// 64 logarithmic points spanning [1e-2, 1e3] natural times.
std::vector<double> default_time_grid(const ReservoirModel& r);

}  // namespace becdeph
