// qsl.hpp — quantum Fisher information, Bures angle, and the dephasing speed limit
#pragma once

#include <array>
#include <complex>
#include <limits>

#include "becdeph/dephasing.hpp"

namespace becdeph {

// Quantum Fisher information of the dephasing family at exponent gamma_value
// with rate gamma_dot_value, for initial Bloch vector s. Returns +infinity for
// a pure state at zero exponent with nonzero rate; throws NegativeDenominator
// if the inputs are inconsistent beyond roundoff.
double qfi(const QubitState& s, double gamma_value, double gamma_dot_value);

// Spectral decomposition of the dephased state. p_plus = (1 - A)/2 where A is
// the Bloch length after dephasing; psi vectors are in the {|e>, |g>} basis.
struct Eigensystem {
    double p_plus = 0.0;
    double p_minus = 0.0;
    std::array<std::complex<double>, 2> psi_plus{};
    std::array<std::complex<double>, 2> psi_minus{};
    double bloch_norm = 0.0;
    bool degenerate = false;
};
Eigensystem eigensystem(const QubitState& s, double gamma_value);

// Bures angle arccos(sqrt(F)) between two qubit density matrices.
double bures_angle(const DensityMatrix& a, const DensityMatrix& b);

// Upper bound on the Bures angle travelled by time tau: the integral of half
// the root of the QFI along the dephasing path.
double distance_bound(const ReservoirModel& r, const QubitState& s, double tau,
                      const num::QuadratureSpec& spec = {});

struct QslProblem {
    ReservoirModel reservoir;
    QubitState state;
    double distance = 0.0;   // target Bures angle
    double t_max = 0.0;      // search horizon; 0 selects 1e4 natural times
    double tolerance = 1e-12;  // |distance_bound(tau) - distance| at the root
};

struct QslResult {
    bool reachable = false;
    double tau = std::numeric_limits<double>::quiet_NaN();
    double speed = std::numeric_limits<double>::quiet_NaN();  // distance / tau
    double sup_dub = 0.0;   // distance bound at tau, or at t_max when unreachable
    double achieved = 0.0;
    long iterations = 0;
    double t_max_used = 0.0;
};

// Smallest tau with distance_bound(tau) = distance, found by marching
// geometrically growing windows and root-refining the bracketing one. A
// target above the bound's supremum within the horizon is unreachable.
QslResult solve_tau_qsl(const QslProblem& p, const num::QuadratureSpec& spec = {});

}  // namespace becdeph
