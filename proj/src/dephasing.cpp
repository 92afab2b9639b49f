// dephasing.cpp — dephasing exponent Gamma(t) and qubit evolution under pure dephasing
#include "becdeph/dephasing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "becdeph/errors.hpp"

namespace becdeph {

namespace {

constexpr double k_floor = 1e-10;  // below this the integrand is taken at its k -> 0 limit

double two_pi_power(int dimension) {
    double p = 1.0;
    for (int i = 0; i < dimension; ++i) p *= 2.0 * M_PI;
    return p;
}

double coupling_prefactor(const ReservoirModel& r) {
    return 8.0 * r.eta * r.eta * r.n / two_pi_power(r.dimension);
}

double k_power(int dimension, double k) {
    // k^(D-1) without calling pow
    if (dimension == 1) return 1.0;
    if (dimension == 2) return k;
    return k * k;
}

// Gamma integrand with the oscillatory sin^2 factor replaced by 1; bounds the
// true integrand and defines the envelope used for the momentum cutoff.
double envelope(const ReservoirModel& r, double k) {
    double eps = kinetic_energy(r, k);
    double om = dispersion(r, k);
    if (om <= 0.0) return 0.0;
    double gauss = std::exp(-0.5 * k * k * r.sigma * r.sigma);
    return k_power(r.dimension, k) * angular_factor(r.dimension, k * r.L) * gauss /
           (om * (2.0 * r.mu() + eps));
}

// Raises the panel budget when the oscillation count at time t demands it;
// the default budget is sized for generic integrals, not for phases of 1e5
// radians that legitimate late-time Gamma evaluations accumulate.
num::QuadratureSpec budget_for_phase(const num::QuadratureSpec& spec, double phase) {
    num::QuadratureSpec eff = spec;
    double need = 2.0 * phase / eff.oscillation_guard + 1024.0;
    if (need > static_cast<double>(eff.max_panels))
        eff.max_panels = static_cast<int>(std::min(need, 8.0e6));
    return eff;
}

GammaResult integrate_gamma_kernel(const ReservoirModel& r, double t,
                                   const num::QuadratureSpec& spec, bool derivative) {
    if (t < 0.0) throw std::invalid_argument("time must be non-negative");
    if (t == 0.0) return {};
    double pref = coupling_prefactor(r);
    double k_max = momentum_cutoff(r, spec.abs_tol);
    num::QuadratureSpec eff = budget_for_phase(spec, dispersion(r, k_max) * t);

    auto f = [&](double k) {
        if (k < k_floor) return 0.0;
        double eps = kinetic_energy(r, k);
        double om = dispersion(r, k);
        double gauss = std::exp(-0.5 * k * k * r.sigma * r.sigma);
        double shape = k_power(r.dimension, k) * angular_factor(r.dimension, k * r.L) * gauss;
        if (derivative) return pref * shape * 0.5 * std::sin(om * t) / (2.0 * r.mu() + eps);
        double s = std::sin(0.5 * om * t);
        return pref * shape * s * s / (om * (2.0 * r.mu() + eps));
    };
    auto phase_rate = [&](double k) { return t * group_velocity(r, k); };

    num::QuadResult q = num::integrate_interval(f, 0.0, k_max, eff, phase_rate);
    if (!q.converged)
        throw NonConvergence("gamma integral did not converge: D=" +
                             std::to_string(r.dimension) + " t=" + std::to_string(t) +
                             " panels=" + std::to_string(q.panels));
    return {q.value, q.error, q.panels};
}

}  // namespace

double momentum_cutoff(const ReservoirModel& r, double abs_tol) {
    // scan the envelope over six decades below the Gaussian floor 10/sigma
    double k_ref = 10.0 / r.sigma;
    double peak = 0.0;
    const int n = 64;
    for (int i = 0; i < n; ++i) {
        double k = k_ref * std::pow(10.0, -6.0 + 6.0 * i / (n - 1.0));
        peak = std::max(peak, coupling_prefactor(r) * envelope(r, k));
    }
    return num::gaussian_cutoff(r.sigma, peak, abs_tol);
}

GammaResult gamma(const ReservoirModel& r, double t, const num::QuadratureSpec& spec) {
    return integrate_gamma_kernel(r, t, spec, false);
}

GammaResult gamma_dot(const ReservoirModel& r, double t, const num::QuadratureSpec& spec) {
    return integrate_gamma_kernel(r, t, spec, true);
}

void validate_state(const QubitState& s) {
    double n2 = s.x * s.x + s.y * s.y + s.z * s.z;
    if (!(n2 <= 1.0 + 1e-12))
        throw std::invalid_argument("Bloch vector length exceeds 1: |r|^2 = " +
                                    std::to_string(n2));
}

DensityMatrix evolve(const QubitState& s, double gamma_value) {
    validate_state(s);
    if (gamma_value < 0.0)
        throw std::invalid_argument("dephasing exponent must be non-negative");
    DensityMatrix rho;
    rho.p_e = 0.5 * (1.0 + s.z);
    rho.p_g = 1.0 - rho.p_e;  // keeps the trace at exactly 1
    rho.coh = 0.5 * std::exp(-gamma_value) * std::complex<double>(s.x, -s.y);
    return rho;
}

std::vector<CurvePoint> sample_curve(const ReservoirModel& r, const std::vector<double>& times,
                                     const num::QuadratureSpec& spec) {
    for (size_t i = 0; i < times.size(); ++i) {
        if (times[i] < 0.0) throw std::invalid_argument("time grid must be non-negative");
        if (i > 0 && times[i] <= times[i - 1])
            throw std::invalid_argument("time grid must be strictly increasing");
    }
    std::vector<CurvePoint> curve(times.size());
    for (size_t i = 0; i < times.size(); ++i) {
        CurvePoint& p = curve[i];
        p.t = times[i];
        try {
            GammaResult g = gamma(r, times[i], spec);
            GammaResult gd = gamma_dot(r, times[i], spec);
            p.gamma = g.value;
            p.gamma_dot = gd.value;
            p.err_gamma = g.error;
            p.err_gamma_dot = gd.error;
            p.ok = true;
        } catch (const NonConvergence&) {
            double nan = std::numeric_limits<double>::quiet_NaN();
            p.gamma = p.gamma_dot = p.err_gamma = p.err_gamma_dot = nan;
            p.ok = false;
        }
    }
    return curve;
}

std::vector<double> default_time_grid(const ReservoirModel& r) {
    const int n = 64;
    double ts = r.natural_time();
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = ts * std::pow(10.0, -2.0 + 5.0 * i / (n - 1.0));
    return grid;
}

}  // namespace becdeph
