// spectrum.cpp — reservoir spectral density, low-frequency asymptotics, ohmicity
#include "becdeph/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "becdeph/dephasing.hpp"
#include "becdeph/errors.hpp"

namespace becdeph {

namespace {

double two_pi_power(int dimension) {
    double p = 1.0;
    for (int i = 0; i < dimension; ++i) p *= 2.0 * M_PI;
    return p;
}

}  // namespace

SpectralModel spectral_model(const ReservoirModel& r) {
    return spectral_model(r, r.g > 0.0 ? Regime::interacting : Regime::free_boson);
}

SpectralModel spectral_model(const ReservoirModel& r, Regime forced) {
    SpectralModel m;
    m.regime = forced;
    double e2n = r.eta * r.eta * r.n;
    double L2 = r.L * r.L;
    if (forced == Regime::free_boson) {
        if (r.g > 0.0)
            throw InvalidRegime("free-boson asymptotics requested for an interacting gas");
        m.exponent = 0.5 * r.dimension;
        m.cutoff = 1.0 / (r.m_B * r.sigma * r.sigma);
        switch (r.dimension) {
            case 1: m.prefactor = e2n * std::pow(r.m_B, 1.5) * L2 / (std::sqrt(2.0) * M_PI); break;
            case 2: m.prefactor = e2n * r.m_B * r.m_B * L2 / (2.0 * M_PI); break;
            default: m.prefactor = std::sqrt(2.0) * e2n * std::pow(r.m_B, 2.5) * L2 / (3.0 * M_PI * M_PI);
        }
    } else {
        if (r.g <= 0.0)
            throw InvalidRegime("interacting asymptotics requested for a free gas");
        m.exponent = r.dimension + 2.0;
        m.cutoff = std::sqrt(2.0) * r.sound_speed() / r.sigma;
        double e2L2 = r.eta * r.eta * L2;
        double mn = r.m_B / r.n;
        switch (r.dimension) {
            case 1: m.prefactor = e2L2 * std::pow(mn, 1.5) / (4.0 * M_PI * std::pow(r.g, 2.5)); break;
            case 2: m.prefactor = e2L2 * mn * mn / (8.0 * M_PI * std::pow(r.g, 3.0)); break;
            default: m.prefactor = e2L2 * std::pow(mn, 2.5) / (12.0 * M_PI * M_PI * std::pow(r.g, 3.5));
        }
    }
    return m;
}

double j_exact(const ReservoirModel& r, double omega) {
    if (omega <= 0.0) return 0.0;
    double k = k_of_omega(r, omega);
    if (k < 1e-300) return 0.0;
    double eps = kinetic_energy(r, k);
    double kpow = r.dimension == 1 ? 1.0 / k : (r.dimension == 2 ? 1.0 : k);  // k^(D-2)
    return r.eta * r.eta * r.n * r.m_B / two_pi_power(r.dimension) * kpow *
           angular_factor(r.dimension, k * r.L) * eps *
           std::exp(-0.5 * k * k * r.sigma * r.sigma) / (r.mu() + eps);
}

double j_asymptotic(const SpectralModel& m, double omega) {
    if (omega < 0.0) throw std::invalid_argument("frequency must be non-negative");
    if (omega == 0.0) return 0.0;
    double u = omega / m.cutoff;
    double envelope = m.regime == Regime::free_boson ? std::exp(-u) : std::exp(-u * u);
    return m.prefactor * std::pow(omega, m.exponent) * envelope;
}

const char* ohmicity_name(Ohmicity k) {
    switch (k) {
        case Ohmicity::sub_ohmic: return "sub-ohmic";
        case Ohmicity::ohmic: return "ohmic";
        default: return "super-ohmic";
    }
}

OhmicityFit fit_ohmicity(const ReservoirModel& r, double omega_lo, double omega_hi, int points) {
    if (!(omega_lo > 0.0) || !(omega_hi > omega_lo))
        throw std::invalid_argument("fit window must satisfy 0 < omega_lo < omega_hi");
    if (points < 2) throw std::invalid_argument("fit needs at least 2 points");

    double ratio = std::log(omega_hi / omega_lo);
    std::vector<double> lx(points), ly(points);
    for (int i = 0; i < points; ++i) {
        double om = omega_lo * std::exp(ratio * i / (points - 1.0));
        double j = j_exact(r, om);
        if (!(j > 0.0) || !std::isfinite(j))
            throw DegenerateFit("spectral density not positive at omega=" + std::to_string(om));
        lx[i] = std::log(om);
        ly[i] = std::log(j);
    }
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < points; ++i) { mx += lx[i]; my += ly[i]; }
    mx /= points;
    my /= points;
    double sxy = 0.0, sxx = 0.0;
    for (int i = 0; i < points; ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    if (!(sxx > 0.0)) throw DegenerateFit("fit window collapsed to a single frequency");

    OhmicityFit fit;
    fit.exponent = sxy / sxx;
    fit.omega_lo = omega_lo;
    fit.omega_hi = omega_hi;
    fit.points = points;
    if (fit.exponent < 0.95) fit.kind = Ohmicity::sub_ohmic;
    else if (fit.exponent <= 1.05) fit.kind = Ohmicity::ohmic;
    else fit.kind = Ohmicity::super_ohmic;
    return fit;
}

double gamma_from_spectrum(const ReservoirModel& r, double t, const num::QuadratureSpec& spec) {
    if (t < 0.0) throw std::invalid_argument("time must be non-negative");
    if (t == 0.0) return 0.0;
    double om_max = dispersion(r, momentum_cutoff(r, spec.abs_tol));

    num::QuadratureSpec eff = spec;
    double need = 2.0 * om_max * t / eff.oscillation_guard + 1024.0;
    if (need > static_cast<double>(eff.max_panels))
        eff.max_panels = static_cast<int>(std::min(need, 8.0e6));

    auto f = [&](double om) {
        double u = 0.5 * om * t;
        // sin^2(u)/om^2 with the removable singularity at om = 0 filled in
        double kernel = std::abs(u) < 1e-8 ? 0.25 * t * t : std::pow(std::sin(u) / om, 2);
        return 8.0 * j_exact(r, om) * kernel;
    };
    auto phase_rate = [&](double) { return t; };

    num::QuadResult q = num::integrate_interval(f, 0.0, om_max, eff, phase_rate);
    if (!q.converged)
        throw NonConvergence("spectral gamma integral did not converge at t=" + std::to_string(t));
    return q.value;
}

}  // namespace becdeph
