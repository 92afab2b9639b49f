// spectrum.hpp — reservoir spectral density, low-frequency asymptotics, ohmicity
#pragma once

#include "becdeph/quadrature.hpp"
#include "becdeph/reservoir.hpp"

namespace becdeph {

enum class Regime { free_boson, interacting };

// Low-frequency form J(omega) ~ prefactor * omega^exponent * envelope, where
// the envelope is exp(-omega/cutoff) for free bosons and exp(-(omega/cutoff)^2)
// for the interacting gas.
struct SpectralModel {
    Regime regime = Regime::free_boson;
    double exponent = 0.0;
    double prefactor = 0.0;
    double cutoff = 0.0;
};

// Regime follows the condensate coupling: g = 0 is the free gas. The forced
// overload throws InvalidRegime when the request contradicts the reservoir.
SpectralModel spectral_model(const ReservoirModel& r);
SpectralModel spectral_model(const ReservoirModel& r, Regime forced);

// Exact spectral density at omega >= 0 (zero at omega <= 0).
double j_exact(const ReservoirModel& r, double omega);

// Low-frequency model evaluated at omega; valid well below the cutoff.
double j_asymptotic(const SpectralModel& m, double omega);

enum class Ohmicity { sub_ohmic, ohmic, super_ohmic };
const char* ohmicity_name(Ohmicity k);

struct OhmicityFit {
    double exponent = 0.0;
    Ohmicity kind = Ohmicity::ohmic;
    double omega_lo = 0.0;
    double omega_hi = 0.0;
    int points = 0;
};

// Least-squares log-log slope of j_exact over [omega_lo, omega_hi]. Throws
// DegenerateFit when the samples cannot support a power-law fit.
OhmicityFit fit_ohmicity(const ReservoirModel& r, double omega_lo, double omega_hi, int points);

// Gamma(t) recomputed from the spectral density as a frequency integral;
// agrees with the momentum-space form and serves as a cross-check.
double gamma_from_spectrum(const ReservoirModel& r, double t,
                           const num::QuadratureSpec& spec = {});

}  // namespace becdeph
