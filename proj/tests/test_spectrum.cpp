// test_spectrum.cpp — spectral density, asymptotic models, ohmicity classification
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "becdeph/dephasing.hpp"
#include "becdeph/errors.hpp"
#include "becdeph/reservoir.hpp"
#include "becdeph/spectrum.hpp"
#include "becdeph/units.hpp"

using namespace becdeph;

namespace {

ReservoirModel model(int dimension, double a_B_m) {
    PhysicalParams p = default_params();
    p.a_B = a_B_m;
    p = with_reduced_mass(p);
    p.dimension = dimension;
    return reduce(to_internal(p));
}

}  // namespace

TEST_CASE("spectral model selects regime from the coupling") {
    ReservoirModel free3 = model(3, 0.0);
    ReservoirModel int3 = model(3, 5.3e-9);

    SpectralModel mf = spectral_model(free3);
    CHECK(mf.regime == Regime::free_boson);
    CHECK(mf.exponent == doctest::Approx(1.5));
    SpectralModel mi = spectral_model(int3);
    CHECK(mi.regime == Regime::interacting);
    CHECK(mi.exponent == doctest::Approx(5.0));

    CHECK(spectral_model(model(1, 0.0)).exponent == doctest::Approx(0.5));
    CHECK(spectral_model(model(2, 0.0)).exponent == doctest::Approx(1.0));
    CHECK(spectral_model(model(1, 5.3e-9)).exponent == doctest::Approx(3.0));
    CHECK(spectral_model(model(2, 5.3e-9)).exponent == doctest::Approx(4.0));

    // forcing the regime the reservoir is actually in is a no-op
    CHECK(spectral_model(free3, Regime::free_boson).exponent == doctest::Approx(1.5));
    CHECK_THROWS_AS(spectral_model(free3, Regime::interacting), InvalidRegime);
    CHECK_THROWS_AS(spectral_model(int3, Regime::free_boson), InvalidRegime);
}

TEST_CASE("frozen prefactors and cutoffs") {
    // references computed independently from the closed-form expressions
    CHECK(spectral_model(model(1, 0.0)).prefactor ==
          doctest::Approx(2.8895572983516875e-07).epsilon(1e-12));
    CHECK(spectral_model(model(2, 0.0)).prefactor ==
          doctest::Approx(0.0014592544892162303).epsilon(1e-12));
    CHECK(spectral_model(model(3, 0.0)).prefactor ==
          doctest::Approx(3.1276606724789318).epsilon(1e-12));
    CHECK(spectral_model(model(1, 5.3e-9)).prefactor ==
          doctest::Approx(4006974605.3325672).epsilon(1e-12));
    CHECK(spectral_model(model(2, 5.3e-9)).prefactor ==
          doctest::Approx(1.0538101581448876e16).epsilon(1e-12));
    CHECK(spectral_model(model(3, 5.3e-9)).prefactor ==
          doctest::Approx(8.3172936945472782e21).epsilon(1e-12));

    // free cutoff 1/(m sigma^2) is dimension independent; interacting cutoff
    // sqrt(2) c / sigma tracks the sound speed
    for (int d : {1, 2, 3})
        CHECK(spectral_model(model(d, 0.0)).cutoff ==
              doctest::Approx(3.4174889999572814e-05).epsilon(1e-12));
    CHECK(spectral_model(model(3, 5.3e-9)).cutoff ==
          doctest::Approx(5.6127733305317388e-06).epsilon(1e-12));
}

TEST_CASE("exact density edge cases") {
    ReservoirModel r = model(3, 5.3e-9);
    CHECK(j_exact(r, 0.0) == 0.0);
    CHECK(j_exact(r, -1.0) == 0.0);
    CHECK(j_exact(r, 1e-7) > 0.0);
    SpectralModel m = spectral_model(r);
    CHECK_THROWS_AS(j_asymptotic(m, -1.0), std::invalid_argument);
    CHECK(j_asymptotic(m, 0.0) == 0.0);
}

TEST_CASE("asymptotic model matches the exact density at low frequency") {
    for (int d : {1, 2, 3}) {
        for (double a : {0.0, 5.3e-9}) {
            ReservoirModel r = model(d, a);
            SpectralModel m = spectral_model(r);
            double w = 1e-4 * m.cutoff;
            double ratio = j_exact(r, w) / j_asymptotic(m, w);
            CHECK(ratio == doctest::Approx(1.0).epsilon(2e-2));
        }
    }
}

TEST_CASE("log-log slope recovers the predicted power") {
    struct { int d; double a; double slope; Ohmicity kind; } cases[] = {
        {1, 0.0, 0.5, Ohmicity::sub_ohmic},
        {2, 0.0, 1.0, Ohmicity::ohmic},
        {3, 0.0, 1.5, Ohmicity::super_ohmic},
        {1, 5.3e-9, 3.0, Ohmicity::super_ohmic},
        {2, 5.3e-9, 4.0, Ohmicity::super_ohmic},
        {3, 5.3e-9, 5.0, Ohmicity::super_ohmic},
    };
    for (const auto& c : cases) {
        ReservoirModel r = model(c.d, c.a);
        SpectralModel m = spectral_model(r);
        OhmicityFit fit = fit_ohmicity(r, 1e-4 * m.cutoff, 1e-3 * m.cutoff, 40);
        CHECK(fit.exponent == doctest::Approx(c.slope).epsilon(0.05 / c.slope));
        CHECK(fit.kind == c.kind);
        CHECK(fit.points == 40);
    }
    CHECK(ohmicity_name(Ohmicity::ohmic) == doctest::String("ohmic"));
    CHECK(ohmicity_name(Ohmicity::sub_ohmic) == doctest::String("sub-ohmic"));
    CHECK(ohmicity_name(Ohmicity::super_ohmic) == doctest::String("super-ohmic"));
}

TEST_CASE("degenerate fits are rejected") {
    // far above the Gaussian cutoff the density underflows to exactly zero
    ReservoirModel r = model(3, 0.0);
    double w_dead = dispersion(r, 40.0 / r.sigma);
    CHECK(j_exact(r, w_dead) == 0.0);
    CHECK_THROWS_AS(fit_ohmicity(r, w_dead, 2.0 * w_dead, 10), DegenerateFit);
    CHECK_THROWS_AS(fit_ohmicity(r, 1e-9, 1e-9, 10), std::invalid_argument);
    CHECK_THROWS_AS(fit_ohmicity(r, 1e-9, 1e-8, 1), std::invalid_argument);
}

TEST_CASE("frequency-domain Gamma agrees with the momentum-space integral") {
    for (double a : {0.0, 5.3e-9}) {
        ReservoirModel r = model(3, a);
        double ts = r.natural_time();
        for (double tf : {0.25, 5.0}) {
            double t = tf * ts;
            double ref = gamma(r, t).value;
            CHECK(gamma_from_spectrum(r, t) == doctest::Approx(ref).epsilon(1e-6));
        }
    }
    CHECK(gamma_from_spectrum(model(3, 0.0), 0.0) == 0.0);
    CHECK_THROWS_AS(gamma_from_spectrum(model(3, 0.0), -1.0), std::invalid_argument);
}
