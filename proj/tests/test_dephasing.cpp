// test_dephasing.cpp — Gamma(t) integrals, qubit evolution, curve sampling
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "becdeph/dephasing.hpp"
#include "becdeph/errors.hpp"
#include "becdeph/reservoir.hpp"
#include "becdeph/special_functions.hpp"
#include "becdeph/units.hpp"
#include "oracle_values.hpp"

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

TEST_CASE("gamma boundary behavior") {
    ReservoirModel r = model(3, 5.3e-9);
    GammaResult g0 = gamma(r, 0.0);
    CHECK(g0.value == 0.0);
    CHECK(g0.error == 0.0);
    CHECK_THROWS_AS(gamma(r, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_dot(r, -1e-6), std::invalid_argument);
    CHECK(gamma_dot(r, 0.0).value == 0.0);
}

TEST_CASE("gamma matches fixed-grid oracle checkpoints") {
    // oracle_values.hpp holds 1e7-panel midpoint-rule references for every
    // preset; the adaptive integrator must agree to 1e-7 relative.
    for (const auto& cp : oracle::gamma_checkpoints) {
        ReservoirModel r = model(cp.dimension, cp.a_B_m);
        double t = cp.t_factor * r.natural_time();
        GammaResult g = gamma(r, t);
        CHECK(g.value == doctest::Approx(cp.gamma).epsilon(1e-7));
    }
}

TEST_CASE("gamma_dot agrees with numerical derivative of gamma") {
    num::QuadratureSpec tight;
    tight.rel_tol = 1e-12;
    tight.abs_tol = 1e-20;
    for (int d : {1, 2, 3}) {
        for (double a : {0.0, 5.3e-9}) {
            ReservoirModel r = model(d, a);
            double ts = r.natural_time();
            for (double tf : {0.3, 2.0}) {
                double t = tf * ts;
                double omega_char = dispersion(r, std::sqrt(2.0) / r.sigma);
                double h = std::min(0.02 * t, 0.03 / omega_char);
                double fd = num::finite_diff(
                    [&](double u) { return gamma(r, u, tight).value; }, t, h);
                double an = gamma_dot(r, t, tight).value;
                CHECK(an == doctest::Approx(fd).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("evolve applies pure dephasing") {
    QubitState s;
    s.x = 0.6;
    s.y = -0.3;
    s.z = 0.2;
    double gv = 0.8;
    DensityMatrix rho = evolve(s, gv);
    CHECK(rho.p_e == doctest::Approx((1.0 + s.z) / 2.0).epsilon(1e-15));
    CHECK(rho.p_e + rho.p_g == 1.0);  // trace preserved exactly
    CHECK(rho.coh.real() == doctest::Approx(0.5 * s.x * std::exp(-gv)).epsilon(1e-14));
    CHECK(rho.coh.imag() == doctest::Approx(-0.5 * s.y * std::exp(-gv)).epsilon(1e-14));
    CHECK(std::abs(rho.coh) ==
          doctest::Approx(0.5 * std::hypot(s.x, s.y) * std::exp(-gv)).epsilon(1e-14));

    CHECK_THROWS_AS(evolve(s, -0.1), std::invalid_argument);
    QubitState bad;
    bad.x = 1.0;
    bad.z = 0.5;
    CHECK_THROWS_AS(validate_state(bad), std::invalid_argument);
}

TEST_CASE("sample_curve matches pointwise evaluation") {
    ReservoirModel r = model(2, 5.3e-9);
    double ts = r.natural_time();
    std::vector<double> times = {0.1 * ts, 0.5 * ts, 2.0 * ts};
    auto curve = sample_curve(r, times);
    REQUIRE(curve.size() == times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        CHECK(curve[i].ok);
        CHECK(curve[i].t == times[i]);
        CHECK(curve[i].gamma == doctest::Approx(gamma(r, times[i]).value).epsilon(1e-12));
        CHECK(curve[i].gamma_dot ==
              doctest::Approx(gamma_dot(r, times[i]).value).epsilon(1e-12));
    }
    CHECK_THROWS_AS(sample_curve(r, {1.0, 1.0}), std::invalid_argument);   // not increasing
    CHECK_THROWS_AS(sample_curve(r, {2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("default time grid spans the documented window") {
    ReservoirModel r = model(3, 5.3e-9);
    auto grid = default_time_grid(r);
    REQUIRE(grid.size() == 64);
    double ts = r.natural_time();
    CHECK(grid.front() == doctest::Approx(1e-2 * ts).epsilon(1e-12));
    CHECK(grid.back() == doctest::Approx(1e3 * ts).epsilon(1e-12));
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
}

TEST_CASE("momentum cutoff sits beyond the Gaussian envelope") {
    for (int d : {1, 2, 3}) {
        ReservoirModel r = model(d, 5.3e-9);
        double kc = momentum_cutoff(r, 1e-14);
        CHECK(kc >= 10.0 / r.sigma);
        // tightening the tolerance can only push the cutoff out
        CHECK(momentum_cutoff(r, 1e-20) >= kc);
    }
}
