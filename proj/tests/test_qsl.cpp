// test_qsl.cpp — Fisher information, Bures geometry, speed-limit solver
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "becdeph/dephasing.hpp"
#include "becdeph/errors.hpp"
#include "becdeph/qsl.hpp"
#include "becdeph/reservoir.hpp"
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

TEST_CASE("qfi closed form at hand-checked points") {
    // equatorial pure state at gamma = ln(2)/2: e^{-2 gamma} = 1/2,
    // F = gdot^2 e^{-2 gamma} / (1 - e^{-2 gamma}) = gdot^2
    QubitState eq;
    double g = 0.5 * std::log(2.0);
    CHECK(qfi(eq, g, 0.7) == doctest::Approx(0.7 * 0.7).epsilon(1e-14));
    CHECK(qfi(eq, g, -0.7) == doctest::Approx(0.49).epsilon(1e-14));

    // pole state never dephases
    QubitState pole;
    pole.x = 0.0;
    pole.z = 1.0;
    CHECK(qfi(pole, 0.3, 1.0) == 0.0);

    // pure equatorial state at gamma = 0 with nonzero rate diverges
    CHECK(std::isinf(qfi(eq, 0.0, 1.0)));
    CHECK(qfi(eq, 0.0, 0.0) == 0.0);

    CHECK_THROWS_AS(qfi(eq, -0.1, 1.0), std::invalid_argument);
    QubitState long_bloch;  // |r| > 1 makes the denominator negative
    long_bloch.x = 1.0;
    long_bloch.y = 0.5;
    CHECK_THROWS_AS(qfi(long_bloch, 1e-8, 1.0), NegativeDenominator);
}

TEST_CASE("qfi matches the eigen-decomposition formula") {
    // F = sum_i pdot_i^2 / p_i + 4 (p+ - p-)^2 |<psi+|d psi->|^2, with the
    // gamma derivatives taken by fourth-order finite differences
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        double rlen = 0.05 + 0.93 * u(rng);
        double cth = 2.0 * u(rng) - 1.0;
        double phi = 2.0 * M_PI * u(rng);
        QubitState s;
        s.z = rlen * cth;
        double rho = rlen * std::sqrt(std::max(0.0, 1.0 - cth * cth));
        s.x = rho * std::cos(phi);
        s.y = rho * std::sin(phi);
        if (s.x * s.x + s.y * s.y < 0.01) continue;
        double g = std::pow(10.0, -3.0 + 3.5 * u(rng));
        double gdot = (u(rng) < 0.5 ? -1.0 : 1.0) * std::pow(10.0, -3.0 + 3.3 * u(rng));

        double closed = qfi(s, g, gdot);

        const double h = 1e-5;
        auto probs = [&](double gg) { return eigensystem(s, gg); };
        double dpp = (-probs(g + 2 * h).p_plus + 8 * probs(g + h).p_plus -
                      8 * probs(g - h).p_plus + probs(g - 2 * h).p_plus) /
                     (12 * h);
        Eigensystem es = eigensystem(s, g);
        double classical = 0.0;
        if (es.p_plus > 1e-14) classical += dpp * dpp / es.p_plus;
        if (es.p_minus > 1e-14) classical += dpp * dpp / es.p_minus;
        std::complex<double> ov(0.0, 0.0);
        Eigensystem ep = probs(g + h), em = probs(g - h), ep2 = probs(g + 2 * h),
                    em2 = probs(g - 2 * h);
        for (int i = 0; i < 2; ++i) {
            std::complex<double> d = (-ep2.psi_minus[i] + 8.0 * ep.psi_minus[i] -
                                      8.0 * em.psi_minus[i] + em2.psi_minus[i]) /
                                     (12.0 * h);
            ov += std::conj(es.psi_plus[i]) * d;
        }
        double dp = es.p_plus - es.p_minus;
        double quantum = 4.0 * dp * dp * std::norm(ov);
        double reference = (classical + quantum) * gdot * gdot;
        CHECK(closed == doctest::Approx(reference).epsilon(1e-7));
        ++checked;
    }
    CHECK(checked > 200);
}

TEST_CASE("eigensystem reconstructs the density matrix") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        QubitState s;
        double rlen = std::cbrt(u(rng));
        double cth = 2.0 * u(rng) - 1.0;
        double phi = 2.0 * M_PI * u(rng);
        s.z = rlen * cth;
        double rho = rlen * std::sqrt(std::max(0.0, 1.0 - cth * cth));
        s.x = rho * std::cos(phi);
        s.y = rho * std::sin(phi);
        double g = 2.0 * u(rng);

        Eigensystem es = eigensystem(s, g);
        CHECK(es.p_plus >= 0.0);
        CHECK(es.p_plus + es.p_minus == doctest::Approx(1.0).epsilon(1e-14));

        // orthonormality
        std::complex<double> n1(0, 0), n2(0, 0), cr(0, 0);
        for (int i = 0; i < 2; ++i) {
            n1 += std::conj(es.psi_plus[i]) * es.psi_plus[i];
            n2 += std::conj(es.psi_minus[i]) * es.psi_minus[i];
            cr += std::conj(es.psi_plus[i]) * es.psi_minus[i];
        }
        CHECK(n1.real() == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(n2.real() == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::abs(cr) < 1e-13);

        // rho = p+ |psi+><psi+| + p- |psi-><psi-| must equal evolve()
        DensityMatrix rho_ref = evolve(s, g);
        auto entry = [&](int i, int j) {
            return es.p_plus * es.psi_plus[i] * std::conj(es.psi_plus[j]) +
                   es.p_minus * es.psi_minus[i] * std::conj(es.psi_minus[j]);
        };
        CHECK(std::abs(entry(0, 0) - std::complex<double>(rho_ref.p_e)) < 1e-14);
        CHECK(std::abs(entry(1, 1) - std::complex<double>(rho_ref.p_g)) < 1e-14);
        CHECK(std::abs(entry(0, 1) - rho_ref.coh) < 1e-14);
    }

    // maximally mixed input is flagged degenerate
    QubitState origin;
    origin.x = origin.y = origin.z = 0.0;
    CHECK(eigensystem(origin, 1.0).degenerate);
}

TEST_CASE("bures angle closed form on the equator") {
    QubitState eq;
    DensityMatrix r0 = evolve(eq, 0.0);
    for (double g : {0.05, 0.4, 1.3, 3.0}) {
        DensityMatrix rt = evolve(eq, g);
        double expect = 0.5 * std::acos(std::exp(-g));
        CHECK(bures_angle(r0, rt) == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(bures_angle(r0, r0) == doctest::Approx(0.0));

    // tiny angles between nearly identical mixed states keep relative
    // accuracy; a fidelity-based evaluation would return O(sqrt(eps)) noise
    QubitState mixed;
    mixed.x = 0.2;
    mixed.y = 0.15;
    mixed.z = 0.1;
    double g = 1e-9;
    double c2 = mixed.x * mixed.x + mixed.y * mixed.y;
    double w = -std::expm1(-g);
    double u2 = -std::expm1(-2.0 * g);
    double det0 = 0.25 * (1.0 - c2 - mixed.z * mixed.z);
    double detb = det0 + 0.25 * c2 * u2;
    double sd = 0.5 * c2 * u2 / (std::sqrt(det0) + std::sqrt(detb));
    double ref = std::asin(0.5 * std::sqrt(c2 * w * w + sd * sd));
    CHECK(bures_angle(evolve(mixed, 0.0), evolve(mixed, g)) ==
          doctest::Approx(ref).epsilon(1e-6));

    DensityMatrix bad;
    bad.p_e = -0.2;
    bad.p_g = 1.2;
    CHECK_THROWS_AS(bures_angle(bad, r0), std::invalid_argument);
    DensityMatrix off_trace;
    off_trace.p_e = 0.6;
    off_trace.p_g = 0.6;
    CHECK_THROWS_AS(bures_angle(off_trace, r0), std::invalid_argument);
}

TEST_CASE("distance bound basics") {
    ReservoirModel r = model(3, 5.3e-9);
    QubitState eq;
    CHECK(distance_bound(r, eq, 0.0) == 0.0);
    CHECK_THROWS_AS(distance_bound(r, eq, -1.0), std::invalid_argument);

    // equatorial pure state saturates the bound: D_ub(tau) = acos(e^-Gamma)/2
    double tau = 0.5 * r.natural_time();
    double expect = 0.5 * std::acos(std::exp(-gamma(r, tau).value));
    CHECK(distance_bound(r, eq, tau) == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("speed limit solver") {
    ReservoirModel r = model(3, 5.3e-9);
    QslProblem prob;
    prob.reservoir = r;
    prob.distance = 1.2e-4;

    QslResult res = solve_tau_qsl(prob);
    CHECK(res.reachable);
    double ts = r.natural_time();
    CHECK(res.tau / ts > 0.003660);
    CHECK(res.tau / ts < 0.003670);
    CHECK(res.speed == doctest::Approx(prob.distance / res.tau).epsilon(1e-12));
    CHECK(std::fabs(res.achieved - prob.distance) <= 1e-10);
    CHECK(res.iterations > 0);

    // zero distance is reached immediately
    prob.distance = 0.0;
    QslResult zero = solve_tau_qsl(prob);
    CHECK(zero.reachable);
    CHECK(zero.tau == 0.0);
    CHECK(zero.speed == 0.0);

    prob.distance = -0.1;
    CHECK_THROWS_AS(solve_tau_qsl(prob), std::invalid_argument);
}

TEST_CASE("unreachable targets are reported, not faked") {
    ReservoirModel r = model(3, 5.3e-9);
    QslProblem prob;
    prob.reservoir = r;
    prob.distance = 0.5;  // far above the dephasing ceiling
    prob.t_max = 100.0 * r.natural_time();

    QslResult res = solve_tau_qsl(prob);
    CHECK_FALSE(res.reachable);
    CHECK(std::isnan(res.tau));
    CHECK(std::isnan(res.speed));
    CHECK(res.sup_dub > 0.115);
    CHECK(res.sup_dub < 0.130);
    CHECK(res.t_max_used == doctest::Approx(prob.t_max));
}
