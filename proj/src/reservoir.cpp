// reservoir.cpp — reduced couplings, Bogoliubov dispersion and angular factors.
#include "becdeph/reservoir.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "becdeph/special_functions.hpp"

namespace becdeph {

using std::numbers::pi;

double ReservoirModel::sound_speed() const {
    return g > 0.0 ? std::sqrt(n * g / m_B) : 0.0;
}

ReservoirModel reduce(const PhysicalParams& p) {
    validate(p);
    ReservoirModel r;
    r.dimension = p.dimension;
    r.m_B = p.m_B;
    r.sigma = p.sigma;
    r.L = p.L;

    const double g3 = 4.0 * pi * p.a_B / p.m_B;
    const double eta3 = 2.0 * pi * p.a_AB / p.m_AB;
    switch (p.dimension) {
    case 3:
        r.g = g3;
        r.n = p.n3;
        r.eta = eta3;
        break;
    case 2:
        r.g = g3 / (std::sqrt(2.0 * pi) * p.a_z_B);
        r.n = std::sqrt(pi) * p.n3 * p.a_z_B;
        r.eta = eta3 / std::sqrt(pi * (p.a_z_A * p.a_z_A + p.a_z_B * p.a_z_B));
        break;
    case 1:
        r.g = g3 / (2.0 * pi * p.a_perp_B * p.a_perp_B);
        r.n = pi * p.n3 * p.a_perp_B * p.a_perp_B;
        r.eta = eta3 / (pi * (p.a_perp_A * p.a_perp_A + p.a_perp_B * p.a_perp_B));
        break;
    default:
        throw std::invalid_argument("dimension must be 1, 2 or 3");
    }
    return r;
}

double kinetic_energy(const ReservoirModel& r, double k) {
    return k * k / (2.0 * r.m_B);
}

double dispersion(const ReservoirModel& r, double k) {
    const double eps = kinetic_energy(r, k);
    return std::sqrt(eps * (2.0 * r.mu() + eps));
}

double k_of_omega(const ReservoirModel& r, double omega) {
    if (omega <= 0.0) return 0.0;
    // sqrt(mu^2 + w^2) - mu rewritten to avoid cancellation for w << mu
    const double mu = r.mu();
    const double root = std::sqrt(mu * mu + omega * omega);
    return omega * std::sqrt(2.0 * r.m_B / (root + mu));
}

double group_velocity(const ReservoirModel& r, double k) {
    if (k <= 0.0) return r.sound_speed();
    const double eps = kinetic_energy(r, k);
    const double omega = dispersion(r, k);
    if (omega == 0.0) return 0.0;   // free reservoir, k -> 0
    return k * (r.mu() + eps) / (r.m_B * omega);
}

double angular_factor(int dimension, double x) {
    switch (dimension) {
    case 1: {
        const double s = std::sin(x);
        return s * s;
    }
    case 2:
        if (std::fabs(x) < 1e-4) {
            // 1 - J0(2x) by series; the direct form cancels to noise here
            const double x2 = x * x;
            return pi * x2 * (1.0 - x2 / 4.0 + x2 * x2 / 36.0);
        }
        return pi * (1.0 - num::bessel_j0(2.0 * x));
    case 3:
        if (std::fabs(x) < 1e-4) {
            // 1 - sinc(2x) by series, three terms
            const double y2 = 4.0 * x * x;
            return 2.0 * pi * (y2 / 6.0 - y2 * y2 / 120.0 + y2 * y2 * y2 / 5040.0);
        }
        return 2.0 * pi * (1.0 - std::sin(2.0 * x) / (2.0 * x));
    default:
        throw std::invalid_argument("dimension must be 1, 2 or 3");
    }
}

} // namespace becdeph
