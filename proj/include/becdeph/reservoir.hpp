// reservoir.hpp — dimensional reduction of the condensate and its excitation spectrum.
#pragma once

#include "becdeph/units.hpp"

namespace becdeph {

// Reduced description of the D-dimensional condensate bath. All fields are in
// internal units (units.hpp); build one via reduce().
struct ReservoirModel {
    int dimension{3};
    double g{0.0};       // boson-boson coupling g_D [energy * length^D]
    double n{0.0};       // condensate density n_D [length^-D]
    double eta{0.0};     // impurity-boson coupling eta_D [energy * length^D]
    double m_B{0.0};     // boson mass
    double sigma{0.0};   // impurity wave-packet width
    double L{0.0};       // half separation of the double well

    double mu() const { return n * g; }   // interaction energy scale n_D g_D
    double sound_speed() const;           // c_D = sqrt(n_D g_D / m_B)
    double natural_time() const { return m_B * sigma * sigma; }
};

// Collapse the 3D inputs to the effective D-dimensional couplings and density.
// Expects parameters already converted to internal units.
ReservoirModel reduce(const PhysicalParams& p);

double kinetic_energy(const ReservoirModel& r, double k);   // eps_k = k^2 / (2 m_B)
double dispersion(const ReservoirModel& r, double k);       // omega_k, Bogoliubov
double k_of_omega(const ReservoirModel& r, double omega);   // inverse of dispersion
double group_velocity(const ReservoirModel& r, double k);   // d omega_k / dk

// Angular integral of sin^2(k . L) over the D-dimensional unit sphere,
// as a function of x = k L.
double angular_factor(int dimension, double x);

} // namespace becdeph
