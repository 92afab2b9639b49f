// units.hpp — internal unit system and the physical parameter set.
#pragma once

#include <optional>
#include <string>

namespace becdeph {

inline constexpr double bohr_radius_m = 5.29177210903e-11;

// Natural units for this problem: lengths in nanometres, masses in units of
// 1e-26 kg, and hbar = 1. Everything downstream works in these internal
// units; conversion happens once at the boundary.
struct UnitSystem {
    double length_m{1e-9};             // metres per internal length
    double mass_kg{1e-26};             // kilograms per internal mass
    double hbar_Js{1.054571817e-34};   // SI hbar, fixes the time scale

    double time_s() const { return mass_kg * length_m * length_m / hbar_Js; }
    double energy_J() const { return hbar_Js / time_s(); }
    double velocity_ms() const { return length_m / time_s(); }
};

// Model parameters. Field values are SI as loaded from user input; call
// to_internal() before handing them to the physics layer.
struct PhysicalParams {
    double m_A{3.82e-26};     // impurity mass [kg]
    double m_B{14.45e-26};    // boson mass [kg]
    double m_AB{3.02e-26};    // impurity-boson reduced mass [kg]; <=0 means "derive"
    double n3{1e20};          // 3D condensate density [m^-3]
    double a_B{5.3e-9};       // boson-boson scattering length [m]; 0 = free bosons
    double a_AB{55.0 * bohr_radius_m};  // impurity-boson scattering length [m]
    double a_perp_A{530e-9};  // transverse confinement, impurity [m]
    double a_perp_B{530e-9};  // transverse confinement, bosons [m]
    double a_z_A{530e-9};     // axial confinement, impurity [m]
    double a_z_B{530e-9};     // axial confinement, bosons [m]
    double sigma{45e-9};      // impurity wave-packet width [m]
    double L{150e-9};         // half separation of the double well [m]
    double omega0{0.0};       // bare qubit splitting [rad/s]; spectator in pure dephasing
    int dimension{3};         // effective reservoir dimension, 1..3
};

PhysicalParams default_params();

// Throws std::invalid_argument on non-physical values.
void validate(const PhysicalParams& p);

// Fill m_AB from m_A, m_B when it was left unset (<= 0). A supplied value
// always wins; reduced_mass_warning() reports when it disagrees with the
// derived one by more than 2%.
PhysicalParams with_reduced_mass(PhysicalParams p);
std::optional<std::string> reduced_mass_warning(const PhysicalParams& p);

PhysicalParams to_internal(const PhysicalParams& si, const UnitSystem& u = {});
PhysicalParams to_si(const PhysicalParams& internal, const UnitSystem& u = {});

} // namespace becdeph
