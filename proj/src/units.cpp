// units.cpp — parameter defaults, validation and unit conversion.
#include "becdeph/units.hpp"

#include <cmath>
#include <stdexcept>

namespace becdeph {

PhysicalParams default_params() { return PhysicalParams{}; }

void validate(const PhysicalParams& p) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("parameter out of range: ") + what);
    };
    require(p.m_A > 0.0, "m_A must be positive");
    require(p.m_B > 0.0, "m_B must be positive");
    require(p.m_AB > 0.0, "m_AB must be positive (supply it or leave derivable inputs)");
    require(p.n3 > 0.0, "n3 must be positive");
    require(p.a_B >= 0.0, "a_B must be non-negative");
    require(p.a_AB > 0.0, "a_AB must be positive");
    require(p.a_perp_A > 0.0, "a_perp_A must be positive");
    require(p.a_perp_B > 0.0, "a_perp_B must be positive");
    require(p.a_z_A > 0.0, "a_z_A must be positive");
    require(p.a_z_B > 0.0, "a_z_B must be positive");
    require(p.sigma > 0.0, "sigma must be positive");
    require(p.L >= 0.0, "L must be non-negative");
    require(p.omega0 >= 0.0, "omega0 must be non-negative");
    require(p.dimension >= 1 && p.dimension <= 3, "dimension must be 1, 2 or 3");
    require(std::isfinite(p.m_A) && std::isfinite(p.m_B) && std::isfinite(p.n3) &&
                std::isfinite(p.a_B) && std::isfinite(p.a_AB) && std::isfinite(p.sigma) &&
                std::isfinite(p.L) && std::isfinite(p.omega0),
            "all values must be finite");
}

static double derived_reduced_mass(const PhysicalParams& p) {
    return p.m_A * p.m_B / (p.m_A + p.m_B);
}

PhysicalParams with_reduced_mass(PhysicalParams p) {
    if (p.m_AB <= 0.0) p.m_AB = derived_reduced_mass(p);
    return p;
}

std::optional<std::string> reduced_mass_warning(const PhysicalParams& p) {
    if (p.m_AB <= 0.0 || p.m_A <= 0.0 || p.m_B <= 0.0) return std::nullopt;
    const double derived = derived_reduced_mass(p);
    const double mismatch = std::fabs(p.m_AB - derived) / derived;
    if (mismatch > 0.02) {
        return "supplied m_AB differs from m_A*m_B/(m_A+m_B) by " +
               std::to_string(mismatch * 100.0) + "%; using the supplied value";
    }
    return std::nullopt;
}

PhysicalParams to_internal(const PhysicalParams& si, const UnitSystem& u) {
    PhysicalParams p = si;
    const double len = u.length_m, mass = u.mass_kg;
    p.m_A /= mass;
    p.m_B /= mass;
    p.m_AB /= mass;
    p.n3 *= len * len * len;
    p.a_B /= len;
    p.a_AB /= len;
    p.a_perp_A /= len;
    p.a_perp_B /= len;
    p.a_z_A /= len;
    p.a_z_B /= len;
    p.sigma /= len;
    p.L /= len;
    p.omega0 *= u.time_s();
    return p;
}

PhysicalParams to_si(const PhysicalParams& internal, const UnitSystem& u) {
    PhysicalParams p = internal;
    const double len = u.length_m, mass = u.mass_kg;
    p.m_A *= mass;
    p.m_B *= mass;
    p.m_AB *= mass;
    p.n3 /= len * len * len;
    p.a_B *= len;
    p.a_AB *= len;
    p.a_perp_A *= len;
    p.a_perp_B *= len;
    p.a_z_A *= len;
    p.a_z_B *= len;
    p.sigma *= len;
    p.L *= len;
    p.omega0 /= u.time_s();
    return p;
}

} // namespace becdeph
