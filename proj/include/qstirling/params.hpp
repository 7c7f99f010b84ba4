#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qstirling {

enum class UnitSystem { SI, Natural };

/// CODATA 2018 values, SI.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double c = 299792458.0;                   // m / s
inline constexpr double k_B = 1.380649e-23;                // J / K
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double planck_mass = 2.176434e-8;         // kg
}  // namespace constants

/// Largest NC parameter accepted without a warning.
inline constexpr double alpha_bound = 1e41;

/// Physical constants, particle mass and the NC/GUP deformation for one computation.
///
/// In Natural mode hbar = c = k_B = 1 and the energy unit is k_B * (1 K), so
/// temperatures keep their kelvin values, masses are rest energies in kelvin and
/// lengths are measured in hbar c / (k_B * 1 K).
struct PhysicalParams {
    UnitSystem units = UnitSystem::SI;
    double hbar = constants::hbar;
    double c = constants::c;
    double k_B = constants::k_B;
    double mass = constants::electron_mass;
    double planck_mass = constants::planck_mass;
    double alpha = 0.0;
    /// Replaces the derived 1/(c M_pl) when set.
    std::optional<double> zeta_override;

    /// Electron in SI units.
    static PhysicalParams si(double alpha = 0.0);
    /// Electron in natural units (energy unit k_B * 1 K).
    static PhysicalParams natural(double alpha = 0.0);

    /// Inverse-momentum deformation scale.
    double zeta() const;

    /// Throws ValidationError on non-finite or out-of-domain values; returns
    /// warnings for values that are usable but outside the expected range.
    std::vector<std::string> validate() const;
};

/// g = alpha zeta^2 m^2 c^2, the dimensionless strength of the NC/GUP correction.
double correction_factor(const PhysicalParams& p);

/// Unit sizes of the natural system expressed in SI.
namespace natural_unit {
inline constexpr double energy = constants::k_B;                                   // J
inline constexpr double mass = constants::k_B / (constants::c * constants::c);     // kg
inline constexpr double length = constants::hbar * constants::c / constants::k_B;  // m
inline constexpr double angular_frequency = constants::k_B / constants::hbar;      // rad / s
inline constexpr double momentum = constants::k_B / constants::c;                  // kg m / s
}  // namespace natural_unit

/// Re-express SI parameters in the natural system. Dimensionless inputs (alpha)
/// carry over unchanged.
PhysicalParams to_natural(const PhysicalParams& si);

}  // namespace qstirling
