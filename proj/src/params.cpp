#include "qstirling/params.hpp"

#include <cmath>
#include <sstream>

#include "qstirling/errors.hpp"

namespace qstirling {

PhysicalParams PhysicalParams::si(double alpha) {
    PhysicalParams p;
    p.alpha = alpha;
    return p;
}

PhysicalParams PhysicalParams::natural(double alpha) {
    PhysicalParams p;
    p.units = UnitSystem::Natural;
    p.hbar = 1.0;
    p.c = 1.0;
    p.k_B = 1.0;
    p.mass = constants::electron_mass / natural_unit::mass;
    p.planck_mass = constants::planck_mass / natural_unit::mass;
    p.alpha = alpha;
    return p;
}

double PhysicalParams::zeta() const {
    if (zeta_override) return *zeta_override;
    return 1.0 / (c * planck_mass);
}

std::vector<std::string> PhysicalParams::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ValidationError(what);
    };
    require(std::isfinite(hbar) && hbar > 0, "hbar must be finite and positive");
    require(std::isfinite(c) && c > 0, "c must be finite and positive");
    require(std::isfinite(k_B) && k_B > 0, "k_B must be finite and positive");
    require(std::isfinite(mass) && mass > 0, "mass must be finite and positive");
    require(std::isfinite(planck_mass) && planck_mass > 0, "Planck mass must be finite and positive");
    require(std::isfinite(alpha), "alpha must be finite");
    require(alpha >= 0, "alpha must be non-negative");
    if (zeta_override) require(std::isfinite(*zeta_override) && *zeta_override >= 0, "zeta must be finite and non-negative");
    if (units == UnitSystem::Natural) require(hbar == 1.0 && c == 1.0 && k_B == 1.0, "natural units require hbar = c = k_B = 1");

    std::vector<std::string> warnings;
    if (alpha > alpha_bound) {
        std::ostringstream os;
        os << "alpha=" << alpha << " exceeds the bound " << alpha_bound;
        warnings.push_back(os.str());
    }
    return warnings;
}

double correction_factor(const PhysicalParams& p) {
    const double zeta = p.zeta();
    if (!std::isfinite(p.alpha) || !std::isfinite(zeta) || !std::isfinite(p.mass) || !std::isfinite(p.c))
        throw ValidationError("correction_factor: non-finite input");
    if (p.alpha == 0.0 || zeta == 0.0) return 0.0;
    const double zmc = zeta * p.mass * p.c;
    const double g = p.alpha * zmc * zmc;
    if (!std::isfinite(g)) throw ValidationError("correction_factor: result is not finite");
    return g;
}

PhysicalParams to_natural(const PhysicalParams& si) {
    if (si.units == UnitSystem::Natural) return si;
    PhysicalParams n = PhysicalParams::natural(si.alpha);
    n.mass = si.mass / natural_unit::mass;
    n.planck_mass = si.planck_mass / natural_unit::mass;
    if (si.zeta_override) n.zeta_override = *si.zeta_override * natural_unit::momentum;
    return n;
}

}  // namespace qstirling
