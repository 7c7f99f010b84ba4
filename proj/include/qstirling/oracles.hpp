#pragma once

#include <string>

#include "qstirling/statmech.hpp"

namespace qstirling {

/// Error function, |error| <= 1e-12 on [-6, 6] and exactly odd.
/// Throws DomainError for non-finite x.
double erf(double x);

/// A closed-form partition function evaluated outside the summation path.
struct ClosedForm {
    double value = 0;            // NaN when not real
    bool real = true;
    bool regime_valid = false;   // whether the approximation behind it applies
    std::string notes;
};

/// Continuum partition function of the well,
/// 1 / (sqrt(pi) sqrt(beta hbar^2 (2 + 3 g) / (L^2 m))), with the quartic term dropped.
ClosedForm z_well_closed(const WellGeometry& g, const PhysicalParams& p, double temperature,
                         const Corrections& flags = Corrections::full());

/// The erf-based oscillator partition function as printed,
/// 2 sqrt(2 pi / 5) e^kappa chi / Theta with Theta = sqrt(beta w^2 (4 alpha zeta^2 - 1)).
/// Theta is imaginary whenever 4 alpha zeta^2 < 1; the result is then flagged non-real.
/// SI parameters are converted to the natural system first, where alpha zeta^2 is a pure number.
ClosedForm z_ho_closed(const OscillatorGeometry& g, const PhysicalParams& p, double temperature);

struct OracleReport {
    double closed_form_value = 0;
    double direct_sum_value = 0;
    double relative_gap = 0;  // |closed - direct| / max(|direct|, tiny); NaN if closed form is not real
    bool regime_valid = false;
    std::string regime_notes;
};

/// Compare z_well_closed with the direct sum for a Medium::Well model.
OracleReport audit_well(const SpectrumModel& well, double temperature, const TruncationPolicy& policy = {});

/// Compare z_ho_closed with the direct sum for a Medium::Oscillator model.
/// The direct sum is skipped (NaN) when the closed form is not real.
OracleReport audit_oscillator(const SpectrumModel& oscillator, double temperature,
                              const TruncationPolicy& policy = {});

}  // namespace qstirling
