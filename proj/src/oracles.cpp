#include "qstirling/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qstirling/errors.hpp"

namespace qstirling {

namespace {

constexpr double two_over_sqrt_pi = 2.0 * std::numbers::inv_sqrtpi;
constexpr double series_limit = 2.0;
constexpr int fraction_depth = 80;

// erf(x) = 2/sqrt(pi) x e^{-x^2} sum_n (2x^2)^n / (1 3 5 ... (2n+1)); all terms positive.
double erf_series(double x) {
    const double x2 = x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 200; ++n) {
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return two_over_sqrt_pi * x * std::exp(-x2) * sum;
}

// erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), x >= series_limit.
double erfc_fraction(double x) {
    double f = x;
    for (int k = fraction_depth; k > 0; --k) f = x + 0.5 * k / f;
    return std::exp(-x * x) * std::numbers::inv_sqrtpi / f;
}

}  // namespace

double erf(double x) {
    if (!std::isfinite(x)) throw DomainError("erf: non-finite argument");
    const double a = std::abs(x);
    const double v = a < series_limit ? erf_series(a) : 1.0 - erfc_fraction(a);
    return std::signbit(x) ? -v : v;
}

namespace {

// 1 + erf(x) without the cancellation for large negative x.
double one_plus_erf(double x) {
    if (x >= 0.0) return 1.0 + qstirling::erf(x);
    const double a = -x;
    return a < series_limit ? 1.0 - erf_series(a) : erfc_fraction(a);
}

}  // namespace

ClosedForm z_well_closed(const WellGeometry& g, const PhysicalParams& p, double temperature,
                         const Corrections& flags) {
    if (!(std::isfinite(temperature) && temperature > 0.0)) throw DomainError("temperature must be positive");
    const double L = effective_length(g, p, flags);
    const double gc = flags.ncgup ? correction_factor(p) : 0.0;
    const double beta = 1.0 / (p.k_B * temperature);

    ClosedForm out;
    out.value = 1.0 / (std::sqrt(std::numbers::pi) * std::sqrt(beta * p.hbar * p.hbar * (2.0 + 3.0 * gc) / (L * L * p.mass)));

    // Continuum regime: the half-level edge correction sqrt(beta E1 / pi) stays
    // under 4%, and the quartic term is negligible at thermal momenta.
    const double k = std::numbers::pi * p.hbar / L;
    const double level_scale = k * k / (2.0 * p.mass) * (1.0 + 1.5 * gc);
    const double spacing_ratio = beta * level_scale;
    double quartic_ratio = 0.0;
    if (flags.relativistic) {
        const double quartic = k * k * k * k / (8.0 * p.mass * p.mass * p.mass * p.c * p.c);
        quartic_ratio = quartic / (level_scale * level_scale * beta);
    }
    out.regime_valid = spacing_ratio < 0.005 && quartic_ratio < 1e-3;
    std::ostringstream os;
    os << "beta*E1=" << spacing_ratio;
    if (flags.relativistic) os << " quartic/thermal=" << quartic_ratio;
    out.notes = os.str();
    return out;
}

ClosedForm z_ho_closed(const OscillatorGeometry& geometry, const PhysicalParams& params, double temperature) {
    if (!(std::isfinite(temperature) && temperature > 0.0)) throw DomainError("temperature must be positive");
    // The expression adds alpha zeta^2 to pure numbers, which only makes sense with
    // dimensionless momenta. SI input is evaluated in the natural system.
    const bool si = params.units == UnitSystem::SI;
    const PhysicalParams p = si ? to_natural(params) : params;
    const OscillatorGeometry g{si ? params.hbar * geometry.omega / params.k_B : geometry.omega};
    const double beta = 1.0 / (p.k_B * temperature);
    const double c = p.c, m = p.mass, hbar = p.hbar, w = g.omega;
    const double zeta = p.zeta();
    const double az = p.alpha * zeta * zeta;  // alpha zeta^2, as it appears in the expression
    const double c2 = c * c, c4 = c2 * c2, c6 = c4 * c2;
    const double m2 = m * m, m4 = m2 * m2, m6 = m4 * m2;
    const double hw2 = hbar * hbar * w * w;

    ClosedForm out;
    const double radicand = beta * w * w * (4.0 * az - 1.0);
    const double kappa_den = 640.0 * c2 * m * (-1.0 + 4.0 * c2 * m2 * az);
    if (!(radicand > 0.0) || kappa_den == 0.0) {
        out.value = std::numeric_limits<double>::quiet_NaN();
        out.real = false;
        std::ostringstream os;
        os << "non-real: Theta^2=" << radicand << " (4 alpha zeta^2 - 1 = " << 4.0 * az - 1.0 << ")";
        if (kappa_den == 0.0) os << "; kappa singular";
        out.notes = os.str();
        return out;
    }
    const double xi = -1024.0 * c6 * m4 * az + 256.0 * m6 * az * az - 35.0 * hw2 + 280.0 * c2 * m2 * az * hw2 -
                      16.0 * c4 * m2 * (-64.0 + 35.0 * m2 * az * az * hw2);
    const double kappa = beta * xi / kappa_den;
    const double theta = std::sqrt(radicand);
    const double arg = hbar * beta * w * (16.0 * c4 * m * m2 * az + 5.0 * hbar * w - 4.0 * c2 * m * (8.0 + 5.0 * hbar * m * az * w)) / theta;
    const double chi = one_plus_erf(arg);
    out.value = 2.0 * std::sqrt(2.0 * std::numbers::pi / 5.0) * std::exp(kappa) * chi / theta;
    out.real = std::isfinite(out.value);
    out.regime_valid = out.real;
    std::ostringstream os;
    os << "Theta=" << theta << " kappa=" << kappa << " erf argument=" << arg;
    out.notes = os.str();
    return out;
}

namespace {

OracleReport compare(const ClosedForm& closed, double direct) {
    OracleReport r;
    r.closed_form_value = closed.value;
    r.direct_sum_value = direct;
    r.relative_gap = std::abs(closed.value - direct) / std::max(std::abs(direct), std::numeric_limits<double>::min());
    r.regime_valid = closed.regime_valid;
    r.regime_notes = closed.notes;
    return r;
}

}  // namespace

OracleReport audit_well(const SpectrumModel& well, double temperature, const TruncationPolicy& policy) {
    if (well.medium != Medium::Well) throw ContractError("audit_well needs a single-well model");
    const auto closed = z_well_closed(well.well_geometry(), well.params, temperature, well.corrections);
    return compare(closed, partition_sum(well, temperature, policy).Z);
}

OracleReport audit_oscillator(const SpectrumModel& oscillator, double temperature, const TruncationPolicy& policy) {
    if (oscillator.medium != Medium::Oscillator) throw ContractError("audit_oscillator needs an oscillator model");
    const auto closed = z_ho_closed(oscillator.oscillator_geometry(), oscillator.params, temperature);
    if (!closed.real) {
        OracleReport r;
        r.closed_form_value = closed.value;
        r.direct_sum_value = std::numeric_limits<double>::quiet_NaN();
        r.relative_gap = std::numeric_limits<double>::quiet_NaN();
        r.regime_valid = false;
        r.regime_notes = closed.notes;
        return r;
    }
    return compare(closed, partition_sum(oscillator, temperature, policy).Z);
}

}  // namespace qstirling
