#include "qstirling/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "qstirling/errors.hpp"

namespace qstirling {

namespace {

constexpr double default_half_width_m = 5e-9;
constexpr double default_hbar_omega = 4.0;        // k_B * 1 K
constexpr double default_hbar_omega_prime = 3.0;  // k_B * 1 K

double natural_or_si(UnitSystem u, double natural_value, double si_per_natural) {
    return u == UnitSystem::Natural ? natural_value : natural_value * si_per_natural;
}

}  // namespace

Corrections corrections_for(Preset preset) {
    switch (preset) {
        case Preset::Textbook: return Corrections::textbook();
        case Preset::Relativistic: return Corrections::relativistic_only();
        case Preset::NcgupFull: return Corrections::full();
    }
    return {};
}

UnitSystem CycleConfig::resolved_units() const {
    if (units) return *units;
    return medium == MediumKind::Well ? UnitSystem::SI : UnitSystem::Natural;
}

double CycleConfig::resolved_length() const {
    if (length) return *length;
    return resolved_units() == UnitSystem::SI ? default_half_width_m : default_half_width_m / natural_unit::length;
}

double CycleConfig::resolved_omega() const {
    return omega ? *omega : natural_or_si(resolved_units(), default_hbar_omega, natural_unit::angular_frequency);
}

double CycleConfig::resolved_omega_prime() const {
    return omega_prime ? *omega_prime
                       : natural_or_si(resolved_units(), default_hbar_omega_prime, natural_unit::angular_frequency);
}

PhysicalParams CycleConfig::params(double alpha) const {
    PhysicalParams p = resolved_units() == UnitSystem::SI ? PhysicalParams::si(alpha) : PhysicalParams::natural(alpha);
    if (mass) p.mass = *mass;
    if (planck_mass) p.planck_mass = *planck_mass;
    if (zeta) p.zeta_override = *zeta;
    return p;
}

StirlingCycleSpec build_cycle(const CycleConfig& config, double alpha) {
    const PhysicalParams p = config.params(alpha);
    const Corrections flags = corrections_for(config.preset);
    if (config.medium == MediumKind::Well) {
        const WellGeometry full{2.0 * config.resolved_length(), !config.coordinate_length};
        return StirlingCycleSpec::well(full, p, flags, config.t_hot, config.t_cold, config.policy);
    }
    return StirlingCycleSpec::oscillator(config.resolved_omega(), config.resolved_omega_prime(), p, flags,
                                         config.t_hot, config.t_cold, config.policy);
}

void SweepSpec::validate() const {
    if (steps < 2) throw ValidationError("steps must be at least 2");
    if (!(std::isfinite(alpha_min) && std::isfinite(alpha_max))) throw ValidationError("alpha range must be finite");
    if (alpha_min < 0) throw ValidationError("alpha_min must be non-negative");
    if (alpha_min > alpha_max) throw ValidationError("alpha_min must not exceed alpha_max");
    if (scale == Scale::Log && !(alpha_min > 0)) throw ValidationError("log scale needs alpha_min > 0");
    cycle.policy.validate();
}

std::vector<double> SweepSpec::alphas() const {
    validate();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    if (zero_anchor && alpha_min > 0) out.push_back(0.0);
    const double last = steps - 1;
    if (scale == Scale::Linear) {
        for (int i = 0; i < steps; ++i) out.push_back(alpha_min + (alpha_max - alpha_min) * (i / last));
    } else {
        const double lo = std::log10(alpha_min), hi = std::log10(alpha_max);
        for (int i = 0; i < steps; ++i) out.push_back(std::pow(10.0, lo + (hi - lo) * (i / last)));
    }
    const std::size_t first = out.size() - static_cast<std::size_t>(steps);
    out[first] = alpha_min;
    out.back() = alpha_max;
    return out;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) {
        if (!out.empty()) out += "; ";
        out += s;
    }
    return out;
}

}  // namespace

SweepRow make_row(double alpha, const CycleResult& result, const std::vector<std::string>& extra_warnings) {
    SweepRow row;
    row.alpha = alpha;
    row.eta = result.eta;
    row.work = result.work;
    row.q_ab = result.q_ab;
    row.q_bc = result.q_bc;
    row.q_cd = result.q_cd;
    row.q_da = result.q_da;
    row.eta_carnot = result.eta_carnot;
    for (std::size_t i = 0; i < 4; ++i) row.turnover[i] = result.states[i].turnover_hit;
    std::vector<std::string> all = extra_warnings;
    all.insert(all.end(), result.warnings.begin(), result.warnings.end());
    row.warnings = join(all);
    return row;
}

SweepRow failed_row(double alpha, const std::string& error) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    SweepRow row;
    row.alpha = alpha;
    row.eta = row.work = row.q_ab = row.q_bc = row.q_cd = row.q_da = row.eta_carnot = nan;
    row.warnings = "error: " + error;
    row.failed = true;
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    const std::vector<double> alphas = spec.alphas();
    std::vector<SweepRow> rows(alphas.size());

    auto evaluate = [&](std::size_t i) {
        const double alpha = alphas[i];
        try {
            const auto cycle = build_cycle(spec.cycle, alpha);
            const auto warnings = cycle.hot_start.params.validate();
            rows[i] = make_row(alpha, run_stirling(cycle), warnings);
        } catch (const std::exception& e) {
            rows[i] = failed_row(alpha, e.what());
        }
    };

    unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(alphas.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < alphas.size(); ++i) evaluate(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < alphas.size(); i = next++) evaluate(i);
        });
    pool.clear();  // joins
    return rows;
}

}  // namespace qstirling
