#include "qstirling/cycle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qstirling/errors.hpp"

namespace qstirling {

StirlingCycleSpec StirlingCycleSpec::well(const WellGeometry& full_well, const PhysicalParams& p,
                                          const Corrections& flags, double t_hot, double t_cold,
                                          const TruncationPolicy& policy) {
    return {SpectrumModel::well(full_well, p, flags), SpectrumModel::double_well(full_well, p, flags), t_hot, t_cold,
            policy};
}

StirlingCycleSpec StirlingCycleSpec::oscillator(double omega, double omega_prime, const PhysicalParams& p,
                                                const Corrections& flags, double t_hot, double t_cold,
                                                const TruncationPolicy& policy) {
    return {SpectrumModel::oscillator({omega}, p, flags), SpectrumModel::oscillator({omega_prime}, p, flags), t_hot,
            t_cold, policy};
}

void StirlingCycleSpec::validate() const {
    if (!(std::isfinite(t_hot) && t_hot > 0.0 && std::isfinite(t_cold) && t_cold > 0.0))
        throw ValidationError("bath temperatures must be finite and positive");
    hot_start.validate();
    hot_end.validate();
    policy.validate();
    if (hot_start.params.units != hot_end.params.units)
        throw ValidationError("both spectra of a cycle must use the same unit system");
}

double heat_isothermal(const PartitionResult& from, const PartitionResult& to, double temperature) {
    if (from.temperature != temperature || to.temperature != temperature) {
        std::ostringstream os;
        os << "isothermal heat needs both states at T=" << temperature << ", got " << from.temperature << " and "
           << to.temperature;
        throw ContractError(os.str());
    }
    // The reference-energy parts, dE0 - k_B T beta dE0, cancel identically.
    return (to.U_excess - from.U_excess) + from.thermal_energy * (to.lnZ_shifted - from.lnZ_shifted);
}

double heat_isochoric(const PartitionResult& from, const PartitionResult& to) {
    return (to.reference_energy - from.reference_energy) + (to.U_excess - from.U_excess);
}

double carnot_bound(double t_hot, double t_cold) {
    if (!(t_cold > 0.0 && t_hot > t_cold && std::isfinite(t_hot)))
        throw DomainError("Carnot bound needs T_hot > T_cold > 0");
    return 1.0 - t_cold / t_hot;
}

CycleResult run_stirling(const StirlingCycleSpec& spec) {
    spec.validate();
    CycleResult out;
    const std::array<const SpectrumModel*, 4> models{&spec.hot_start, &spec.hot_end, &spec.hot_end, &spec.hot_start};
    const std::array<double, 4> temps{spec.t_hot, spec.t_hot, spec.t_cold, spec.t_cold};
    for (std::size_t i = 0; i < 4; ++i) {
        try {
            out.states[i] = partition_sum(*models[i], temps[i], spec.policy);
        } catch (const std::exception& e) {
            throw StrokeError(stroke_states[i], e.what());
        }
    }
    const auto& [a, b, c, d] = out.states;
    out.q_ab = heat_isothermal(a, b, spec.t_hot);
    out.q_bc = heat_isochoric(b, c);
    out.q_cd = heat_isothermal(c, d, spec.t_cold);
    out.q_da = heat_isochoric(d, a);
    out.work = out.q_ab + out.q_bc + out.q_cd + out.q_da;

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    out.eta_carnot = spec.t_hot > spec.t_cold ? carnot_bound(spec.t_hot, spec.t_cold) : nan;
    if (!(spec.t_hot > spec.t_cold)) {
        out.engine = false;
        out.warnings.emplace_back(spec.t_hot == spec.t_cold ? "degenerate cycle: T_hot equals T_cold"
                                                            : "non-engine regime: T_hot below T_cold");
    } else if (!(out.q_in() > 0.0)) {
        out.engine = false;
        out.warnings.emplace_back("non-engine regime: no net heat intake from the hot bath");
    }
    out.eta = out.engine ? out.work / out.q_in() : nan;

    for (std::size_t i = 0; i < 4; ++i) {
        const auto& s = out.states[i];
        std::ostringstream os;
        if (s.turnover_hit) {
            os << "state " << stroke_states[i] << ": sum stopped at spectrum turnover n=" << s.last_n;
            out.warnings.push_back(os.str());
        } else if (s.cap_hit) {
            os << "state " << stroke_states[i] << ": hard cap reached, tail weight " << s.tail_weight_estimate;
            out.warnings.push_back(os.str());
        }
        if (models[i]->corrections.relativistic && s.momentum_ratio > 0.3) {
            std::ostringstream ms;
            ms << "state " << stroke_states[i] << ": p/mc=" << s.momentum_ratio
               << " at the summation cutoff, relativistic expansion unreliable";
            out.warnings.push_back(ms.str());
        }
    }
    return out;
}

}  // namespace qstirling
