#pragma once

#include <array>
#include <string>
#include <vector>

#include "qstirling/statmech.hpp"

namespace qstirling {

/// Four-stroke Stirling cycle. State A is `hot_start` at T_hot, B is `hot_end`
/// at T_hot, C is `hot_end` at T_cold and D is `hot_start` at T_cold.
struct StirlingCycleSpec {
    SpectrumModel hot_start;
    SpectrumModel hot_end;
    double t_hot = 0;
    double t_cold = 0;
    TruncationPolicy policy;

    /// Barrier insertion: the width-`full_width` well at A/D, its split halves at B/C.
    static StirlingCycleSpec well(const WellGeometry& full_well, const PhysicalParams& p, const Corrections& flags,
                                  double t_hot, double t_cold, const TruncationPolicy& policy = {});
    /// Frequency change omega (A/D) -> omega_prime (B/C).
    static StirlingCycleSpec oscillator(double omega, double omega_prime, const PhysicalParams& p,
                                        const Corrections& flags, double t_hot, double t_cold,
                                        const TruncationPolicy& policy = {});

    void validate() const;
};

inline constexpr std::array<const char*, 4> stroke_states{"A", "B", "C", "D"};

/// Heats are counted positive when absorbed by the working medium.
struct CycleResult {
    double q_ab = 0, q_bc = 0, q_cd = 0, q_da = 0;
    double work = 0;
    /// work / (q_da + q_ab); NaN when `engine` is false.
    double eta = 0;
    /// 1 - T_cold/T_hot; NaN unless T_hot > T_cold.
    double eta_carnot = 0;
    /// False for a degenerate or non-engine configuration (T_hot <= T_cold or no net heat intake).
    bool engine = true;
    std::array<PartitionResult, 4> states;  // A, B, C, D
    std::vector<std::string> warnings;

    double q_in() const { return q_da + q_ab; }
    /// 1 + (Q_BC + Q_CD)/(Q_DA + Q_AB).
    double eta_heat_ratio_form() const { return 1.0 + (q_bc + q_cd) / (q_da + q_ab); }
};

/// (U_to - U_from) + k_B T (lnZ_to - lnZ_from) between two states at temperature T.
/// Throws ContractError if either state was computed at a different temperature.
double heat_isothermal(const PartitionResult& from, const PartitionResult& to, double temperature);

/// U_to - U_from.
double heat_isochoric(const PartitionResult& from, const PartitionResult& to);

CycleResult run_stirling(const StirlingCycleSpec& spec);

/// 1 - T_cold/T_hot; DomainError unless T_hot > T_cold > 0.
double carnot_bound(double t_hot, double t_cold);

}  // namespace qstirling
