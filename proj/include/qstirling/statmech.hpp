#pragma once

#include <cstdint>

#include "qstirling/spectra.hpp"

namespace qstirling {

/// How a Boltzmann sum is cut off.
struct TruncationPolicy {
    /// Stop once a term falls below weight_epsilon times the running sum.
    double weight_epsilon = 1e-16;
    /// Maximum number of levels summed.
    std::int64_t hard_cap = 1'000'000;
    /// Stop at the last level before the spectrum stops increasing.
    bool respect_turnover = true;
    /// Reaching the turnover while the last weight still exceeds this fraction of
    /// Z is a perturbative-regime violation.
    double violation_threshold = 1e-6;

    void validate() const;
};

/// Canonical state of one spectrum at one temperature.
///
/// Levels are summed relative to `reference_energy` (the lowest-n level):
/// lnZ = lnZ_shifted - beta * reference_energy and U = reference_energy + U_excess.
/// The shifted parts are what heats are assembled from.
struct PartitionResult {
    double temperature = 0;
    double beta = 0;
    double thermal_energy = 0;  // k_B T

    double Z = 0;  // exp(lnZ); underflows for large reference energies, lnZ is authoritative
    double lnZ = 0;
    double U = 0;
    double F = 0;  // -k_B T lnZ

    double reference_energy = 0;
    double lnZ_shifted = 0;
    double U_excess = 0;

    std::int64_t n_used = 0;              // number of levels summed
    std::int64_t last_n = 0;              // quantum number of the last level summed
    double tail_weight_estimate = 0;      // last summed weight relative to Z
    bool turnover_hit = false;
    bool cap_hit = false;                 // hard_cap reached before the weights decayed
    double momentum_ratio = 0;            // p/(mc) at last_n
};

/// Truncated direct Boltzmann sum with compensated accumulation.
/// Throws DomainError for T <= 0, PerturbativeRegimeError on a populated turnover.
PartitionResult partition_sum(const SpectrumModel& model, double temperature, const TruncationPolicy& policy = {});

/// Central difference -d lnZ / d beta at relative step h; cross-check for PartitionResult::U.
double internal_energy_fd(const SpectrumModel& model, double temperature, const TruncationPolicy& policy = {},
                          double h = 1e-5);

}  // namespace qstirling
