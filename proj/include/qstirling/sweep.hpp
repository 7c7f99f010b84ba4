#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qstirling/cycle.hpp"

namespace qstirling {

enum class MediumKind { Well, Oscillator };
enum class Preset { Textbook, Relativistic, NcgupFull };
enum class Scale { Linear, Log };
enum class OutputFormat { Csv, Json };

Corrections corrections_for(Preset preset);

/// Everything but alpha needed to set up one Stirling cycle.
///
/// Unset optionals take defaults in the resolved unit system: an electron, a well
/// half-width of 5 nm (the unsplit well is twice as wide), hbar*omega = 4 and
/// hbar*omega' = 3 in units of k_B * 1 K. The unit system itself defaults to SI
/// for the well and natural units for the oscillator.
struct CycleConfig {
    MediumKind medium = MediumKind::Oscillator;
    Preset preset = Preset::NcgupFull;
    std::optional<UnitSystem> units;
    double t_hot = 2.0;
    double t_cold = 1.0;
    std::optional<double> length;
    std::optional<double> omega;
    std::optional<double> omega_prime;
    std::optional<double> mass;
    std::optional<double> planck_mass;
    std::optional<double> zeta;
    /// Use the coordinate width instead of the NC-rescaled physical width.
    bool coordinate_length = false;
    TruncationPolicy policy;

    UnitSystem resolved_units() const;
    double resolved_length() const;
    double resolved_omega() const;
    double resolved_omega_prime() const;
    PhysicalParams params(double alpha) const;
};

StirlingCycleSpec build_cycle(const CycleConfig& config, double alpha);

/// An alpha scan of one cycle configuration.
struct SweepSpec {
    CycleConfig cycle;
    double alpha_min = 1e30;
    double alpha_max = 1e41;
    int steps = 100;
    Scale scale = Scale::Log;
    /// Prepend an alpha = 0 row when alpha_min > 0.
    bool zero_anchor = true;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;

    void validate() const;
    /// Ascending alpha values, anchor first when present.
    std::vector<double> alphas() const;
};

/// One output record. Columns are emitted in declaration order.
struct SweepRow {
    double alpha = 0;
    double eta = 0;
    double work = 0;
    double q_ab = 0, q_bc = 0, q_cd = 0, q_da = 0;
    double eta_carnot = 0;
    std::array<bool, 4> turnover{};  // states A, B, C, D
    std::string warnings;            // "; "-separated
    bool failed = false;             // not serialized; failed rows carry NaN values
};

SweepRow make_row(double alpha, const CycleResult& result, const std::vector<std::string>& extra_warnings = {});
SweepRow failed_row(double alpha, const std::string& error);

/// Evaluate one cycle per alpha. Per-point failures become row warnings.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

}  // namespace qstirling
