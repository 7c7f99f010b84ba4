#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "qstirling/kernels/kernels.hpp"
#include "qstirling/params.hpp"

namespace qstirling {

enum class Medium { Well, DoubleWell, Oscillator, Tabulated };

/// Which corrections enter the spectrum.
struct Corrections {
    bool relativistic = false;
    bool ncgup = false;
    /// Reproduce the leading minus sign the well spectrum is sometimes printed
    /// with. Level tables only: partition sums refuse such a model.
    bool printed_well_sign = false;

    static constexpr Corrections textbook() { return {}; }
    static constexpr Corrections relativistic_only() { return {true, false, false}; }
    static constexpr Corrections full() { return {true, true, false}; }
};

/// Infinite square well of coordinate width `width`. With NC corrections on, the
/// physical width is width * (1 + g) unless `use_physical_length` is cleared.
struct WellGeometry {
    double width = 0.0;
    bool use_physical_length = true;
};

struct OscillatorGeometry {
    double omega = 0.0;
};

struct Level {
    std::int64_t n = 0;
    double energy = 0.0;
    int degeneracy = 1;

    friend bool operator==(const Level&, const Level&) = default;
};

/// Width that enters the well spectrum.
double effective_length(const WellGeometry& g, const PhysicalParams& p, const Corrections& flags);

/// E_n = (n pi hbar)^2/(2 m L^2) (1 + 3g/2) - (n pi hbar / L)^4 / (8 m^3 c^2), n >= 1.
/// The quartic term is present only with the relativistic flag, g only with ncgup.
double energy_well(std::int64_t n, const WellGeometry& g, const PhysicalParams& p, const Corrections& flags);

/// Level n of the barrier-split well: the parent's level 2n, doubly degenerate.
/// `parent` is the full, unsplit well.
Level energy_double_well(std::int64_t n, const WellGeometry& parent, const PhysicalParams& p,
                         const Corrections& flags);

/// E_n = hbar w (n + 1/2)(1 - g/2) - (hbar w)^2/(32 m c^2) (1 - 4g)(5n(n+1) + 3), n >= 0.
double energy_oscillator(std::int64_t n, const OscillatorGeometry& g, const PhysicalParams& p,
                         const Corrections& flags);

/// One working-medium configuration: a level function plus an optional uniform
/// energy offset (used to check that results do not depend on the energy zero).
struct SpectrumModel {
    Medium medium = Medium::Oscillator;
    Corrections corrections;
    std::variant<WellGeometry, OscillatorGeometry> geometry = OscillatorGeometry{1.0};
    PhysicalParams params;
    double energy_offset = 0.0;
    /// Explicit finite level list, Medium::Tabulated only.
    std::vector<Level> table;

    static SpectrumModel well(const WellGeometry& g, const PhysicalParams& p, const Corrections& flags);
    /// Barrier-split version of the well `parent`.
    static SpectrumModel double_well(const WellGeometry& parent, const PhysicalParams& p, const Corrections& flags);
    static SpectrumModel oscillator(const OscillatorGeometry& g, const PhysicalParams& p, const Corrections& flags);
    static SpectrumModel tabulated(std::vector<Level> levels, const PhysicalParams& p);

    /// Throws ValidationError.
    void validate() const;

    /// Lowest quantum number: 1 for wells, 0 for the oscillator.
    std::int64_t origin() const;
    /// Number of levels for a tabulated model, otherwise unbounded (-1).
    std::int64_t size() const;

    /// Throws DomainError for n outside the medium's range.
    Level level(std::int64_t n) const;
    double energy(std::int64_t n) const { return level(n).energy; }

    /// E_n written as quartic(stride * n) for the data-parallel kernels.
    /// Not available for tabulated models.
    struct Polynomial {
        kernels::Quartic quartic;
        double stride = 1.0;
    };
    Polynomial polynomial() const;

    /// p_n / (m c) for level n: how far the relativistic expansion is stretched.
    double momentum_ratio(std::int64_t n) const;

    const WellGeometry& well_geometry() const { return std::get<WellGeometry>(geometry); }
    const OscillatorGeometry& oscillator_geometry() const { return std::get<OscillatorGeometry>(geometry); }
};

inline constexpr std::int64_t default_turnover_cap = 1'000'000;

/// Last quantum number n* of the leading strictly increasing run of levels
/// (E_k < E_{k+1} for all origin <= k < n*). Returns `hard_cap` when the levels
/// are still increasing there; for tabulated models, the last level.
std::int64_t turnover_cutoff(const SpectrumModel& model, std::int64_t hard_cap = default_turnover_cap);

}  // namespace qstirling
