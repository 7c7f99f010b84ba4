#include "qstirling/spectra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qstirling/errors.hpp"

namespace qstirling {

namespace {

double ncgup_factor(const PhysicalParams& p, const Corrections& flags) {
    return flags.ncgup ? correction_factor(p) : 0.0;
}

struct WellCoefficients {
    double quadratic;  // multiplies n^2
    double quartic;    // multiplies n^4, <= 0
};

WellCoefficients well_coefficients(const WellGeometry& g, const PhysicalParams& p, const Corrections& flags) {
    const double L = effective_length(g, p, flags);
    const double gc = ncgup_factor(p, flags);
    const double k = std::numbers::pi * p.hbar / L;  // momentum quantum
    const double sign = flags.printed_well_sign ? -1.0 : 1.0;
    WellCoefficients out{};
    out.quadratic = sign * k * k / (2.0 * p.mass) * (1.0 + 1.5 * gc);
    if (flags.relativistic) {
        const double m = p.mass;
        out.quartic = -(k * k) * (k * k) / (8.0 * m * m * m * p.c * p.c);
    }
    return out;
}

struct OscillatorCoefficients {
    double linear;    // hbar w (1 - g/2), multiplies (n + 1/2)
    double relative;  // (hbar w)^2 / (32 m c^2) (1 - 4g), multiplies 5n(n+1) + 3
};

OscillatorCoefficients oscillator_coefficients(const OscillatorGeometry& g, const PhysicalParams& p,
                                               const Corrections& flags) {
    const double gc = ncgup_factor(p, flags);
    const double hw = p.hbar * g.omega;
    OscillatorCoefficients out{};
    out.linear = hw * (1.0 - 0.5 * gc);
    if (flags.relativistic) out.relative = hw * hw / (32.0 * p.mass * p.c * p.c) * (1.0 - 4.0 * gc);
    return out;
}

void require_positive(double v, const char* what) {
    if (!(std::isfinite(v) && v > 0)) throw ValidationError(std::string(what) + " must be finite and positive");
}

}  // namespace

double effective_length(const WellGeometry& g, const PhysicalParams& p, const Corrections& flags) {
    require_positive(g.width, "well width");
    if (!g.use_physical_length) return g.width;
    return g.width * (1.0 + ncgup_factor(p, flags));
}

double energy_well(std::int64_t n, const WellGeometry& g, const PhysicalParams& p, const Corrections& flags) {
    if (n < 1) throw DomainError("well levels start at n = 1, got n = " + std::to_string(n));
    const auto c = well_coefficients(g, p, flags);
    const double nd = static_cast<double>(n);
    const double n2 = nd * nd;
    return c.quadratic * n2 + c.quartic * (n2 * n2);
}

Level energy_double_well(std::int64_t n, const WellGeometry& parent, const PhysicalParams& p,
                         const Corrections& flags) {
    if (n < 1) throw DomainError("double-well levels start at n = 1, got n = " + std::to_string(n));
    return Level{n, energy_well(2 * n, parent, p, flags), 2};
}

double energy_oscillator(std::int64_t n, const OscillatorGeometry& g, const PhysicalParams& p,
                         const Corrections& flags) {
    if (n < 0) throw DomainError("oscillator levels start at n = 0, got n = " + std::to_string(n));
    require_positive(g.omega, "omega");
    const auto c = oscillator_coefficients(g, p, flags);
    const double nd = static_cast<double>(n);
    return c.linear * (nd + 0.5) - c.relative * (5.0 * nd * (nd + 1.0) + 3.0);
}

SpectrumModel SpectrumModel::well(const WellGeometry& g, const PhysicalParams& p, const Corrections& flags) {
    SpectrumModel m;
    m.medium = Medium::Well;
    m.corrections = flags;
    m.geometry = g;
    m.params = p;
    return m;
}

SpectrumModel SpectrumModel::double_well(const WellGeometry& parent, const PhysicalParams& p,
                                         const Corrections& flags) {
    SpectrumModel m = well(parent, p, flags);
    m.medium = Medium::DoubleWell;
    return m;
}

SpectrumModel SpectrumModel::oscillator(const OscillatorGeometry& g, const PhysicalParams& p,
                                        const Corrections& flags) {
    SpectrumModel m;
    m.medium = Medium::Oscillator;
    m.corrections = flags;
    m.geometry = g;
    m.params = p;
    return m;
}

SpectrumModel SpectrumModel::tabulated(std::vector<Level> levels, const PhysicalParams& p) {
    SpectrumModel m;
    m.medium = Medium::Tabulated;
    m.params = p;
    m.table = std::move(levels);
    return m;
}

void SpectrumModel::validate() const {
    params.validate();
    if (!std::isfinite(energy_offset)) throw ValidationError("energy offset must be finite");
    switch (medium) {
        case Medium::Well:
        case Medium::DoubleWell:
            if (!std::holds_alternative<WellGeometry>(geometry)) throw ValidationError("well medium needs a well geometry");
            require_positive(well_geometry().width, "well width");
            break;
        case Medium::Oscillator:
            if (!std::holds_alternative<OscillatorGeometry>(geometry))
                throw ValidationError("oscillator medium needs an oscillator geometry");
            require_positive(oscillator_geometry().omega, "omega");
            if (corrections.printed_well_sign) throw ValidationError("printed well sign applies to wells only");
            break;
        case Medium::Tabulated:
            if (table.empty()) throw ValidationError("tabulated spectrum is empty");
            for (std::size_t i = 0; i < table.size(); ++i) {
                if (!std::isfinite(table[i].energy)) throw ValidationError("tabulated energy is not finite");
                if (table[i].degeneracy < 1) throw ValidationError("degeneracy must be positive");
                if (i > 0 && table[i].n != table[i - 1].n + 1)
                    throw ValidationError("tabulated quantum numbers must be consecutive");
            }
            break;
    }
}

std::int64_t SpectrumModel::origin() const {
    switch (medium) {
        case Medium::Oscillator: return 0;
        case Medium::Tabulated: return table.empty() ? 0 : table.front().n;
        default: return 1;
    }
}

std::int64_t SpectrumModel::size() const {
    return medium == Medium::Tabulated ? static_cast<std::int64_t>(table.size()) : -1;
}

Level SpectrumModel::level(std::int64_t n) const {
    Level out;
    switch (medium) {
        case Medium::Well:
            out = Level{n, energy_well(n, well_geometry(), params, corrections), 1};
            break;
        case Medium::DoubleWell:
            out = energy_double_well(n, well_geometry(), params, corrections);
            break;
        case Medium::Oscillator:
            out = Level{n, energy_oscillator(n, oscillator_geometry(), params, corrections), 1};
            break;
        case Medium::Tabulated: {
            const std::int64_t i = n - origin();
            if (i < 0 || i >= size()) throw DomainError("quantum number outside the tabulated range");
            out = table[static_cast<std::size_t>(i)];
            break;
        }
    }
    out.energy += energy_offset;
    return out;
}

SpectrumModel::Polynomial SpectrumModel::polynomial() const {
    Polynomial out;
    switch (medium) {
        case Medium::Well:
        case Medium::DoubleWell: {
            const auto c = well_coefficients(well_geometry(), params, corrections);
            out.quartic.c2 = c.quadratic;
            out.quartic.c4 = c.quartic;
            out.stride = medium == Medium::DoubleWell ? 2.0 : 1.0;
            break;
        }
        case Medium::Oscillator: {
            require_positive(oscillator_geometry().omega, "omega");
            const auto c = oscillator_coefficients(oscillator_geometry(), params, corrections);
            // A (n + 1/2) - B (5 n^2 + 5 n + 3)
            out.quartic.c0 = 0.5 * c.linear - 3.0 * c.relative;
            out.quartic.c1 = c.linear - 5.0 * c.relative;
            out.quartic.c2 = -5.0 * c.relative;
            break;
        }
        case Medium::Tabulated:
            throw ContractError("tabulated spectra have no polynomial form");
    }
    out.quartic.c0 += energy_offset;
    return out;
}

double SpectrumModel::momentum_ratio(std::int64_t n) const {
    const double mc = params.mass * params.c;
    switch (medium) {
        case Medium::Well:
        case Medium::DoubleWell: {
            const double k = medium == Medium::DoubleWell ? 2.0 * static_cast<double>(n) : static_cast<double>(n);
            const double L = effective_length(well_geometry(), params, corrections);
            return k * std::numbers::pi * params.hbar / L / mc;
        }
        case Medium::Oscillator: {
            // Virial estimate: <p^2> = m hbar w (n + 1/2).
            const double hw = params.hbar * oscillator_geometry().omega;
            return std::sqrt((2.0 * static_cast<double>(n) + 1.0) * hw / (params.mass * params.c * params.c));
        }
        case Medium::Tabulated: return 0.0;
    }
    return 0.0;
}

std::int64_t turnover_cutoff(const SpectrumModel& model, std::int64_t hard_cap) {
    model.validate();
    const std::int64_t first = model.origin();
    if (model.medium == Medium::Tabulated) {
        std::int64_t last = first;
        for (std::size_t i = 1; i < model.table.size(); ++i) {
            if (!(model.table[i].energy > model.table[i - 1].energy)) return last;
            last = model.table[i].n;
        }
        return last;
    }
    if (hard_cap <= first) return hard_cap;

    const auto& k = kernels::active_kernels();
    const auto poly = model.polynomial();
    constexpr std::size_t block = 1024;
    std::array<double, block> energies{};

    std::int64_t n = first;
    double previous = -std::numeric_limits<double>::infinity();
    while (n <= hard_cap) {
        const auto count = static_cast<std::size_t>(std::min<std::int64_t>(block, hard_cap - n + 1));
        std::span<double> view(energies.data(), count);
        k.eval_quartic(poly.quartic, poly.stride * static_cast<double>(n), poly.stride, view);
        const std::size_t stop = k.first_non_increasing(view, previous);
        if (stop < count) return n + static_cast<std::int64_t>(stop) - 1;
        previous = view[count - 1];
        n += static_cast<std::int64_t>(count);
    }
    return hard_cap;
}

}  // namespace qstirling
