#include "qstirling/statmech.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "qstirling/errors.hpp"

namespace qstirling {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

constexpr std::size_t block_size = 512;

}  // namespace

void TruncationPolicy::validate() const {
    if (!(weight_epsilon > 0.0 && weight_epsilon < 1.0)) throw ValidationError("weight_epsilon must lie in (0, 1)");
    if (hard_cap < 10) throw ValidationError("hard_cap must be at least 10");
    if (!(violation_threshold > 0.0 && violation_threshold <= 1.0))
        throw ValidationError("violation_threshold must lie in (0, 1]");
}

PartitionResult partition_sum(const SpectrumModel& model, double temperature, const TruncationPolicy& policy) {
    if (!(std::isfinite(temperature) && temperature > 0.0))
        throw DomainError("temperature must be finite and positive");
    model.validate();
    policy.validate();
    if (model.corrections.printed_well_sign)
        throw ValidationError("partition sums are undefined for the printed (negative) well spectrum");

    const auto& kern = kernels::active_kernels();
    const bool tabulated = model.medium == Medium::Tabulated;
    const bool check_turnover = policy.respect_turnover && !tabulated;
    SpectrumModel::Polynomial poly;
    if (!tabulated) poly = model.polynomial();

    std::int64_t limit = policy.hard_cap;
    if (tabulated) limit = std::min<std::int64_t>(limit, model.size());

    PartitionResult r;
    r.temperature = temperature;
    r.thermal_energy = model.params.k_B * temperature;
    r.beta = 1.0 / r.thermal_energy;

    std::array<double, block_size> energies{};
    std::array<double, block_size> weights{};
    CompensatedSum z_sum, e_sum;
    double reference = 0.0;
    double previous = -std::numeric_limits<double>::infinity();
    double last_weight = 0.0;
    bool converged = false;

    const std::int64_t first = model.origin();
    std::int64_t done = 0;
    while (done < limit && !converged) {
        const auto count = static_cast<std::size_t>(std::min<std::int64_t>(block_size, limit - done));
        std::span<double> e(energies.data(), count);
        if (tabulated) {
            for (std::size_t i = 0; i < count; ++i)
                e[i] = model.table[static_cast<std::size_t>(done) + i].energy + model.energy_offset;
        } else {
            kern.eval_quartic(poly.quartic, poly.stride * static_cast<double>(first + done), poly.stride, e);
        }
        if (done == 0) reference = e[0];

        std::size_t usable = count;
        if (check_turnover) {
            usable = kern.first_non_increasing(e, previous);
            if (usable < count) r.turnover_hit = true;
        }
        std::span<double> w(weights.data(), usable);
        kern.boltzmann_weights(e.first(usable), reference, r.beta, w);

        for (std::size_t i = 0; i < usable; ++i) {
            const int deg = tabulated ? model.table[static_cast<std::size_t>(done) + i].degeneracy
                                      : (model.medium == Medium::DoubleWell ? 2 : 1);
            const double term = deg * w[i];
            const double partial = z_sum.value();
            z_sum.add(term);
            e_sum.add(term * (e[i] - reference));
            last_weight = term;
            ++r.n_used;
            if (term < policy.weight_epsilon * partial) {
                converged = true;
                break;
            }
        }
        done += static_cast<std::int64_t>(usable);
        if (r.turnover_hit) break;
        previous = e[count - 1];
    }

    const double zs = z_sum.value();
    if (!(std::isfinite(zs) && zs > 0.0)) throw std::runtime_error("partition sum is not finite and positive");
    r.last_n = first + r.n_used - 1;
    r.tail_weight_estimate = last_weight / zs;
    r.cap_hit = !converged && !r.turnover_hit && r.n_used >= policy.hard_cap;
    if (!tabulated) r.momentum_ratio = model.momentum_ratio(r.last_n);

    if (r.turnover_hit && r.tail_weight_estimate > policy.violation_threshold) {
        std::ostringstream os;
        os << "perturbative-regime violation: spectrum turns over after n=" << r.last_n
           << " while that level still carries " << r.tail_weight_estimate << " of Z at T=" << temperature;
        throw PerturbativeRegimeError(os.str());
    }

    r.reference_energy = reference;
    r.lnZ_shifted = std::log(zs);
    r.U_excess = e_sum.value() / zs;
    r.lnZ = r.lnZ_shifted - r.beta * reference;
    r.U = reference + r.U_excess;
    r.F = -r.thermal_energy * r.lnZ;
    r.Z = std::exp(r.lnZ);
    return r;
}

double internal_energy_fd(const SpectrumModel& model, double temperature, const TruncationPolicy& policy, double h) {
    if (!(h > 1e-8 && h < 1e-2)) throw DomainError("relative step must lie in (1e-8, 1e-2)");
    if (!(std::isfinite(temperature) && temperature > 0.0))
        throw DomainError("temperature must be finite and positive");
    const double beta = 1.0 / (model.params.k_B * temperature);
    const double beta_up = beta * (1.0 + h);
    const double beta_down = beta * (1.0 - h);
    const auto up = partition_sum(model, 1.0 / (model.params.k_B * beta_up), policy);
    const auto down = partition_sum(model, 1.0 / (model.params.k_B * beta_down), policy);
    return -(up.lnZ - down.lnZ) / (up.beta - down.beta);
}

}  // namespace qstirling
