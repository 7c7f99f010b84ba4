#include "qstirling/levels.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"
#include "qstirling/emit.hpp"
#include "qstirling/errors.hpp"

namespace qstirling {

LevelTable cmd_levels(const SpectrumModel& model, std::int64_t n_max, double temperature,
                      const TruncationPolicy& policy) {
    model.validate();
    if (n_max < model.origin()) throw DomainError("n_max lies below the first level");
    if (n_max > policy.hard_cap) throw DomainError("n_max exceeds the hard cap");
    if (!(std::isfinite(temperature) && temperature > 0.0)) throw DomainError("temperature must be finite and positive");

    LevelTable table;
    table.temperature = temperature;
    double reference = 0, beta = 0, ln_z = std::numeric_limits<double>::quiet_NaN();
    try {
        const auto z = partition_sum(model, temperature, policy);
        reference = z.reference_energy;
        beta = z.beta;
        ln_z = z.lnZ_shifted;
    } catch (const std::exception& e) {
        table.warnings.emplace_back(std::string("no Boltzmann weights: ") + e.what());
    }

    double cumulative = 0;
    for (std::int64_t n = model.origin(); n <= n_max; ++n) {
        const Level lv = model.level(n);
        LevelRow row{lv.n, lv.energy, lv.degeneracy, std::numeric_limits<double>::quiet_NaN()};
        if (std::isfinite(ln_z)) {
            cumulative += lv.degeneracy * std::exp(-beta * (lv.energy - reference) - ln_z);
            row.cumulative_weight = cumulative;
        }
        table.rows.push_back(row);
    }
    return table;
}

std::string emit_levels_csv(const LevelTable& table) {
    std::string out = "n,energy,degeneracy,cumulative_weight\n";
    for (const auto& r : table.rows) {
        out += std::to_string(r.n) + ',' + format_number(r.energy) + ',' + std::to_string(r.degeneracy) + ',' +
               format_number(r.cumulative_weight) + '\n';
    }
    return out;
}

std::string emit_levels_json(const LevelTable& table) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
        nlohmann::ordered_json obj;
        obj["n"] = r.n;
        obj["energy"] = r.energy;
        obj["degeneracy"] = r.degeneracy;
        if (std::isfinite(r.cumulative_weight))
            obj["cumulative_weight"] = r.cumulative_weight;
        else
            obj["cumulative_weight"] = nullptr;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

}  // namespace qstirling
