#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qstirling/statmech.hpp"

namespace qstirling {

struct LevelRow {
    std::int64_t n = 0;
    double energy = 0;
    int degeneracy = 1;
    double cumulative_weight = 0;  // fraction of Z carried by levels origin..n
};

struct LevelTable {
    double temperature = 0;
    std::vector<LevelRow> rows;
    std::vector<std::string> warnings;
};

/// Levels origin..n_max of `model` with their cumulative Boltzmann weight at T.
/// When Z cannot be formed (printed well sign, perturbative violation) the weight
/// column is NaN and the reason is recorded in `warnings`.
LevelTable cmd_levels(const SpectrumModel& model, std::int64_t n_max, double temperature,
                      const TruncationPolicy& policy = {});

std::string emit_levels_csv(const LevelTable& table);
std::string emit_levels_json(const LevelTable& table);

}  // namespace qstirling
