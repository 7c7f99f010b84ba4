#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Data-parallel inner loops of the level sums. Every routine has a scalar
// reference implementation; SIMD variants are selected at runtime and must
// agree with it to a few ulp.

namespace qstirling::kernels {

/// c0 + c1 k + c2 k^2 + c3 k^3 + c4 k^4
struct Quartic {
    double c0 = 0, c1 = 0, c2 = 0, c3 = 0, c4 = 0;
};

struct KernelTable {
    std::string_view name;

    /// out[i] = q(k0 + i * dk)
    void (*eval_quartic)(const Quartic& q, double k0, double dk, std::span<double> out);

    /// out[i] = exp(-beta * (energies[i] - reference))
    void (*boltzmann_weights)(std::span<const double> energies, double reference, double beta,
                              std::span<double> out);

    /// Index of the first i with !(values[i] > values[i-1]), values[-1] taken as
    /// `previous`; values.size() when the run is strictly increasing throughout.
    std::size_t (*first_non_increasing)(std::span<const double> values, double previous);
};

const KernelTable& scalar_kernels();

/// Variants compiled into this build, scalar first.
std::vector<const KernelTable*> compiled_kernels();

/// Variants that were compiled in and are supported by the running CPU.
std::vector<const KernelTable*> usable_kernels();

/// The table used by the library. Chosen once: the widest usable variant, unless
/// the QSTIRLING_KERNELS environment variable names another usable one.
const KernelTable& active_kernels();

/// Looks up a usable variant by name; nullptr if unknown or unsupported here.
const KernelTable* find_kernels(std::string_view name);

}  // namespace qstirling::kernels
