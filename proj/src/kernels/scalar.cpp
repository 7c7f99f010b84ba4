#include <cmath>

#include "tables.hpp"

namespace qstirling::kernels {

namespace detail {

void scalar_eval_quartic(const Quartic& q, double k0, double dk, std::span<double> out, std::size_t begin) {
    for (std::size_t i = begin; i < out.size(); ++i) {
        const double k = k0 + static_cast<double>(i) * dk;
        out[i] = q.c0 + k * (q.c1 + k * (q.c2 + k * (q.c3 + k * q.c4)));
    }
}

void scalar_boltzmann_weights(std::span<const double> energies, double reference, double beta,
                              std::span<double> out, std::size_t begin) {
    for (std::size_t i = begin; i < energies.size(); ++i)
        out[i] = std::exp(-beta * (energies[i] - reference));
}

}  // namespace detail

namespace {

void eval_quartic(const Quartic& q, double k0, double dk, std::span<double> out) {
    detail::scalar_eval_quartic(q, k0, dk, out, 0);
}

void boltzmann_weights(std::span<const double> energies, double reference, double beta, std::span<double> out) {
    detail::scalar_boltzmann_weights(energies, reference, beta, out, 0);
}

std::size_t first_non_increasing(std::span<const double> values, double previous) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > previous)) return i;
        previous = values[i];
    }
    return values.size();
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", &eval_quartic, &boltzmann_weights, &first_non_increasing};
    return table;
}

}  // namespace qstirling::kernels
