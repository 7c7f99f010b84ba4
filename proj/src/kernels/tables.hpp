#pragma once

#include "qstirling/kernels/kernels.hpp"

namespace qstirling::kernels::detail {

#if defined(QSTIRLING_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(QSTIRLING_HAVE_NEON)
const KernelTable& neon_table();
#endif

void scalar_eval_quartic(const Quartic& q, double k0, double dk, std::span<double> out, std::size_t begin);
void scalar_boltzmann_weights(std::span<const double> energies, double reference, double beta,
                              std::span<double> out, std::size_t begin);

}  // namespace qstirling::kernels::detail
