#include <immintrin.h>

#include <bit>

#include "tables.hpp"

namespace qstirling::kernels::detail {

namespace {

// exp on 4 lanes: x = k ln2 + r with |r| <= ln2/2, exp(r) by a degree-13 Taylor
// polynomial (truncation < 5e-18 relative), 2^k applied in two halves so that
// results down to the denormal range stay correct.
inline __m256d exp_pd(__m256d x) {
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
    const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
    const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
    const __m256d hi = _mm256_set1_pd(709.782712893384);
    const __m256d lo = _mm256_set1_pd(-745.1332191019412);

    const __m256d overflow = _mm256_cmp_pd(x, hi, _CMP_GT_OQ);
    const __m256d underflow = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
    const __m256d nan = _mm256_cmp_pd(x, x, _CMP_UNORD_Q);
    const __m256d xc = _mm256_max_pd(_mm256_min_pd(x, hi), lo);

    const __m256d k = _mm256_round_pd(_mm256_mul_pd(xc, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, ln2_hi, xc);
    r = _mm256_fnmadd_pd(k, ln2_lo, r);

    constexpr double inv_fact[] = {
        1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0, 1.0 / 362880.0,
        1.0 / 40320.0,      1.0 / 5040.0,      1.0 / 720.0,      1.0 / 120.0,     1.0 / 24.0,
        1.0 / 6.0,          0.5,               1.0,              1.0};
    __m256d p = _mm256_set1_pd(inv_fact[0]);
    for (int i = 1; i < 14; ++i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_fact[i]));

    const __m256d k1 = _mm256_floor_pd(_mm256_mul_pd(k, _mm256_set1_pd(0.5)));
    const __m256d k2 = _mm256_sub_pd(k, k1);
    // k + 1.5 * 2^52 places k in the low mantissa bits; adding the bias there and
    // shifting by 52 builds 2^k directly.
    const __m256d magic = _mm256_set1_pd(6755399441055744.0);
    const __m256i bias = _mm256_set1_epi64x(1023);
    auto pow2 = [&](__m256d e) {
        const __m256i bits = _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(e, magic)), _mm256_castpd_si256(magic));
        return _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_add_epi64(bits, bias), 52));
    };
    __m256d result = _mm256_mul_pd(_mm256_mul_pd(p, pow2(k1)), pow2(k2));

    result = _mm256_blendv_pd(result, _mm256_set1_pd(__builtin_inf()), overflow);
    result = _mm256_blendv_pd(result, _mm256_setzero_pd(), underflow);
    result = _mm256_blendv_pd(result, x, nan);
    return result;
}

void eval_quartic(const Quartic& q, double k0, double dk, std::span<double> out) {
    const std::size_t n = out.size();
    const __m256d c0 = _mm256_set1_pd(q.c0), c1 = _mm256_set1_pd(q.c1), c2 = _mm256_set1_pd(q.c2),
                  c3 = _mm256_set1_pd(q.c3), c4 = _mm256_set1_pd(q.c4);
    const __m256d vk0 = _mm256_set1_pd(k0), vdk = _mm256_set1_pd(dk);
    const __m256d lane = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d idx = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(i)), lane);
        const __m256d k = _mm256_add_pd(vk0, _mm256_mul_pd(idx, vdk));
        __m256d e = _mm256_fmadd_pd(k, c4, c3);
        e = _mm256_fmadd_pd(k, e, c2);
        e = _mm256_fmadd_pd(k, e, c1);
        e = _mm256_fmadd_pd(k, e, c0);
        _mm256_storeu_pd(out.data() + i, e);
    }
    scalar_eval_quartic(q, k0, dk, out, i);
}

void boltzmann_weights(std::span<const double> energies, double reference, double beta, std::span<double> out) {
    const std::size_t n = energies.size();
    const __m256d ref = _mm256_set1_pd(reference);
    const __m256d nbeta = _mm256_set1_pd(-beta);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d e = _mm256_loadu_pd(energies.data() + i);
        _mm256_storeu_pd(out.data() + i, exp_pd(_mm256_mul_pd(nbeta, _mm256_sub_pd(e, ref))));
    }
    scalar_boltzmann_weights(energies, reference, beta, out, i);
}

std::size_t first_non_increasing(std::span<const double> values, double previous) {
    const std::size_t n = values.size();
    if (n == 0) return 0;
    if (!(values[0] > previous)) return 0;
    std::size_t i = 1;
    for (; i + 4 <= n; i += 4) {
        const __m256d cur = _mm256_loadu_pd(values.data() + i);
        const __m256d prev = _mm256_loadu_pd(values.data() + i - 1);
        const int mask = _mm256_movemask_pd(_mm256_cmp_pd(cur, prev, _CMP_NGT_UQ));
        if (mask != 0) return i + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(mask)));
    }
    for (; i < n; ++i)
        if (!(values[i] > values[i - 1])) return i;
    return n;
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable table{"avx2", &eval_quartic, &boltzmann_weights, &first_non_increasing};
    return table;
}

}  // namespace qstirling::kernels::detail
