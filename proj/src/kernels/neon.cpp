#include <arm_neon.h>

#include "tables.hpp"

namespace qstirling::kernels::detail {

namespace {

// Same reduction as the AVX2 variant, two lanes.
inline float64x2_t exp_pd(float64x2_t x) {
    const float64x2_t hi = vdupq_n_f64(709.782712893384);
    const float64x2_t lo = vdupq_n_f64(-745.1332191019412);
    const uint64x2_t overflow = vcgtq_f64(x, hi);
    const uint64x2_t underflow = vcltq_f64(x, lo);
    const uint64x2_t ordered = vceqq_f64(x, x);
    const float64x2_t xc = vmaxq_f64(vminq_f64(x, hi), lo);

    const float64x2_t k = vrndnq_f64(vmulq_f64(xc, vdupq_n_f64(1.4426950408889634074)));
    float64x2_t r = vfmsq_f64(xc, k, vdupq_n_f64(6.93147180369123816490e-01));
    r = vfmsq_f64(r, k, vdupq_n_f64(1.90821492927058770002e-10));

    constexpr double inv_fact[] = {
        1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0, 1.0 / 362880.0,
        1.0 / 40320.0,      1.0 / 5040.0,      1.0 / 720.0,      1.0 / 120.0,     1.0 / 24.0,
        1.0 / 6.0,          0.5,               1.0,              1.0};
    float64x2_t p = vdupq_n_f64(inv_fact[0]);
    for (int i = 1; i < 14; ++i) p = vfmaq_f64(vdupq_n_f64(inv_fact[i]), p, r);

    const float64x2_t k1 = vrndmq_f64(vmulq_f64(k, vdupq_n_f64(0.5)));
    const float64x2_t k2 = vsubq_f64(k, k1);
    auto pow2 = [](float64x2_t e) {
        const int64x2_t bits = vshlq_n_s64(vaddq_s64(vcvtq_s64_f64(e), vdupq_n_s64(1023)), 52);
        return vreinterpretq_f64_s64(bits);
    };
    float64x2_t result = vmulq_f64(vmulq_f64(p, pow2(k1)), pow2(k2));

    result = vbslq_f64(overflow, vdupq_n_f64(__builtin_inf()), result);
    result = vbslq_f64(underflow, vdupq_n_f64(0.0), result);
    result = vbslq_f64(ordered, result, x);
    return result;
}

void eval_quartic(const Quartic& q, double k0, double dk, std::span<double> out) {
    const std::size_t n = out.size();
    const float64x2_t c0 = vdupq_n_f64(q.c0), c1 = vdupq_n_f64(q.c1), c2 = vdupq_n_f64(q.c2),
                      c3 = vdupq_n_f64(q.c3), c4 = vdupq_n_f64(q.c4);
    const double lane_init[2] = {0.0, 1.0};
    const float64x2_t lane = vld1q_f64(lane_init);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t idx = vaddq_f64(vdupq_n_f64(static_cast<double>(i)), lane);
        const float64x2_t k = vaddq_f64(vdupq_n_f64(k0), vmulq_f64(idx, vdupq_n_f64(dk)));
        float64x2_t e = vfmaq_f64(c3, k, c4);
        e = vfmaq_f64(c2, k, e);
        e = vfmaq_f64(c1, k, e);
        e = vfmaq_f64(c0, k, e);
        vst1q_f64(out.data() + i, e);
    }
    scalar_eval_quartic(q, k0, dk, out, i);
}

void boltzmann_weights(std::span<const double> energies, double reference, double beta, std::span<double> out) {
    const std::size_t n = energies.size();
    const float64x2_t ref = vdupq_n_f64(reference);
    const float64x2_t nbeta = vdupq_n_f64(-beta);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t e = vld1q_f64(energies.data() + i);
        vst1q_f64(out.data() + i, exp_pd(vmulq_f64(nbeta, vsubq_f64(e, ref))));
    }
    scalar_boltzmann_weights(energies, reference, beta, out, i);
}

std::size_t first_non_increasing(std::span<const double> values, double previous) {
    const std::size_t n = values.size();
    if (n == 0) return 0;
    if (!(values[0] > previous)) return 0;
    std::size_t i = 1;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t up = vcgtq_f64(vld1q_f64(values.data() + i), vld1q_f64(values.data() + i - 1));
        if (vgetq_lane_u64(up, 0) == 0) return i;
        if (vgetq_lane_u64(up, 1) == 0) return i + 1;
    }
    for (; i < n; ++i)
        if (!(values[i] > values[i - 1])) return i;
    return n;
}

}  // namespace

const KernelTable& neon_table() {
    static const KernelTable table{"neon", &eval_quartic, &boltzmann_weights, &first_non_increasing};
    return table;
}

}  // namespace qstirling::kernels::detail
