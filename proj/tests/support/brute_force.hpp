#pragma once

// Test-only reference computations. Straightforward extended-precision loops and
// closed forms, written without the library's shifting, kernels or compensation.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>

namespace ref {

using real = long double;
inline constexpr real pi = std::numbers::pi_v<long double>;

struct Constants {
    real hbar, c, k_B, mass;
};

/// Well level from the closed formula, term by term.
inline real well_energy(std::int64_t n, real width, const Constants& k, real g, bool relativistic, bool physical_length) {
    const real L = physical_length ? width * (1 + g) : width;
    const real p = static_cast<real>(n) * pi * k.hbar / L;
    real e = p * p / (2 * k.mass) * (1 + 1.5L * g);
    if (relativistic) e -= p * p * p * p / (8 * k.mass * k.mass * k.mass * k.c * k.c);
    return e;
}

inline real oscillator_energy(std::int64_t n, real omega, const Constants& k, real g, bool relativistic) {
    const real hw = k.hbar * omega;
    const real nn = static_cast<real>(n);
    real e = hw * (nn + 0.5L) * (1 - g / 2);
    if (relativistic) e -= hw * hw / (32 * k.mass * k.c * k.c) * (1 - 4 * g) * (5 * nn * (nn + 1) + 3);
    return e;
}

struct State {
    real lnZ, U;
};

/// sum_{n = first}^{first + count - 1} deg e^{-beta E_n}, plain loop.
inline State direct_sum(const std::function<real(std::int64_t)>& energy, std::int64_t first, std::int64_t count,
                        real degeneracy, real beta) {
    real z = 0, s = 0;
    for (std::int64_t i = 0; i < count; ++i) {
        const real e = energy(first + i);
        const real w = degeneracy * std::exp(-beta * e);
        z += w;
        s += w * e;
    }
    return {std::log(z), s / z};
}

/// Textbook oscillator in closed form (geometric series), natural units.
inline State oscillator_geometric(real hbar_omega, real temperature) {
    const real x = hbar_omega / temperature;
    return {-x / 2 - std::log1p(-std::exp(-x)), hbar_omega / 2 + hbar_omega / std::expm1(x)};
}

/// Two-level system {0, gap}, natural units.
inline State two_level(real gap, real temperature) {
    const real b = 1 / temperature;
    const real z = 1 + std::exp(-b * gap);
    return {std::log(z), gap * std::exp(-b * gap) / z};
}

struct Heats {
    real q_ab, q_bc, q_cd, q_da;
    real work() const { return q_ab + q_bc + q_cd + q_da; }
    real eta() const { return work() / (q_ab + q_da); }
};

/// Stirling heats from the four equilibrium states, textbook definitions.
inline Heats stirling(const State& a, const State& b, const State& c, const State& d, real kt_hot, real kt_cold) {
    return {b.U - a.U + kt_hot * (b.lnZ - a.lnZ), c.U - b.U, d.U - c.U + kt_cold * (d.lnZ - c.lnZ), a.U - d.U};
}

}  // namespace ref
