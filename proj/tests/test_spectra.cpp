#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qstirling/errors.hpp"
#include "qstirling/spectra.hpp"
#include "support/brute_force.hpp"

using namespace qstirling;

namespace {

PhysicalParams unit_natural(double alpha = 0.0) {
    auto p = PhysicalParams::natural(alpha);
    p.mass = 1.0;
    return p;
}

ref::Constants consts(const PhysicalParams& p) { return {p.hbar, p.c, p.k_B, p.mass}; }

// Plain scan of E_n over [first, cap]; returns the first index of the maximum.
std::int64_t argmax(const SpectrumModel& m, std::int64_t cap) {
    std::int64_t best = m.origin();
    long double best_e = -INFINITY;
    for (std::int64_t n = m.origin(); n <= cap; ++n) {
        const long double e = m.energy(n);
        if (e > best_e) {
            best_e = e;
            best = n;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("well examples") {
    const auto p = unit_natural();
    const WellGeometry g{1.0};
    const double pi2 = std::numbers::pi * std::numbers::pi;
    CHECK(energy_well(1, g, p, Corrections::textbook()) == doctest::Approx(pi2 / 2).epsilon(1e-15));
    CHECK(energy_well(2, g, p, Corrections::textbook()) == doctest::Approx(2 * pi2).epsilon(1e-15));
    CHECK(energy_well(2, g, p, {}) == doctest::Approx(4 * energy_well(1, g, p, {})).epsilon(1e-15));
}

TEST_CASE("corrected SI well ground level") {
    const auto p = PhysicalParams::si(1e41);
    const WellGeometry g{5e-9};
    const double e1 = energy_well(1, g, p, Corrections::full());
    // 50-digit evaluation of the same formula, computed offline.
    CHECK(e1 == doctest::Approx(2.4096558410608574613e-21).epsilon(1e-14));
    const auto r = ref::well_energy(1, 5e-9L, consts(p), correction_factor(p), true, true);
    CHECK(e1 == doctest::Approx(static_cast<double>(r)).epsilon(1e-14));

    for (std::int64_t n : {1, 7, 100, 12345}) {
        for (bool phys : {true, false}) {
            const WellGeometry gg{5e-9, phys};
            const auto want = ref::well_energy(n, 5e-9L, consts(p), correction_factor(p), true, phys);
            CHECK(energy_well(n, gg, p, Corrections::full()) == doctest::Approx(static_cast<double>(want)).epsilon(1e-13));
        }
    }
}

TEST_CASE("double well delegates to the parent's even levels") {
    const auto p = unit_natural();
    const WellGeometry parent{2.0};
    const auto l1 = energy_double_well(1, parent, p, {});
    CHECK(l1.energy == energy_well(2, parent, p, {}));
    CHECK(l1.degeneracy == 2);
    const auto l3 = energy_double_well(3, parent, p, {});
    CHECK(l3.energy == energy_well(6, parent, p, {}));
    CHECK(l3.degeneracy == 2);

    const auto si = PhysicalParams::si(1e41);
    const WellGeometry w{1e-8};
    for (std::int64_t n = 1; n <= 50; ++n)
        REQUIRE(energy_double_well(n, w, si, Corrections::full()).energy == energy_well(2 * n, w, si, Corrections::full()));
}

TEST_CASE("double well level set for n <= 50") {
    const auto si = PhysicalParams::si(3e40);
    for (auto flags : {Corrections::textbook(), Corrections::relativistic_only(), Corrections::full()}) {
        const WellGeometry parent{1e-8};
        const auto dw = SpectrumModel::double_well(parent, si, flags);
        const auto w = SpectrumModel::well(parent, si, flags);
        for (std::int64_t n = 1; n <= 50; ++n) {
            const Level want{n, w.level(2 * n).energy, 2};
            REQUIRE(dw.level(n) == want);
        }
    }
}

TEST_CASE("oscillator examples") {
    auto p = unit_natural();
    CHECK(energy_oscillator(0, {1.0}, p, {}) == 0.5);
    CHECK(energy_oscillator(2, {4.0}, p, {}) == 10.0);
    CHECK(energy_oscillator(0, {4.0}, p, Corrections::relativistic_only()) == doctest::Approx(0.5).epsilon(1e-15));
    const auto r = ref::oscillator_energy(0, 4.0L, consts(p), 0.0L, true);
    CHECK(energy_oscillator(0, {4.0}, p, Corrections::relativistic_only()) == doctest::Approx(static_cast<double>(r)));

    const auto nat = PhysicalParams::natural(1e41);
    const double g = correction_factor(nat);
    for (std::int64_t n : {0, 1, 5, 1000, 1000000}) {
        const auto want = ref::oscillator_energy(n, 4.0L, consts(nat), g, true);
        CHECK(energy_oscillator(n, {4.0}, nat, Corrections::full()) == doctest::Approx(static_cast<double>(want)).epsilon(1e-14));
    }
}

TEST_CASE("reduction to the textbook spectra") {
    const auto p = PhysicalParams::si(1e41);  // alpha is ignored with every flag off
    const WellGeometry g{5e-9};
    const double e1 = std::numbers::pi * std::numbers::pi * p.hbar * p.hbar / (2 * p.mass * 25e-18);
    for (std::int64_t n = 1; n < 200; n += 7) {
        const double nd = static_cast<double>(n);
        CHECK(energy_well(n, g, p, {}) == doctest::Approx(e1 * nd * nd).epsilon(1e-12));
        CHECK(energy_oscillator(n, {1e13}, p, {}) == doctest::Approx(p.hbar * 1e13 * (nd + 0.5)).epsilon(1e-12));
    }
}

TEST_CASE("levels are affine in alpha with the coordinate width") {
    const WellGeometry g{5e-9, false};
    auto at = [&](double alpha, std::int64_t n) { return energy_well(n, g, PhysicalParams::si(alpha), Corrections::full()); };
    auto osc = [&](double alpha, std::int64_t n) {
        return energy_oscillator(n, {4.0}, PhysicalParams::natural(alpha), Corrections::full());
    };
    for (std::int64_t n : {1, 3, 40}) {
        const double a = 1e40;
        CHECK(at(2 * a, n) - at(a, n) == doctest::Approx(at(a, n) - at(0, n)).epsilon(1e-9));
        CHECK(osc(2 * a, n) - osc(a, n) == doctest::Approx(osc(a, n) - osc(0, n)).epsilon(1e-9));
    }
}

TEST_CASE("alpha -> 0 gives the relativistic-only spectrum") {
    for (bool phys : {true, false}) {
        const WellGeometry g{5e-9, phys};
        for (std::int64_t n : {1, 2, 10}) {
            CHECK(energy_well(n, g, PhysicalParams::si(0), Corrections::full()) ==
                  energy_well(n, g, PhysicalParams::si(0), Corrections::relativistic_only()));
            const double tiny = energy_well(n, g, PhysicalParams::si(1e-300), Corrections::full());
            CHECK(tiny == energy_well(n, g, PhysicalParams::si(0), Corrections::relativistic_only()));
        }
    }
    CHECK(energy_oscillator(3, {4.0}, PhysicalParams::natural(0), Corrections::full()) ==
          energy_oscillator(3, {4.0}, PhysicalParams::natural(0), Corrections::relativistic_only()));
}

TEST_CASE("physical length rescaling") {
    const auto p = PhysicalParams::si(1e41);
    const double g = correction_factor(p);
    CHECK(effective_length({5e-9}, p, Corrections::full()) == doctest::Approx(5e-9 * (1 + g)).epsilon(1e-15));
    CHECK(effective_length({5e-9, false}, p, Corrections::full()) == 5e-9);
    CHECK(effective_length({5e-9}, p, Corrections::relativistic_only()) == 5e-9);
}

TEST_CASE("turnover against a brute-force argmax") {
    const auto p = unit_natural();
    SUBCASE("textbook spectra never turn over") {
        CHECK(turnover_cutoff(SpectrumModel::well({1.0}, p, {})) == default_turnover_cap);
        CHECK(turnover_cutoff(SpectrumModel::oscillator({4.0}, p, {})) == default_turnover_cap);
        CHECK(turnover_cutoff(SpectrumModel::well({1.0}, p, {}), 5000) == 5000);
    }
    SUBCASE("relativistic unit well") {
        const auto m = SpectrumModel::well({1.0}, p, Corrections::relativistic_only());
        CHECK(turnover_cutoff(m) == argmax(m, 1'000'000));
    }
    SUBCASE("relativistic unit oscillator") {
        const auto m = SpectrumModel::oscillator({4.0}, p, Corrections::relativistic_only());
        CHECK(turnover_cutoff(m) == argmax(m, 1'000'000));
    }
    SUBCASE("wider well, peak inside the first block") {
        const auto m = SpectrumModel::well({100.0}, p, Corrections::relativistic_only());
        const auto n = turnover_cutoff(m);
        CHECK(n == argmax(m, 1'000'000));
        CHECK(n == 45);
    }
    SUBCASE("peaks across block boundaries") {
        // (w = 1e-4 would put two levels exactly level with each other at the peak)
        for (double L : {3217.0, 4000.0, 9001.5}) {
            const auto m = SpectrumModel::well({L}, p, Corrections::full());
            CHECK(turnover_cutoff(m) == argmax(m, 1'000'000));
            const auto d = SpectrumModel::double_well({L}, p, Corrections::full());
            CHECK(turnover_cutoff(d) == argmax(d, 1'000'000));
        }
        for (double w : {1.1e-4, 3.3e-5}) {
            const auto m = SpectrumModel::oscillator({w}, p, Corrections::relativistic_only());
            CHECK(turnover_cutoff(m) == argmax(m, 1'000'000));
        }
    }
}

TEST_CASE("monotonic below the cutoff") {
    const auto p = unit_natural(0.0);
    const auto m = SpectrumModel::well({2500.0}, p, Corrections::relativistic_only());
    const auto n_star = turnover_cutoff(m);
    REQUIRE(n_star > 1);
    for (std::int64_t n = 1; n < n_star; ++n) REQUIRE(m.energy(n) < m.energy(n + 1));
    CHECK(m.energy(n_star + 1) <= m.energy(n_star));
}

TEST_CASE("tabulated spectra") {
    const auto m = SpectrumModel::tabulated({{0, 0.0, 1}, {1, 1.0, 1}, {2, 0.5, 3}}, unit_natural());
    CHECK(m.origin() == 0);
    CHECK(m.size() == 3);
    CHECK(m.level(2).degeneracy == 3);
    CHECK(turnover_cutoff(m) == 1);
    CHECK_THROWS_AS(m.level(3), DomainError);
    CHECK_THROWS_AS(m.polynomial(), ContractError);
    CHECK_THROWS_AS(SpectrumModel::tabulated({}, unit_natural()).validate(), ValidationError);
    CHECK_THROWS_AS(SpectrumModel::tabulated({{0, 0.0, 1}, {2, 1.0, 1}}, unit_natural()).validate(), ValidationError);
}

TEST_CASE("energy offset shifts every level") {
    auto m = SpectrumModel::oscillator({4.0}, unit_natural(), {});
    m.energy_offset = 123.0;
    CHECK(m.energy(0) == 125.0);
    auto d = SpectrumModel::double_well({2.0}, unit_natural(), {});
    const double base = d.energy(1);
    d.energy_offset = -1.0;
    CHECK(d.energy(1) == base - 1.0);
}

TEST_CASE("polynomial form reproduces the levels") {
    const auto si = PhysicalParams::si(1e41);
    const SpectrumModel models[] = {
        SpectrumModel::well({5e-9}, si, Corrections::full()),
        SpectrumModel::double_well({1e-8}, si, Corrections::full()),
        SpectrumModel::oscillator({4.0}, PhysicalParams::natural(1e41), Corrections::full()),
    };
    for (const auto& m : models) {
        const auto poly = m.polynomial();
        for (std::int64_t n = m.origin(); n < m.origin() + 30; ++n) {
            const double k = poly.stride * static_cast<double>(n);
            const auto& q = poly.quartic;
            const double e = q.c0 + k * (q.c1 + k * (q.c2 + k * (q.c3 + k * q.c4)));
            CHECK(e == doctest::Approx(m.energy(n)).epsilon(1e-14));
        }
    }
}

TEST_CASE("momentum diagnostic") {
    const auto p = unit_natural();
    const auto w = SpectrumModel::well({1.0}, p, {});
    CHECK(w.momentum_ratio(1) == doctest::Approx(std::numbers::pi));
    const auto d = SpectrumModel::double_well({1.0}, p, {});
    CHECK(d.momentum_ratio(1) == doctest::Approx(2 * std::numbers::pi));
    const auto o = SpectrumModel::oscillator({1.0}, p, {});
    CHECK(o.momentum_ratio(0) == doctest::Approx(1.0));
}

TEST_CASE("domain and validation errors") {
    const auto p = unit_natural();
    CHECK_THROWS_AS(energy_well(0, {1.0}, p, {}), DomainError);
    CHECK_THROWS_AS(energy_double_well(0, {1.0}, p, {}), DomainError);
    CHECK_THROWS_AS(energy_oscillator(-1, {1.0}, p, {}), DomainError);
    CHECK_THROWS_AS(energy_well(1, {0.0}, p, {}), ValidationError);
    CHECK_THROWS_AS(energy_well(1, {-1.0}, p, {}), ValidationError);
    CHECK_THROWS_AS(energy_oscillator(0, {0.0}, p, {}), ValidationError);
    CHECK_THROWS_AS(SpectrumModel::well({NAN}, p, {}).validate(), ValidationError);

    Corrections printed{};
    printed.printed_well_sign = true;
    CHECK(energy_well(1, {1.0}, p, printed) == doctest::Approx(-energy_well(1, {1.0}, p, {})));
    CHECK_THROWS_AS(SpectrumModel::oscillator({1.0}, p, printed).validate(), ValidationError);
}
