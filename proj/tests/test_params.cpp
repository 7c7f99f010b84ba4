#include <cmath>

#include "doctest.h"
#include "qstirling/errors.hpp"
#include "qstirling/params.hpp"

using namespace qstirling;

TEST_CASE("correction factor examples") {
    auto p = PhysicalParams::natural(0.0);
    p.zeta_override = 3.7;
    CHECK(correction_factor(p) == 0.0);

    p.mass = 1.0;
    p.alpha = 1.0;
    p.zeta_override = 1.0;
    CHECK(correction_factor(p) == 1.0);

    // alpha zeta^2 m^2 c^2 = alpha (m / M_pl)^2, evaluated with 50 digits offline.
    const double g_ref = 0.00017518099457281086503;
    CHECK(correction_factor(PhysicalParams::si(1e41)) == doctest::Approx(g_ref).epsilon(1e-14));
    CHECK(correction_factor(PhysicalParams::natural(1e41)) == doctest::Approx(g_ref).epsilon(1e-14));
}

TEST_CASE("g is linear in alpha and quadratic in zeta") {
    for (double alpha : {1.0, 1e20, 3e37, 1e41}) {
        auto p = PhysicalParams::si(alpha);
        const double g = correction_factor(p);
        auto p2 = p;
        p2.alpha = 2 * alpha;
        CHECK(correction_factor(p2) == doctest::Approx(2 * g).epsilon(1e-15));
        auto pz = p;
        pz.zeta_override = 2 * p.zeta();
        CHECK(correction_factor(pz) == doctest::Approx(4 * g).epsilon(1e-15));
    }
}

TEST_CASE("zeta is derived from the Planck mass unless overridden") {
    const auto p = PhysicalParams::si();
    CHECK(p.zeta() == doctest::Approx(1.0 / (constants::c * constants::planck_mass)).epsilon(1e-15));
    auto q = p;
    q.zeta_override = 0.0;
    CHECK(q.zeta() == 0.0);
    q.alpha = 1e41;
    CHECK(correction_factor(q) == 0.0);
}

TEST_CASE("validation") {
    CHECK(PhysicalParams::si(1e41).validate().empty());
    CHECK(PhysicalParams::natural().validate().empty());

    const auto warn = PhysicalParams::si(2e41).validate();
    REQUIRE(warn.size() == 1);
    CHECK(warn[0].find("alpha") != std::string::npos);

    auto bad = PhysicalParams::si();
    bad.alpha = -1;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad = PhysicalParams::si();
    bad.mass = NAN;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad = PhysicalParams::si();
    bad.c = INFINITY;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad = PhysicalParams::si();
    bad.zeta_override = -1.0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    bad = PhysicalParams::natural();
    bad.hbar = 2;
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = PhysicalParams::si(INFINITY);
    CHECK_THROWS_AS(correction_factor(bad), ValidationError);
}

TEST_CASE("natural conversion keeps the dimensionless content") {
    auto si = PhysicalParams::si(4e40);
    si.mass = 1.883531627e-28;  // muon
    const auto nat = to_natural(si);
    CHECK(nat.units == UnitSystem::Natural);
    CHECK(nat.mass == doctest::Approx(si.mass * si.c * si.c / si.k_B).epsilon(1e-15));
    CHECK(correction_factor(nat) == doctest::Approx(correction_factor(si)).epsilon(1e-14));

    si.zeta_override = 5e-3;
    CHECK(correction_factor(to_natural(si)) == doctest::Approx(correction_factor(si)).epsilon(1e-14));

    // electron rest energy is about 5.93e9 K
    CHECK(PhysicalParams::natural().mass == doctest::Approx(5.9298e9).epsilon(1e-4));
}
