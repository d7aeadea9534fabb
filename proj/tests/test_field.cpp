#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fixture.hpp"
#include "ringflow/field.hpp"

using ringflow::CylPoint;
using ringflow::FieldTweaks;
using ringflow::FlowField;

namespace {

FlowField make_field(double R = 1.0, double radius = 0.1, FieldTweaks tweaks = {}) {
    const auto& s = testutil::chain20();
    return FlowField(s.alpha, s.prof, R, radius, tweaks);
}

}  // namespace

TEST_CASE("pointwise energy and pressure identities hold to rounding", "[field]") {
    const auto field = make_field();
    for (int k = 0; k < 64; ++k) {
        const double th = 2 * M_PI * k / 64;
        for (const double r : {0.004, 0.02, 0.041}) {
            const CylPoint q{1 + r * std::cos(th), r * std::sin(th)};
            const auto ids = field.identities(q);
            REQUIRE(std::abs(ids.energy_dev) <= 1e-15);
            REQUIRE(std::abs(ids.bernoulli_dev) <= 1e-15);
        }
    }
}

TEST_CASE("swirl speed grows linearly from zero at the ring", "[field]") {
    const auto field = make_field();
    REQUIRE(field.sample({1.0, 0.0}).u_phi == 0.0);
    // leading order: u_phi = (R^3/4) sqrt(8) r / rho near distance r
    for (const double t : {1e-3, -1e-3, 5e-4}) {
        const auto s = field.sample({1.0 + t, 0.0});
        const double lead = 0.25 * std::sqrt(8.0) * std::abs(t) / (1.0 + t);
        REQUIRE(s.u_phi == Catch::Approx(lead).epsilon(0.01));
    }
}

TEST_CASE("stream identity balances at the ring where both sides equal 8", "[field]") {
    const auto field = make_field();
    REQUIRE(std::abs(field.stream_identity_residual({1.0, 0.0}, 1e-3)) <= 1e-6);
    // right side directly: 10 rho^2/R^4 - H'(0)/(2 R^2) with H'(0) = 4
    const auto& H = testutil::chain20().prof.Hp_d;
    REQUIRE(10.0 - H.eval(0.0) / 2 == Catch::Approx(8.0).margin(1e-12));
}

TEST_CASE("euler, divergence and transport residuals on the standard grid", "[field]") {
    const auto field = make_field();
    const auto sw = ringflow::sweep_field(field, 41, 1e-3, 8);
    REQUIRE(sw.points == 41 * 41 - 1);
    REQUIRE(sw.euler <= 1e-6);
    REQUIRE(sw.swirl <= 1e-6);
    REQUIRE(sw.div <= 1e-8);
    REQUIRE(sw.energy <= 1e-9);
    REQUIRE(sw.bernoulli <= 1e-9);
    REQUIRE(sw.advect <= 1e-8);
    REQUIRE(sw.stream <= 1e-6);
    // the collar exists because the swirl speed is conical at the ring; the
    // worst swirl residual inside it stays bounded but exceeds the tolerance
    REQUIRE(sw.collar_skipped > 0);
    REQUIRE(sw.swirl_collar_worst > 1e-6);
    REQUIRE(sw.swirl_collar_worst < 1e-4);
}

TEST_CASE("residual tolerances also hold at a finer step", "[field]") {
    const auto field = make_field();
    const auto sw = ringflow::sweep_field(field, 21, 5e-4, 16);
    REQUIRE(sw.euler <= 1e-6);
    REQUIRE(sw.swirl <= 1e-6);
    REQUIRE(sw.div <= 1e-8);
}

TEST_CASE("velocity scales as R^2 and pressure as R^4", "[field]") {
    const auto base = make_field();
    for (const double Rs : {0.5, 2.0}) {
        const auto scaled = make_field(Rs);
        const double cu = Rs * Rs, cp = cu * cu;
        for (const auto [X, Y] : {std::pair{0.013, -0.009}, {-0.027, 0.0}, {0.0, 0.033}}) {
            const auto a = base.sample({1 + X, Y});
            const auto b = scaled.sample({Rs * (1 + X), Rs * Y});
            REQUIRE(b.u_rho == cu * a.u_rho);
            REQUIRE(b.u_phi == cu * a.u_phi);
            REQUIRE(b.u_z == cu * a.u_z);
            REQUIRE(b.p == cp * a.p);
        }
    }
}

TEST_CASE("deliberate swirl mis-scaling is caught by the checks", "[field]") {
    const auto field = make_field(1.0, 0.1, {1.5, 1.0});
    const CylPoint q{1.02, 0.01};
    REQUIRE(std::abs(field.identities(q).energy_dev) > 1e-9);
    REQUIRE(std::abs(field.residuals(q, 1e-3).r_rho) > 1e-6);
    // but the swirl momentum equation is linear in u_phi and stays balanced
    REQUIRE(std::abs(field.residuals(q, 1e-3).r_phi) <= 1e-6);
}

TEST_CASE("deliberate pressure mis-scaling is caught by the checks", "[field]") {
    const auto field = make_field(1.0, 0.1, {1.0, 1.5});
    const CylPoint q{1.02, 0.01};
    REQUIRE(std::abs(field.identities(q).energy_dev) > 1e-9);
    REQUIRE(std::abs(field.identities(q).bernoulli_dev) > 1e-9);
    REQUIRE(std::abs(field.residuals(q, 1e-3).r_rho) > 1e-6);
    REQUIRE(std::abs(field.residuals(q, 1e-3).r_z) > 1e-6);
}

TEST_CASE("field construction and sampling validate their domain", "[field]") {
    const auto& s = testutil::chain20();
    REQUIRE_THROWS_AS(FlowField(s.alpha, s.prof, -1.0, 0.1), ringflow::config_error);
    REQUIRE_THROWS_AS(FlowField(s.alpha, s.prof, 1.0, 0.0), ringflow::config_error);
    REQUIRE_THROWS_AS(FlowField(s.alpha, s.prof, 1.0, 1.5), ringflow::config_error);
    const auto field = make_field();
    REQUIRE_THROWS_AS(field.sample({1.5, 0.0}), std::domain_error);
    REQUIRE_THROWS_AS(field.sample({1.0, -0.2}), std::domain_error);
    REQUIRE(field.in_chart({1.05, 0.05}));
    REQUIRE_FALSE(field.in_chart({1.2, 0.0}));
}
