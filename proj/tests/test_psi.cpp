#include <catch2/catch_amalgamated.hpp>

#include <ringflow/psi.hpp>

#include "oracles.hpp"

using ringflow::Rat;
using ringflow::Series1D;
using ringflow::rat;
using ringflow::solve_psi;

TEST_CASE("profile series starts with the published coefficients", "[psi]") {
    const auto sol = solve_psi(8);
    REQUIRE(sol.series.order() == 8);
    REQUIRE(sol.series[0] == Rat(1));
    REQUIRE(sol.series[1] == rat(-3, 4));
    REQUIRE(sol.series[2] == rat(9, 128));
    REQUIRE(sol.series[3] == rat(-21, 1024));
    REQUIRE(sol.series[4] == rat(1035, 131072));
    REQUIRE(sol.series[5] == rat(-1809, 524288));
}

TEST_CASE("profile series satisfies its equation identically", "[psi]") {
    const auto sol = solve_psi(12);
    const auto res = ringflow::psi_ode_residual(sol.series);
    REQUIRE(res.order() == 10);
    REQUIRE(res.valuation() == -1);
}

TEST_CASE("longer solves extend shorter ones", "[psi]") {
    const auto s6 = solve_psi(6);
    const auto s12 = solve_psi(12);
    REQUIRE(s6.series == s12.series.truncated(6));
}

TEST_CASE("solution passes the transformed-equation cross-check", "[psi]") {
    const auto check = ringflow::verify_transformed_ode(solve_psi(10));
    REQUIRE(check.initial_value_ok);
    REQUIRE(check.verified_through == 8);
    REQUIRE(check.residual_zero);
}

TEST_CASE("perturbed coefficients are rejected by both residual routes", "[psi]") {
    const auto sol = solve_psi(10);
    auto bad = sol.series;
    bad.set(3, bad[3] + rat(1, 1000000));
    REQUIRE(ringflow::psi_ode_residual(bad).valuation() != -1);
    const ringflow::PsiSolution bad_sol{bad, bad.convert<double>()};
    REQUIRE_FALSE(ringflow::verify_transformed_ode(bad_sol).residual_zero);
}

TEST_CASE("series evaluation matches an independent integration", "[psi]") {
    const auto sol = solve_psi(20);
    for (const double x : {0.05, 0.1, 0.25}) {
        const double series_val = ringflow::eval_psi(sol, x, 0.3);
        const double reference = testutil::psi_reference(x);
        REQUIRE(series_val == Catch::Approx(reference).margin(1e-8));
    }
    REQUIRE_THROWS_AS(ringflow::eval_psi(sol, 0.5, 0.3), std::domain_error);
}

TEST_CASE("solver rejects orders below the seeded data", "[psi]") {
    REQUIRE_THROWS_AS(solve_psi(1), ringflow::config_error);
}
