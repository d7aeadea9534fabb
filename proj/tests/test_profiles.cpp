#include <catch2/catch_amalgamated.hpp>

#include <ringflow/profiles.hpp>

#include "oracles.hpp"

using ringflow::Rat;
using ringflow::build_profiles;
using ringflow::rat;
using ringflow::solve_psi;

namespace {
const ringflow::ProfileSet& shared_profiles() {
    static const auto prof = build_profiles(solve_psi(13), 12);
    return prof;
}
}  // namespace

TEST_CASE("profile jets at the ring", "[profiles]") {
    const auto& prof = shared_profiles();
    REQUIRE(prof.F.get(0, 0) == 0);
    REQUIRE(prof.F.get(1, 0) == 4);
    REQUIRE(prof.F.get(0, 1) == rat(3, 2));
    REQUIRE(prof.G.get(0, 0) == 0);
    REQUIRE(prof.G.get(1, 0) == 0);
    REQUIRE(prof.G.get(0, 1) == 8);
}

TEST_CASE("swirl profile starts 4A - (21/2) A^2", "[profiles]") {
    const auto& prof = shared_profiles();
    REQUIRE(prof.H[0] == 0);
    REQUIRE(prof.H[1] == 4);
    REQUIRE(prof.H[2] == rat(-21, 2));
}

TEST_CASE("profile identities hold exactly", "[profiles]") {
    const auto& prof = shared_profiles();
    const auto e2a = ringflow::compatibility_residual(prof);
    REQUIRE(e2a.order() == prof.order - 1);
    REQUIRE(e2a.valuation() == -1);
    const auto e2b = ringflow::radial_structure_residual(prof);
    REQUIRE(e2b.order() == prof.order - 1);
    REQUIRE(e2b.valuation() == -1);
    const auto hres = ringflow::swirl_profile_residual(prof);
    REQUIRE(hres.order() == prof.order - 1);
    REQUIRE(hres.valuation() == -1);
}

TEST_CASE("series evaluation matches the defining closed forms", "[profiles]") {
    const auto& prof = shared_profiles();
    for (const auto& [x, a] : {std::pair{1.01, 0.0}, {0.97, 0.02}, {1.03, 0.05}, {1.0, 0.08}}) {
        const auto s = ringflow::eval_profiles(prof, x, a, 0.1);
        const auto c = ringflow::eval_profiles_closed(prof, x, a, 0.1);
        REQUIRE(s.F == Catch::Approx(c.F).margin(1e-13));
        REQUIRE(s.G == Catch::Approx(c.G).margin(1e-13));
        REQUIRE(s.H == Catch::Approx(c.H).margin(1e-13));
    }
    // with no swirl argument the radial profile is a cubic polynomial
    const auto s = ringflow::eval_profiles(prof, 1.01, 0.0, 0.1);
    REQUIRE(s.F == Catch::Approx(0.040602).margin(1e-12));
    REQUIRE_THROWS_AS(ringflow::eval_profiles(prof, 1.2, 0.0, 0.1), std::domain_error);
}

TEST_CASE("identities reject a perturbed input profile", "[profiles]") {
    auto bad_series = solve_psi(13).series;
    bad_series.set(2, bad_series[2] + rat(1, 1000));
    const ringflow::PsiSolution bad{bad_series, bad_series.convert<double>()};
    const auto prof = build_profiles(bad, 12);
    // the compatibility and swirl identities encode the defining equation...
    REQUIRE(ringflow::compatibility_residual(prof).valuation() != -1);
    REQUIRE(ringflow::swirl_profile_residual(prof).valuation() != -1);
    // ...while the radial structure identity is insensitive to it
    REQUIRE(ringflow::radial_structure_residual(prof).valuation() == -1);
}

TEST_CASE("profile builder validates its inputs", "[profiles]") {
    const auto psi = solve_psi(6);
    REQUIRE_THROWS_AS(build_profiles(psi, 6), ringflow::config_error);
    REQUIRE_THROWS_AS(build_profiles(psi, 2), ringflow::config_error);
    REQUIRE_NOTHROW(build_profiles(psi, 5));
}
