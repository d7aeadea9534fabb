#include <catch2/catch_amalgamated.hpp>

#include <ringflow/series2.hpp>

#include "oracles.hpp"

using ringflow::Rat;
using ringflow::Series1D;
using ringflow::Series2D;
using ringflow::rat;
using Term = Series2D<Rat>::Term;

namespace {
bool all_zero(const Series2D<Rat>& s) { return s.valuation() == -1; }
}  // namespace

TEST_CASE("triangular storage and access", "[series2]") {
    Series2D<Rat> s(3);
    REQUIRE(s.order() == 3);
    s.set(1, 2, rat(5, 3));
    REQUIRE(s.get(1, 2) == rat(5, 3));
    REQUIRE(s.get(3, 0) == 0);
    REQUIRE_THROWS_AS(s.get(2, 2), std::out_of_range);
    REQUIRE_THROWS_AS(s.set(0, 4, Rat(1)), std::out_of_range);
    REQUIRE_THROWS_AS(s.get(-1, 0), std::out_of_range);
    REQUIRE_THROWS_AS(Series2D<Rat>(-2), std::domain_error);
    REQUIRE_THROWS_AS(Series2D<Rat>::polynomial({Term{4, 0, Rat(1)}}, 3), std::out_of_range);
}

TEST_CASE("hand-expanded bivariate square", "[series2]") {
    const auto f =
        Series2D<Rat>::polynomial({Term{0, 0, Rat(1)}, Term{1, 0, Rat(1)}, Term{0, 1, Rat(1)}}, 2);
    const auto sq = f * f;  // (1 + X + Y)^2
    REQUIRE(sq.get(0, 0) == 1);
    REQUIRE(sq.get(1, 0) == 2);
    REQUIRE(sq.get(0, 1) == 2);
    REQUIRE(sq.get(2, 0) == 1);
    REQUIRE(sq.get(1, 1) == 2);
    REQUIRE(sq.get(0, 2) == 1);
}

TEST_CASE("ring axioms on random bivariate series", "[series2]") {
    auto rng = testutil::rng_for("series2-ring-axioms");
    for (int trial = 0; trial < 15; ++trial) {
        const int order = 3 + static_cast<int>(rng() % 4);
        const auto a = testutil::random_series2(rng, order);
        const auto b = testutil::random_series2(rng, order);
        const auto c = testutil::random_series2(rng, order);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(all_zero(a - a));
    }
}

TEST_CASE("bivariate order tracking takes the minimum", "[series2]") {
    auto rng = testutil::rng_for("series2-min-order");
    const auto a = testutil::random_series2(rng, 3);
    const auto b = testutil::random_series2(rng, 7);
    REQUIRE((a + b).order() == 3);
    REQUIRE((a * b).order() == 3);
}

TEST_CASE("partial derivatives", "[series2]") {
    // f = X^2 Y + 2 Y^3
    const auto f = Series2D<Rat>::polynomial({Term{2, 1, Rat(1)}, Term{0, 3, Rat(2)}}, 3);
    const auto fx = f.diff_first();
    const auto fy = f.diff_second();
    REQUIRE(fx.order() == 2);
    REQUIRE(fx.get(1, 1) == 2);
    REQUIRE(fy.get(2, 0) == 1);
    REQUIRE(fy.get(0, 2) == 6);
    REQUIRE(all_zero(fx.diff_second() - fy.diff_first()));
}

TEST_CASE("restrictions and coefficient polynomials", "[series2]") {
    const auto f = Series2D<Rat>::polynomial(
        {Term{0, 0, Rat(3)}, Term{1, 0, Rat(4)}, Term{0, 2, Rat(5)}, Term{1, 1, Rat(7)}}, 2);
    const auto colY = f.column_first0();
    REQUIRE(colY.order() == 2);
    REQUIRE(colY[0] == 3);
    REQUIRE(colY[2] == 5);
    const auto colX = f.column_second0();
    REQUIRE(colX[1] == 4);
    const auto p1 = f.coeff_poly_second(1);
    REQUIRE(p1.order() == 1);
    REQUIRE(p1[1] == 7);
}

TEST_CASE("univariate into bivariate composition", "[series2]") {
    // (1 + g + g^2) with g = X + Y: 1 + X + Y + (X + Y)^2 through degree 2
    const auto outer = Series1D<Rat>::from_coeffs({Rat(1), Rat(1), Rat(1)});
    const auto inner =
        Series2D<Rat>::polynomial({Term{1, 0, Rat(1)}, Term{0, 1, Rat(1)}}, 2);
    const auto comp = ringflow::compose(outer, inner);
    REQUIRE(comp.order() == 2);
    REQUIRE(comp.get(0, 0) == 1);
    REQUIRE(comp.get(1, 0) == 1);
    REQUIRE(comp.get(0, 1) == 1);
    REQUIRE(comp.get(2, 0) == 1);
    REQUIRE(comp.get(1, 1) == 2);
    REQUIRE(comp.get(0, 2) == 1);
}

TEST_CASE("second-variable composition", "[series2]") {
    // outer(X, A) = X + X A + A^2 with A = Y + X^2: X + XY + Y^2 + O(3)
    const auto outer = Series2D<Rat>::polynomial(
        {Term{1, 0, Rat(1)}, Term{1, 1, Rat(1)}, Term{0, 2, Rat(1)}}, 2);
    const auto inner =
        Series2D<Rat>::polynomial({Term{0, 1, Rat(1)}, Term{2, 0, Rat(1)}}, 2);
    const auto comp = ringflow::compose_second(outer, inner);
    REQUIRE(comp.order() == 2);
    REQUIRE(comp.get(1, 0) == 1);
    REQUIRE(comp.get(1, 1) == 1);
    REQUIRE(comp.get(0, 2) == 1);
    REQUIRE(comp.get(2, 0) == 0);
    REQUIRE(comp.get(0, 1) == 0);

    REQUIRE_THROWS_AS(
        ringflow::compose_second(outer, Series2D<Rat>::polynomial({Term{0, 0, Rat(1)}}, 2)),
        std::domain_error);
}

TEST_CASE("composition order reflects inner valuation in two variables", "[series2]") {
    auto rng = testutil::rng_for("series2-compose-order");
    const auto outer1 = testutil::random_series1(rng, 2);
    Series2D<Rat> inner(9);
    inner.set(1, 1, Rat(1));
    // valuation 2, outer order 2: trustworthy through degree 5
    REQUIRE(ringflow::compose(outer1, inner).order() == 5);
}

TEST_CASE("bivariate evaluation agrees with direct power sums", "[series2]") {
    auto rng = testutil::rng_for("series2-eval");
    const auto f = testutil::random_series2(rng, 5);
    const double x = 0.21, y = -0.34;
    double direct = 0;
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j)
            direct += ringflow::to_double(f.get(i, j)) * std::pow(x, i) * std::pow(y, j);
    REQUIRE(f.eval(x, y) == Catch::Approx(direct).margin(1e-13));

    const auto [val, err] = f.eval_with_error(x, y);
    REQUIRE(val == f.eval(x, y));
    REQUIRE(err >= 0.0);

    const auto fd = f.convert<double>();
    REQUIRE(fd.eval(x, y) == Catch::Approx(f.eval(x, y)).margin(1e-14));
}

TEST_CASE("bivariate truncation", "[series2]") {
    auto rng = testutil::rng_for("series2-truncate");
    const auto f = testutil::random_series2(rng, 6);
    const auto t = f.truncated(4);
    REQUIRE(t.order() == 4);
    REQUIRE(t.get(2, 2) == f.get(2, 2));
    REQUIRE_THROWS_AS(f.truncated(7), std::domain_error);
}
