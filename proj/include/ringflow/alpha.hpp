// Exact bivariate series for the local pressure shape a(X, Y) solving
//
//   a_X = F(X, a),   (a_Y)^2 = G(X, a),   a(0,0) = 0,
//
// about the ring, with a nondegenerate minimum at the origin and even
// symmetry in Y.
//
// Degree-by-degree construction. At total degree d every coefficient with an
// X factor follows from the first equation: i * c[i][j] equals the (i-1, j)
// coefficient of F(X, a) computed from lower-degree data. The remaining pure-Y
// coefficient c[0][d] is pinned by the (0, d) coefficient of the second
// equation, which only involves the restriction to X = 0 and is affine in
// c[0][d] once the gradient at the origin vanishes; it is solved by the same
// two-point probing used for the 1D profile. Degree 2 is the one genuinely
// nonlinear step (the probe equation is quadratic with roots 0 and 2); the
// root 2 is taken, since the zero root is the degenerate branch with no
// minimum.
#pragma once

#include <string>
#include <utility>

#include "profiles.hpp"

namespace ringflow {

struct AlphaSolution {
    Series2D<Rat> series{0};
    Series2D<double> s_d{0}, sx_d{0}, sy_d{0};

    int order() const { return series.order(); }
};

inline AlphaSolution solve_alpha(const ProfileSet& prof, int order) {
    if (order < 3) throw config_error("solve_alpha: order must be >= 3");
    if (prof.order < order + 1)
        throw config_error("solve_alpha: need profile order >= target order + 1");

    const int m = order + 1;  // container; the top row is never used as output
    const auto& f = prof.psi.series;
    using T = typename Series2D<Rat>::Term;
    const auto minus_two_x = Series2D<Rat>::polynomial({T{0, 0, Rat(-2)}, T{1, 0, Rat(-2)}}, m);
    const auto two_x3 = Series2D<Rat>::polynomial(
        {T{0, 0, Rat(2)}, T{1, 0, Rat(6)}, T{2, 0, Rat(6)}, T{3, 0, Rat(2)}}, m);
    const auto g_axis = prof.G.column_first0();  // G(0, A), drives the pure-Y probes

    Series2D<Rat> a(m);

    // Coefficient d of the X = 0 restriction of (a_Y)^2 - G(0, a(0, Y)).
    const auto axis_residual = [&](int d) {
        const auto col = a.column_first0();
        const auto dcol = col.derivative();
        return (dcol * dcol - compose(g_axis, col))[d];
    };

    for (int d = 1; d <= order; ++d) {
        const auto fa = minus_two_x.truncated(d - 1) * compose(f, a.truncated(d - 1)) +
                        two_x3.truncated(d - 1);
        for (int i = 1; i <= d; ++i) a.set(i, d - i, fa.get(i - 1, d - i) / Rat(i));
        if (d == 1) {
            a.set(0, 1, Rat(0));  // vanishing gradient at the minimum
        } else if (d == 2) {
            a.set(0, 2, Rat(2));
            if (!is_zero(axis_residual(2)))
                throw solver_error("solve_alpha: quadratic seed rejected");
        } else {
            a.set(0, d, Rat(0));
            const Rat r0 = axis_residual(d);
            a.set(0, d, Rat(1));
            const Rat r1 = axis_residual(d);
            if (r1 == r0)
                throw solver_error("solve_alpha: degenerate probe at degree " + std::to_string(d));
            const Rat cd = -r0 / (r1 - r0);
            if (d % 2 == 1 && !is_zero(cd))
                throw solver_error("solve_alpha: odd-degree coefficient at degree " +
                                   std::to_string(d));
            a.set(0, d, cd);
        }
    }

    AlphaSolution sol;
    sol.series = a.truncated(order);
    sol.s_d = sol.series.convert<double>();
    sol.sx_d = sol.series.diff_first().convert<double>();
    sol.sy_d = sol.series.diff_second().convert<double>();
    return sol;
}

// Residuals of both defining equations, built through the profile expansions
// (an independent route from the closed forms used by the solver).
struct AlphaResiduals {
    Series2D<Rat> radial{0};   // a_X - F(X, a)
    Series2D<Rat> vertical{0};  // (a_Y)^2 - G(X, a)
};

inline AlphaResiduals alpha_pde_residuals(const AlphaSolution& sol, const ProfileSet& prof) {
    const auto& a = sol.series;
    const auto ay = a.diff_second();
    return {a.diff_first() - compose_second(prof.F, a), ay * ay - compose_second(prof.G, a)};
}

struct MinimumCheck {
    bool center_zero = false;
    bool gradient_zero = false;
    bool hessian_ok = false;  // Hessian equals diag(4, 4)
};

inline MinimumCheck verify_minimum(const AlphaSolution& sol) {
    const auto& a = sol.series;
    MinimumCheck c;
    c.center_zero = is_zero(a.get(0, 0));
    c.gradient_zero = is_zero(a.get(1, 0)) && is_zero(a.get(0, 1));
    c.hessian_ok = a.get(2, 0) == Rat(2) && is_zero(a.get(1, 1)) && a.get(0, 2) == Rat(2);
    return c;
}

// Restriction to the symmetry plane Y = 0, as a 1D series in X.
inline Series1D<Rat> axis_slice(const AlphaSolution& sol) { return sol.series.column_second0(); }

struct AlphaEval {
    double a, a_x, a_y;
    double err;  // truncation estimate from the top-degree terms
};

inline AlphaEval eval_alpha(const AlphaSolution& sol, double x, double y, double radius) {
    const double X = x - 1.0, Y = y;
    if (std::max(std::abs(X), std::abs(Y)) > radius * (1 + 1e-12))
        throw std::domain_error("eval_alpha: outside trusted box");
    const auto [val, err] = sol.s_d.eval_with_error(X, Y);
    return {val, sol.sx_d.eval(X, Y), sol.sy_d.eval(X, Y), err};
}

}  // namespace ringflow
