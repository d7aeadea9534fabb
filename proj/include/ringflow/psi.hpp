// Exact series solution of the degenerate profile ODE
//
//   3 x f'' + 6 x (f')^3 - 4 f (f')^2 - 3 f' = 0,   f(0) = 1,  f'(0) = -3/4.
//
// The equation is singular at x = 0, so instead of a standard ODE stepper the
// solver determines one Taylor coefficient per degree. The coefficient c_n
// enters the degree-(n-1) residual coefficient affinely, so two evaluations
// (c_n = 0 and c_n = 1) pin it down without any hand-derived recursion.
#pragma once

#include <string>

#include "series1.hpp"

namespace ringflow {

struct PsiSolution {
    Series1D<Rat> series{0};
    Series1D<double> series_d{0};

    int order() const { return series.order(); }
};

// Left-hand side of the ODE applied to a candidate series.
inline Series1D<Rat> psi_ode_residual(const Series1D<Rat>& f) {
    if (f.order() < 2) throw std::domain_error("psi_ode_residual: order must be >= 2");
    const auto x = Series1D<Rat>::polynomial({Rat(0), Rat(1)}, f.order());
    const auto d1 = f.derivative();
    const auto d1sq = d1 * d1;
    return Rat(3) * (x * d1.derivative()) + Rat(6) * (x * (d1sq * d1)) - Rat(4) * (f * d1sq) -
           Rat(3) * d1;
}

inline PsiSolution solve_psi(int order) {
    if (order < 2) throw config_error("solve_psi: order must be >= 2");
    // One spare degree so the top probe can still read its residual coefficient.
    Series1D<Rat> f(order + 1);
    f.set(0, Rat(1));
    f.set(1, rat(-3, 4));
    for (int n = 2; n <= order; ++n) {
        f.set(n, Rat(0));
        const Rat r0 = psi_ode_residual(f)[n - 1];
        f.set(n, Rat(1));
        const Rat r1 = psi_ode_residual(f)[n - 1];
        if (r1 == r0)
            throw solver_error("solve_psi: degenerate coefficient update at degree " +
                               std::to_string(n));
        f.set(n, -r0 / (r1 - r0));
    }
    Series1D<Rat> out = f.truncated(order);
    const auto res = psi_ode_residual(out);
    for (int k = 0; k <= res.order(); ++k)
        if (!is_zero(res[k]))
            throw solver_error("solve_psi: residual is nonzero at degree " + std::to_string(k));
    return {out, out.convert<double>()};
}

// Check of the same solution against an independently derived first-order
// equation for v = f f' as a function of t = x f^(-2):
//
//   t dv/dt = v((4/3)v + 1) + t v^2 (2v + 9) / (3(1 - 2tv)),
//
// verified here in cross-multiplied form t v'(x) = t'(x) (A + B) so that no
// division by the valuation-1 series t is needed.
struct TransformCheck {
    bool initial_value_ok = false;  // v(0) == -3/4
    int verified_through = -1;      // highest coefficient degree compared
    bool residual_zero = false;
};

inline TransformCheck verify_transformed_ode(const PsiSolution& sol) {
    const auto& f = sol.series;
    const int n = f.order();
    if (n < 3) throw config_error("verify_transformed_ode: order must be >= 3");
    const auto x = Series1D<Rat>::polynomial({Rat(0), Rat(1)}, n);
    const auto d1 = f.derivative();
    const auto t = x * (f * f).inverse();
    const auto v = f * d1;
    const auto lhs = t * v.derivative();
    const auto a = v * (rat(4, 3) * v + Rat(1));
    const auto b = t * (v * v) * (Rat(2) * v + Rat(9)) *
                   (Rat(3) * (Rat(1) - Rat(2) * (t * v))).inverse();
    const auto diff = lhs - t.derivative() * (a + b);

    TransformCheck c;
    c.initial_value_ok = (v[0] == rat(-3, 4));
    c.verified_through = diff.order();
    c.residual_zero = (diff.valuation() == -1);
    return c;
}

inline double eval_psi(const PsiSolution& sol, double x, double radius) {
    if (!(std::abs(x) <= radius * (1 + 1e-12)))
        throw std::domain_error("eval_psi: argument outside trusted radius");
    return sol.series_d.eval(x);
}

}  // namespace ringflow
