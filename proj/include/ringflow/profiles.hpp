// Coupling profiles for the first-order system satisfied by the local
// pressure shape a(X, Y) near the ring:
//
//   F(X, A) = -2 (1+X) f(A) + 2 (1+X)^3         (f = series from solve_psi)
//   H(A)    = 6 A (1/f'(A) + 2 f(A))
//   G(X, A) = 12 (1+X)^2 A - F^2 - H(A)
//
// expanded about the ring location (X = x-1 is the shifted first variable,
// A the profile value). Two exact series identities tie the profiles
// together and are exposed as residual builders:
//
//   e2a:  G_X + F G_A - 2 G F_A  == 0      (compatibility of the system)
//   e2b:  (1+X) F_X - F - 4(1+X)^3 == 0    (structure of F)
//
// plus the 1D identity H'(A) = 24 A f'(A) + 4 f(A), which encodes the
// original ODE for f.
#pragma once

#include "psi.hpp"
#include "series2.hpp"

namespace ringflow {

struct ProfileSet {
    int order = 0;
    Series2D<Rat> F{0}, G{0};
    Series1D<Rat> H{0};
    PsiSolution psi;
    Series2D<double> F_d{0}, G_d{0};
    Series1D<double> H_d{0}, Hp_d{0};
};

inline ProfileSet build_profiles(const PsiSolution& psi, int order) {
    if (order < 3) throw config_error("build_profiles: order must be >= 3");
    if (psi.series.order() < order + 1)
        throw config_error("build_profiles: need psi order >= profile order + 1");
    const auto& f = psi.series;

    Series2D<Rat> fA(order);  // f embedded in the second variable
    for (int j = 0; j <= order; ++j) fA.set(0, j, f[j]);

    using T = typename Series2D<Rat>::Term;
    const auto minus_two_x = Series2D<Rat>::polynomial({T{0, 0, Rat(-2)}, T{1, 0, Rat(-2)}}, order);
    const auto two_x3 = Series2D<Rat>::polynomial(
        {T{0, 0, Rat(2)}, T{1, 0, Rat(6)}, T{2, 0, Rat(6)}, T{3, 0, Rat(2)}}, order);
    const auto twelve_x2_a = Series2D<Rat>::polynomial(
        {T{0, 1, Rat(12)}, T{1, 1, Rat(24)}, T{2, 1, Rat(12)}}, order);

    ProfileSet prof;
    prof.order = order;
    prof.psi = psi;
    prof.F = minus_two_x * fA + two_x3;

    const auto d1 = f.derivative();
    const auto a_poly = Series1D<Rat>::polynomial({Rat(0), Rat(1)}, order + 1);
    prof.H = Rat(6) * (a_poly * (d1.inverse() + Rat(2) * f));

    Series2D<Rat> hA(order);
    for (int j = 0; j <= order; ++j) hA.set(0, j, prof.H[j]);
    prof.G = twelve_x2_a - prof.F * prof.F - hA;

    prof.F_d = prof.F.convert<double>();
    prof.G_d = prof.G.convert<double>();
    prof.H_d = prof.H.convert<double>();
    prof.Hp_d = prof.H.derivative().convert<double>();
    return prof;
}

inline Series2D<Rat> compatibility_residual(const ProfileSet& prof) {
    return prof.G.diff_first() + prof.F * prof.G.diff_second() -
           Rat(2) * (prof.G * prof.F.diff_second());
}

inline Series2D<Rat> radial_structure_residual(const ProfileSet& prof) {
    using T = typename Series2D<Rat>::Term;
    const int m = prof.order - 1;
    const auto one_x = Series2D<Rat>::polynomial({T{0, 0, Rat(1)}, T{1, 0, Rat(1)}}, m);
    const auto four_x3 = Series2D<Rat>::polynomial(
        {T{0, 0, Rat(4)}, T{1, 0, Rat(12)}, T{2, 0, Rat(12)}, T{3, 0, Rat(4)}}, m);
    return one_x * prof.F.diff_first() - prof.F.truncated(m) - four_x3;
}

inline Series1D<Rat> swirl_profile_residual(const ProfileSet& prof) {
    const auto& f = prof.psi.series;
    const auto d1 = f.derivative();
    const int m = prof.order - 1;
    const auto a_poly = Series1D<Rat>::polynomial({Rat(0), Rat(1)}, m);
    return prof.H.derivative() - Rat(24) * (a_poly * d1) - Rat(4) * f.truncated(m);
}

struct ProfileValues {
    double F, G, H;
};

// Series evaluation inside the trusted box |X| <= radius, |A| <= radius.
inline ProfileValues eval_profiles(const ProfileSet& prof, double x, double a, double radius) {
    const double X = x - 1.0;
    if (std::max(std::abs(X), std::abs(a)) > radius * (1 + 1e-12))
        throw std::domain_error("eval_profiles: outside trusted box");
    return {prof.F_d.eval(X, a), prof.G_d.eval(X, a), prof.H_d.eval(a)};
}

// The defining closed forms, evaluated through the 1D series only; used to
// cross-check the 2D expansions.
inline ProfileValues eval_profiles_closed(const ProfileSet& prof, double x, double a,
                                          double radius) {
    const double X = x - 1.0;
    if (std::max(std::abs(X), std::abs(a)) > radius * (1 + 1e-12))
        throw std::domain_error("eval_profiles_closed: outside trusted box");
    const double fa = prof.psi.series_d.eval(a);
    const double F = -2.0 * x * fa + 2.0 * x * x * x;
    const double H = prof.H_d.eval(a);
    const double G = 12.0 * x * x * a - F * F - H;
    return {F, G, H};
}

}  // namespace ringflow
