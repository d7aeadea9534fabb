// Shared test helpers: random exact series for property checks and an
// independent Runge-Kutta reference for the profile ODE.
#pragma once

#include <random>

#include <ringflow/series2.hpp>

namespace testutil {

using ringflow::Rat;
using ringflow::Series1D;
using ringflow::Series2D;

inline std::mt19937_64 rng_for(const char* label) {
    std::seed_seq seq(label, label + std::char_traits<char>::length(label));
    return std::mt19937_64(seq);
}

inline Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 10);
    return ringflow::rat(num(rng), den(rng));
}

inline Series1D<Rat> random_series1(std::mt19937_64& rng, int order) {
    Series1D<Rat> s(order);
    for (int k = 0; k <= order; ++k) s.set(k, random_rat(rng));
    return s;
}

inline Series2D<Rat> random_series2(std::mt19937_64& rng, int order) {
    Series2D<Rat> s(order);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) s.set(i, j, random_rat(rng));
    return s;
}

// Independent check value for the profile ODE solution: classic RK4 on
//
//   f'' = (4 f (f')^2 + 3 f' - 6 x (f')^3) / (3 x)
//
// started just off the singular point with the first three published Taylor
// terms. Start offset and step are chosen so both error sources sit well
// below 1e-10 over x <= 0.5.
inline double psi_reference(double x_end, int steps = 200000) {
    double x = 1e-6;
    double f = 1.0 - 0.75 * x + (9.0 / 128.0) * x * x;
    double fp = -0.75 + 2.0 * (9.0 / 128.0) * x;
    const auto acc = [](double x, double f, double fp) {
        return (4.0 * f * fp * fp + 3.0 * fp - 6.0 * x * fp * fp * fp) / (3.0 * x);
    };
    const double h = (x_end - x) / steps;
    for (int k = 0; k < steps; ++k) {
        const double k1f = fp, k1p = acc(x, f, fp);
        const double k2f = fp + 0.5 * h * k1p, k2p = acc(x + 0.5 * h, f + 0.5 * h * k1f, fp + 0.5 * h * k1p);
        const double k3f = fp + 0.5 * h * k2p, k3p = acc(x + 0.5 * h, f + 0.5 * h * k2f, fp + 0.5 * h * k2p);
        const double k4f = fp + h * k3p, k4p = acc(x + h, f + h * k3f, fp + h * k3p);
        f += h / 6.0 * (k1f + 2 * k2f + 2 * k3f + k4f);
        fp += h / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p);
        x += h;
    }
    return f;
}

}  // namespace testutil
