// Small 1D quadrature toolkit: Gauss-Legendre rules (nodes computed by
// Newton iteration on the Legendre polynomials) and an adaptive Simpson
// integrator used as an independent cross-check scheme.
#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ringflow {

class GaussRule {
  public:
    explicit GaussRule(int n) : node_(n), weight_(n) {
        if (n < 1) throw std::domain_error("GaussRule: need at least one node");
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double deriv = 0.0;
            for (int it = 0; it < 100; ++it) {
                const auto [p, dp] = legendre(n, x);
                deriv = dp;
                const double dx = p / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15 * std::max(1.0, std::abs(x))) {
                    deriv = legendre(n, x).second;
                    break;
                }
            }
            node_[i] = -x;
            node_[n - 1 - i] = x;
            weight_[i] = weight_[n - 1 - i] = 2.0 / ((1.0 - x * x) * deriv * deriv);
        }
    }

    template <class F>
    double integrate(F&& f, double a, double b) const {
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double acc = 0.0;
        for (size_t k = 0; k < node_.size(); ++k) acc += weight_[k] * f(mid + half * node_[k]);
        return acc * half;
    }

    template <class F>
    double integrate_composite(F&& f, double a, double b, int cells) const {
        if (cells < 1) throw std::domain_error("GaussRule: need at least one cell");
        double acc = 0.0;
        for (int k = 0; k < cells; ++k)
            acc += integrate(f, a + (b - a) * k / cells, a + (b - a) * (k + 1) / cells);
        return acc;
    }

  private:
    // Value and derivative of the Legendre polynomial P_n.
    static std::pair<double, double> legendre(int n, double x) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
        }
        return {p0, n * (x * p0 - p1) / (x * x - 1.0)};
    }

    std::vector<double> node_, weight_;
};

namespace detail {

template <class F>
double simpson_adapt(F&& f, double a, double b, double fa, double fm, double fb, double whole,
                     double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double both = left + right;
    if (depth <= 0 || std::abs(both - whole) <= 15 * tol) return both + (both - whole) / 15;
    return simpson_adapt(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson_adapt(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace detail

template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 48) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return detail::simpson_adapt(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace ringflow
