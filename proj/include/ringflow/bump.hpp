// Smooth cutoff in the pressure variable. The profile vanishes identically
// outside (eps, 2 eps) and has the scale-invariant interior shape
//
//   omega(eps (1 + tau)) = exp(-1 / (tau (1 - tau))),   tau in (0, 1),
//
// so its maximum exp(-4) at the shell midpoint does not depend on eps.
// The antiderivative of omega^2, needed for the normalized pressure of the
// cut flow, is tabulated per cell with a Gauss-Legendre rule.
#pragma once

#include <cmath>
#include <vector>

#include "quadrature.hpp"
#include "rational.hpp"

namespace ringflow {

class BumpProfile {
  public:
    explicit BumpProfile(double eps, int table_cells = 2048)
        : eps_(eps), cells_(table_cells), rule_(15), cum_(static_cast<size_t>(table_cells) + 1) {
        if (!(eps > 0)) throw config_error("BumpProfile: eps must be positive");
        if (table_cells < 16) throw config_error("BumpProfile: table too coarse");
        cum_[0] = 0.0;
        for (int k = 0; k < cells_; ++k)
            cum_[k + 1] = cum_[k] + rule_.integrate(shape_sq, tau_at(k), tau_at(k + 1));
    }

    double eps() const { return eps_; }
    double support_lo() const { return eps_; }
    double support_hi() const { return 2 * eps_; }

    // Interior shape and its square on the unit window.
    static double shape(double tau) {
        return (tau > 0 && tau < 1) ? std::exp(-1.0 / (tau * (1.0 - tau))) : 0.0;
    }
    static double shape_sq(double tau) {
        return (tau > 0 && tau < 1) ? std::exp(-2.0 / (tau * (1.0 - tau))) : 0.0;
    }

    double omega(double p) const { return shape((p - eps_) / eps_); }
    double omega_sq(double p) const { return shape_sq((p - eps_) / eps_); }

    // Integral of omega^2 over (support_lo, p).
    double mass_below(double p) const {
        const double tau = (p - eps_) / eps_;
        if (tau <= 0) return 0.0;
        if (tau >= 1) return eps_ * cum_[static_cast<size_t>(cells_)];
        const int k = std::min(static_cast<int>(tau * cells_), cells_ - 1);
        return eps_ * (cum_[static_cast<size_t>(k)] + rule_.integrate(shape_sq, tau_at(k), tau));
    }

    double total_mass() const { return eps_ * cum_[static_cast<size_t>(cells_)]; }

    // Pressure of the cut flow, normalized to vanish beyond the shell:
    // derivative omega^2(p), value -total_mass below the shell, 0 above.
    double p_tilde(double p) const { return mass_below(p) - total_mass(); }

  private:
    double tau_at(int k) const { return static_cast<double>(k) / cells_; }

    double eps_;
    int cells_;
    GaussRule rule_;
    std::vector<double> cum_;
};

}  // namespace ringflow
