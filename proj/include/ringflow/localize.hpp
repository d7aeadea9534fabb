// Compactly supported modulation of the ring flow. Velocity is scaled by a
// smooth cutoff in the pressure value, omega(p), supported on the shell
// eps < p < 2 eps; the matching pressure integrates omega^2(p) dp and is
// normalized to vanish outside the shell. The result is a steady Euler flow
// on all of space whose support is a solid-torus shell around the ring.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "bump.hpp"
#include "field.hpp"

namespace ringflow {

inline double min_boundary_pressure(const FlowField& field, int samples_per_edge = 512) {
    const double R = field.ring_radius(), r = field.chart_radius();
    double mn = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= samples_per_edge; ++k) {
        const double s = -r + 2.0 * r * k / samples_per_edge;
        const CylPoint edge[4] = {{R * (1 + r), R * s},
                                  {R * (1 - r), R * s},
                                  {R * (1 + s), R * r},
                                  {R * (1 + s), -R * r}};
        for (const auto& q : edge) mn = std::min(mn, field.pressure(q));
    }
    return mn;
}

// The cutoff shell must close up strictly inside the trusted box, i.e. the
// pressure must already exceed 2 eps everywhere on the box boundary.
inline BumpProfile make_bump(const FlowField& field, double eps) {
    if (!(eps > 0)) throw config_error("make_bump: eps must be positive");
    const double mn = min_boundary_pressure(field);
    if (!(2 * eps < mn))
        throw config_error("make_bump: cutoff shell does not close inside the trusted box "
                           "(largest admissible eps here is " +
                           std::to_string(mn / 2) + ")");
    return BumpProfile(eps);
}

// Smallest box radius that keeps the shell for the given eps comfortably
// inside, found by bisection on the slowest-growing boundary direction. The
// returned radius is a suggestion; make_bump re-checks the whole boundary.
inline double chart_radius_for(const AlphaSolution& alpha, double eps, double R,
                               double margin = 1.15, double cap = 0.44) {
    if (!(eps > 0) || !(R > 0)) throw config_error("chart_radius_for: eps and R must be positive");
    const double target = 8.0 * eps * margin / (R * R * R * R);
    const auto profile_at = [&](double r) { return alpha.s_d.eval(-r, 0.0); };
    if (!(profile_at(cap) > target))
        throw config_error("chart_radius_for: eps too large for the trusted series range "
                           "(largest admissible eps is about " +
                           std::to_string(profile_at(cap) * R * R * R * R / (8.0 * margin)) + ")");
    double lo = 0.0, hi = cap;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (profile_at(mid) < target ? lo : hi) = mid;
    }
    return hi;
}

struct ModulatedSample {
    double u_rho, u_phi, u_z;
    double p;         // normalized pressure of the cut flow
    bool in_support;  // inside the open shell where the cutoff is positive
};

class LocalizedFlow {
  public:
    LocalizedFlow(FlowField field, BumpProfile bump)
        : field_(std::move(field)), bump_(std::move(bump)) {}

    const FlowField& base() const { return field_; }
    const BumpProfile& bump() const { return bump_; }

    // Total function on the half-plane: identically at rest outside the
    // trusted box, at rest with constant pressure inside the core.
    ModulatedSample sample(CylPoint q) const {
        if (!field_.in_chart(q)) return {0, 0, 0, 0.0, false};
        const auto s = field_.sample(q);
        if (s.p >= bump_.support_hi()) return {0, 0, 0, 0.0, false};
        if (s.p <= bump_.support_lo()) return {0, 0, 0, -bump_.total_mass(), false};
        const double w = bump_.omega(s.p);
        return {w * s.u_rho, w * s.u_phi, w * s.u_z, bump_.p_tilde(s.p), true};
    }

    FlowResiduals residuals(CylPoint q, double h) const {
        return euler_residual_stencil([this](CylPoint w) { return sample(w); }, q, h);
    }

  private:
    FlowField field_;
    BumpProfile bump_;
};

inline double speed(const ModulatedSample& s) {
    return std::sqrt(s.u_rho * s.u_rho + s.u_phi * s.u_phi + s.u_z * s.u_z);
}

struct SupportExtent {
    double r_max = 0.0;               // largest support distance from the ring
    double max_speed_outside = 0.0;   // largest |u| found beyond the crossings
    int angles = 0;
};

// Outer support boundary along rays from the ring: bisect the crossing of
// p = 2 eps on each ray and remember the farthest one.
inline SupportExtent measure_support(const LocalizedFlow& lf, int angles = 256) {
    const auto& field = lf.base();
    const double R = field.ring_radius(), rc = field.chart_radius();
    const double hi_p = lf.bump().support_hi();
    SupportExtent out;
    out.angles = angles;
    for (int k = 0; k < angles; ++k) {
        const double th = 2 * M_PI * k / angles;
        const double c = std::cos(th), sn = std::sin(th);
        const double rlim = 0.999 * rc / std::max(std::abs(c), std::abs(sn));
        const auto at = [&](double r) { return CylPoint{R * (1 + r * c), R * r * sn}; };
        if (!(field.pressure(at(rlim)) >= hi_p))
            throw solver_error("measure_support: shell is not closed inside the box");
        double lo = 0.0, hi = rlim;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (field.pressure(at(mid)) < hi_p ? lo : hi) = mid;
        }
        out.r_max = std::max(out.r_max, R * hi);
        for (const double fac : {1.0 + 1e-9, 1.02, 1.1})
            out.max_speed_outside =
                std::max(out.max_speed_outside, speed(lf.sample(at(std::min(hi * fac, rlim)))));
    }
    return out;
}

// Largest modulated speed at box points farther than r_cut from the ring.
inline double max_speed_beyond(const LocalizedFlow& lf, double r_cut, int n = 200) {
    const auto& field = lf.base();
    const double R = field.ring_radius(), rc = field.chart_radius();
    double worst = 0.0;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            const double X = -rc + 2 * rc * i / n, Y = -rc + 2 * rc * j / n;
            if (R * std::hypot(X, Y) <= r_cut) continue;
            worst = std::max(worst, speed(lf.sample({R * (1 + X), R * Y})));
        }
    }
    return worst;
}

// Volume of the pressure sublevel set {p <= c}, by ray bisection from the
// ring and periodic trapezoid quadrature in the angle.
inline double sublevel_volume(const FlowField& field, double c, int angles = 512) {
    if (!(c > 0)) throw config_error("sublevel_volume: level must be positive");
    const double R = field.ring_radius(), rc = field.chart_radius();
    double acc = 0.0;
    for (int k = 0; k < angles; ++k) {
        const double th = 2 * M_PI * k / angles;
        const double cs = std::cos(th), sn = std::sin(th);
        const double rlim = 0.999 * rc / std::max(std::abs(cs), std::abs(sn));
        const auto at = [&](double r) { return CylPoint{R * (1 + r * cs), R * r * sn}; };
        if (!(field.pressure(at(rlim)) >= c))
            throw config_error("sublevel_volume: level set leaves the trusted box");
        double lo = 0.0, hi = rlim;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (field.pressure(at(mid)) < c ? lo : hi) = mid;
        }
        acc += hi * hi / 2 + cs * hi * hi * hi / 3;
    }
    return 2 * M_PI * R * R * R * acc * (2 * M_PI / angles);
}

struct VolumePoint {
    double c, volume;
};

struct VolumeCheck {
    std::vector<VolumePoint> samples;
    double spread = 0.0;  // relative spread of volume/c across the levels
};

inline VolumeCheck volume_linearity(const FlowField& field, double c_lo, double c_hi, int count,
                                    int angles = 512) {
    if (count < 2 || !(c_lo > 0) || !(c_hi > c_lo))
        throw config_error("volume_linearity: bad level range");
    VolumeCheck out;
    double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
    for (int k = 0; k < count; ++k) {
        const double c = c_lo * std::pow(c_hi / c_lo, static_cast<double>(k) / (count - 1));
        const double v = sublevel_volume(field, c, angles);
        out.samples.push_back({c, v});
        rmin = std::min(rmin, v / c);
        rmax = std::max(rmax, v / c);
    }
    out.spread = (rmax - rmin) / (0.5 * (rmax + rmin));
    return out;
}

// Tensor Simpson integrals over the trusted box of the energy density and of
// the virial combination |u|^2 + 3p for the modulated flow.
inline std::pair<double, double> virial_pair(const LocalizedFlow& lf, int n) {
    if (n < 2 || n % 2 != 0) throw config_error("virial_pair: need an even grid count");
    const auto& field = lf.base();
    const double R = field.ring_radius(), rc = field.chart_radius();
    const double h = 2 * rc / n;
    const auto w1 = [n](int i) { return (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0); };
    double virial = 0.0, kinetic = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double X = -rc + h * i;
        for (int j = 0; j <= n; ++j) {
            const double Y = -rc + h * j;
            const auto s = lf.sample({R * (1 + X), R * Y});
            const double usq = s.u_rho * s.u_rho + s.u_phi * s.u_phi + s.u_z * s.u_z;
            const double w = w1(i) * w1(j) * (1 + X);
            virial += w * (usq + 3 * s.p);
            kinetic += w * usq;
        }
    }
    const double scale = 2 * M_PI * R * R * R * (h / 3) * (h / 3);
    return {virial * scale, kinetic * scale};
}

struct VirialCheck {
    double coarse = 0, mid = 0, fine = 0;  // virial integral on n, 2n, 4n grids
    double kinetic = 0;                    // energy integral on the finest grid
    double observed_order = 0;             // Richardson convergence estimate
};

inline VirialCheck virial_integral(const LocalizedFlow& lf, int base_n = 64) {
    VirialCheck out;
    double kin_c = 0, kin_m = 0;
    std::tie(out.coarse, kin_c) = virial_pair(lf, base_n);
    std::tie(out.mid, kin_m) = virial_pair(lf, 2 * base_n);
    std::tie(out.fine, out.kinetic) = virial_pair(lf, 4 * base_n);
    const double e1 = std::abs(out.coarse - out.mid);
    const double e2 = std::abs(out.mid - out.fine);
    const double floor = 1e-15 * std::max(1.0, std::abs(out.kinetic));
    out.observed_order = (e2 < floor) ? std::numeric_limits<double>::infinity()
                                      : std::log2(std::max(e1, floor) / e2);
    return out;
}

}  // namespace ringflow
