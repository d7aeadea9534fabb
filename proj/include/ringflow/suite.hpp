// End-to-end verification: solves the series chain, assembles the flow, and
// runs every check in the catalog, collecting one report entry per claim.
// The CLI subcommands and the acceptance gate both drive this layer.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "grid_export.hpp"
#include "localize.hpp"
#include "report.hpp"

namespace ringflow {

struct RunConfig {
    int order = 20;        // truncation degree of the series chain
    double R = 1.0;        // ring radius
    double eps = 0.005;    // cutoff shell parameter
    int grid_n = 41;       // verification / export grid resolution
    double h = 1e-3;       // step for unmodulated finite differences
    double h_mod = 5e-5;   // step for modulated finite differences
    double radius = 0.0;   // chart radius; 0 picks defaults per section
    int swirl_collar = 8;  // swirl-momentum exclusion near the ring, in units of h
    std::string out_dir;   // when set, grids and the report are written here
};

inline void validate(const RunConfig& c) {
    if (c.order < 3) throw config_error("config: order must be at least 3");
    if (c.order > 64) throw config_error("config: order above 64 is not supported");
    if (!(c.R > 0)) throw config_error("config: R must be positive");
    if (!(c.eps > 0)) throw config_error("config: eps must be positive");
    if (c.grid_n < 5 || c.grid_n > 4096) throw config_error("config: grid must be in [5, 4096]");
    if (!(c.h > 0) || !(c.h_mod > 0)) throw config_error("config: steps must be positive");
    if (c.radius != 0.0 && !(c.radius > 0 && c.radius < 1))
        throw config_error("config: radius must lie in (0, 1)");
    if (c.swirl_collar < 1) throw config_error("config: swirl collar must be at least 1");
}

struct Solutions {
    PsiSolution psi;
    ProfileSet prof;
    AlphaSolution alpha;
};

inline Solutions solve_chain(int order) {
    Solutions s;
    s.psi = solve_psi(order + 2);
    s.prof = build_profiles(s.psi, order + 1);
    s.alpha = solve_alpha(s.prof, order);
    return s;
}

// ---------------------------------------------------------------- series ---

inline void report_series(VerificationReport& rep, const Solutions& s) {
    const Rat expect[6] = {Rat(1),          rat(-3, 4),        rat(9, 128),
                           rat(-21, 1024),  rat(1035, 131072), rat(-1809, 524288)};
    bool ok = s.psi.order() >= 5;
    for (int k = 0; ok && k < 6; ++k) ok = s.psi.series[k] == expect[k];
    rep.check_flag("psi-coefficients",
                   "leading profile coefficients are 1, -3/4, 9/128, -21/1024, 1035/131072, "
                   "-1809/524288 exactly",
                   ok);

    const auto res = psi_ode_residual(s.psi.series);
    rep.check_flag("psi-ode-residual",
                   "3x psi'' + 6x (psi')^3 - 4 psi (psi')^2 - 3 psi' = 0 coefficientwise",
                   res.valuation() == -1, "through order " + std::to_string(res.order()));

    const auto tc = verify_transformed_ode(s.psi);
    rep.check_flag("psi-transformed-equation",
                   "under t = x/psi^2, v = psi psi' the profile satisfies "
                   "t dv/dt = v((4/3)v + 1) + t v^2 (2v + 9) / (3(1 - 2tv))",
                   tc.initial_value_ok && tc.residual_zero,
                   "verified through order " + std::to_string(tc.verified_through));
}

// -------------------------------------------------------------- profiles ---

inline void report_profiles(VerificationReport& rep, const ProfileSet& prof) {
    using std::to_string;
    const bool jets_ok = is_zero(prof.F.get(0, 0)) && prof.F.get(1, 0) == Rat(4) &&
                         prof.F.get(0, 1) == rat(3, 2) && is_zero(prof.G.get(0, 0)) &&
                         is_zero(prof.G.get(1, 0)) && prof.G.get(0, 1) == Rat(8) &&
                         is_zero(prof.H[0]) && prof.H[1] == Rat(4) && prof.H[2] == rat(-21, 2);
    rep.check_flag("profile-jets",
                   "F = 4X + (3/2)A + ..., G = 8A + ..., H = 4A - (21/2)A^2 + ... exactly",
                   jets_ok);

    const auto c = compatibility_residual(prof);
    rep.check_flag("profile-compatibility", "G_X + F G_A - 2 G F_A = 0 coefficientwise",
                   c.valuation() == -1, "through total degree " + to_string(c.order()));
    const auto r = radial_structure_residual(prof);
    rep.check_flag("profile-radial-structure", "(1+X) F_X - F - 4(1+X)^3 = 0 coefficientwise",
                   r.valuation() == -1, "through total degree " + to_string(r.order()));
    const auto w = swirl_profile_residual(prof);
    rep.check_flag("profile-swirl", "H'(A) - 24 A psi'(A) - 4 psi(A) = 0 coefficientwise",
                   w.valuation() == -1, "through order " + to_string(w.order()));
}

// ----------------------------------------------------------------- alpha ---

inline void report_alpha(VerificationReport& rep, const Solutions& s, const RunConfig& cfg) {
    const auto& a = s.alpha.series;
    bool low_ok = a.get(2, 0) == Rat(2) && a.get(0, 2) == Rat(2) && a.get(3, 0) == Rat(3) &&
                  a.get(1, 2) == Rat(3);
    for (int d = 0; d <= std::min(3, a.order()); ++d)
        for (int i = 0; i + 1 <= d; ++i) {
            const int j = d - i;
            if ((i == 2 && j == 0) || (i == 0 && j == 2) || (i == 3 && j == 0) ||
                (i == 1 && j == 2))
                continue;
            low_ok = low_ok && is_zero(a.get(i, j));
        }
    low_ok = low_ok && is_zero(a.get(0, 0)) && is_zero(a.get(1, 0)) && is_zero(a.get(0, 1)) &&
             is_zero(a.get(0, 3)) && is_zero(a.get(2, 1)) && is_zero(a.get(1, 1));
    rep.check_flag("alpha-low-degree",
                   "a = 2X^2 + 2Y^2 + 3X^3 + 3XY^2 + O(4), all other coefficients through "
                   "degree 3 zero, exactly",
                   low_ok);

    bool parity_ok = true;
    for (int i = 0; i <= a.order(); ++i)
        for (int j = 1; i + j <= a.order(); j += 2) parity_ok = parity_ok && is_zero(a.get(i, j));
    rep.check_flag("alpha-even-symmetry",
                   "a(X, -Y) = a(X, Y): odd-in-Y coefficients vanish through degree " +
                       std::to_string(a.order()),
                   parity_ok);

    const auto mc = verify_minimum(s.alpha);
    rep.check_flag("alpha-minimum",
                   "a(0,0) = 0, grad a(0,0) = 0, Hessian = diag(4, 4) exactly",
                   mc.center_zero && mc.gradient_zero && mc.hessian_ok);

    const auto pde = alpha_pde_residuals(s.alpha, s.prof);
    rep.check_flag("alpha-residual-series",
                   "a_X - F(X, a) = 0 and (a_Y)^2 - G(X, a) = 0 coefficientwise",
                   pde.radial.valuation() == -1 && pde.vertical.valuation() == -1,
                   "through total degree " + std::to_string(pde.radial.order()));

    if (cfg.order < 12) {
        rep.skip("alpha-residual-grid", "floating-point residuals on the standard grid",
                 "series order too low for the pinned tolerance");
        return;
    }
    double worst = 0;
    const int n = cfg.grid_n - 1;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const double x = 0.97 + 0.06 * i / n, y = -0.03 + 0.06 * j / n;
            const auto e = eval_alpha(s.alpha, x, y, 0.05);
            const auto p = eval_profiles(s.prof, x, e.a, 0.2);
            worst = std::max({worst, std::abs(e.a_x - p.F), std::abs(e.a_y * e.a_y - p.G)});
        }
    rep.check("alpha-residual-grid",
              "pointwise |a_X - F(X,a)| and |(a_Y)^2 - G(X,a)| on the standard grid", worst,
              1e-8, std::to_string(cfg.grid_n) + "x" + std::to_string(cfg.grid_n) + " grid");
}

// ----------------------------------------------------------------- field ---

struct FieldSweep {
    double euler = 0, swirl = 0, swirl_collar_worst = 0;
    double div = 0, energy = 0, bernoulli = 0, advect = 0, stream = 0;
    int points = 0, collar_skipped = 0;
};

// Residuals over the standard grid around the ring. The on-ring node is
// excluded everywhere; the swirl momentum additionally skips a collar where
// the swirl speed is conical (|u_phi| ~ distance to the ring) and centered
// stencils are invalid.
inline FieldSweep sweep_field(const FlowField& field, int grid_n, double h, int collar) {
    const double R = field.ring_radius();
    FieldSweep out;
    const int n = grid_n - 1;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const double rho = R * (0.97 + 0.06 * i / n), z = R * (-0.03 + 0.06 * j / n);
            const double r = std::hypot(rho - R, z);
            if (r < 0.25 * R * 0.06 / n) continue;  // the ring itself
            ++out.points;
            const auto res = field.residuals({rho, z}, h);
            const auto ids = field.identities({rho, z});
            out.euler = std::max({out.euler, std::abs(res.r_rho), std::abs(res.r_z)});
            if (r >= collar * h) {
                out.swirl = std::max(out.swirl, std::abs(res.r_phi));
            } else {
                out.swirl_collar_worst = std::max(out.swirl_collar_worst, std::abs(res.r_phi));
                ++out.collar_skipped;
            }
            out.div = std::max(out.div, std::abs(res.div));
            out.energy = std::max(out.energy, std::abs(ids.energy_dev));
            out.bernoulli = std::max(out.bernoulli, std::abs(ids.bernoulli_dev));
            out.advect = std::max(out.advect, std::abs(res.advect_p));
            out.stream = std::max(out.stream, std::abs(field.stream_identity_residual({rho, z}, h)));
        }
    return out;
}

inline void report_field(VerificationReport& rep, const Solutions& s, const RunConfig& cfg) {
    const char* names[7] = {"field-euler",    "field-swirl-momentum", "field-div",
                            "field-energy",   "field-bernoulli",      "field-pressure-advection",
                            "field-stream-identity"};
    const char* claims[7] = {
        "u_rho d_rho u_rho + u_z d_z u_rho - u_phi^2/rho + d_rho p = 0 and the z analogue",
        "u_rho d_rho u_phi + u_z d_z u_phi + u_rho u_phi / rho = 0 off the conical locus",
        "d_rho u_rho + u_rho/rho + d_z u_z = 0",
        "|u|^2 = 3p pointwise",
        "p + |u|^2/2 = (5/2) p pointwise",
        "u . grad p = 0",
        "(d_rr + d_zz - d_r/rho) a = 10 rho^2/R^4 - H'(a)/(2R^2)"};
    if (cfg.order < 12) {
        for (int k = 0; k < 7; ++k)
            rep.skip(names[k], claims[k], "series order too low for the pinned tolerances");
        rep.skip("field-scaling", "u scales as R^2 and p as R^4", "series order too low");
        return;
    }
    const double field_radius = cfg.radius > 0 ? cfg.radius : 0.1;
    FlowField field(s.alpha, s.prof, cfg.R, field_radius);
    const auto sw = sweep_field(field, cfg.grid_n, cfg.h, cfg.swirl_collar);
    const double tols[7] = {1e-6, 1e-6, 1e-8, 1e-9, 1e-9, 1e-8, 1e-6};
    const double vals[7] = {sw.euler, sw.swirl,     sw.div,   sw.energy,
                            sw.bernoulli, sw.advect, sw.stream};
    const std::string base = "grid " + std::to_string(cfg.grid_n) + "x" +
                             std::to_string(cfg.grid_n) + ", h = " + std::to_string(cfg.h);
    for (int k = 0; k < 7; ++k) {
        std::string note = base;
        if (k == 1)
            note += ", collar " + std::to_string(cfg.swirl_collar) + "h skipped " +
                    std::to_string(sw.collar_skipped) + " nodes (worst inside " +
                    std::to_string(sw.swirl_collar_worst) + ")";
        rep.check(names[k], claims[k], vals[k], tols[k], note);
    }

    // pure rescaling: doubling or halving R multiplies u by R^2 and p by R^4
    double scale_dev = 0;
    for (const double Rs : {0.5, 2.0}) {
        FlowField fs(s.alpha, s.prof, Rs, field_radius);
        for (const auto [X, Y] : {std::pair{0.011, -0.007}, {-0.019, 0.013}, {0.0, 0.021}}) {
            const auto a = field.sample({cfg.R * (1 + X), cfg.R * Y});
            const auto b = fs.sample({Rs * (1 + X), Rs * Y});
            const double cu = Rs * Rs / (cfg.R * cfg.R), cp = cu * cu;
            scale_dev = std::max({scale_dev, std::abs(b.u_rho - cu * a.u_rho),
                                  std::abs(b.u_phi - cu * a.u_phi),
                                  std::abs(b.u_z - cu * a.u_z), std::abs(b.p - cp * a.p)});
        }
    }
    rep.check("field-scaling", "u scales as R^2 and p as R^4 under rescaling the ring", scale_dev,
              1e-12, "checked at R = 1/2 and R = 2 against R = 1");
}

// ------------------------------------------------------------ localization ---

struct LocalizedSweep {
    double euler = 0, div = 0, div_straddle = 0, energy_dev = 0;
    int points = 0, straddle_points = 0;
};

// Residuals of the modulated field over the chart box plus targeted stencils
// around both support surfaces (p = eps and p = 2 eps) on a fan of rays.
inline LocalizedSweep sweep_localized(const LocalizedFlow& lf, int grid_n, double h,
                                      int angles = 32) {
    const auto& field = lf.base();
    const double R = field.ring_radius(), rc = field.chart_radius();
    const double lo_p = lf.bump().support_lo(), hi_p = lf.bump().support_hi();
    LocalizedSweep out;
    const auto visit = [&](CylPoint q, bool straddle) {
        const auto res = lf.residuals(q, h);
        out.euler = std::max(
            {out.euler, std::abs(res.r_rho), std::abs(res.r_phi), std::abs(res.r_z)});
        out.div = std::max(out.div, std::abs(res.div));
        if (straddle) {
            out.div_straddle = std::max(out.div_straddle, std::abs(res.div));
            ++out.straddle_points;
        }
        const auto m = lf.sample(q);
        if (m.in_support) {
            const auto raw = field.sample(q);
            const double w = lf.bump().omega(raw.p);
            const double usq = m.u_rho * m.u_rho + m.u_phi * m.u_phi + m.u_z * m.u_z;
            out.energy_dev = std::max(out.energy_dev, std::abs(usq - 3 * raw.p * w * w));
        }
        ++out.points;
    };
    const int n = grid_n - 1;
    const double margin = 2.5 * h / (R * rc);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const double X = rc * (-1 + 2.0 * i / n) * (1 - margin);
            const double Y = rc * (-1 + 2.0 * j / n) * (1 - margin);
            visit({R * (1 + X), R * Y}, false);
        }
    for (int k = 0; k < angles; ++k) {
        const double th = 2 * M_PI * k / angles;
        const double cs = std::cos(th), sn = std::sin(th);
        const double rlim = 0.995 * rc / std::max(std::abs(cs), std::abs(sn));
        const auto at = [&](double r) { return CylPoint{R * (1 + r * cs), R * r * sn}; };
        for (const double level : {lo_p, hi_p}) {
            double lo = 0.0, hi = rlim;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                (field.pressure(at(mid)) < level ? lo : hi) = mid;
            }
            for (int off = -2; off <= 2; ++off) visit(at(hi + off * h / R), true);
        }
    }
    return out;
}

struct FlatnessProbe {
    std::vector<double> inside_d1, inside_d2;  // approaching the outer surface
    double outside_d1 = 0, outside_d2 = 0;     // fully beyond it
};

// First and second radial finite differences of the modulated speed near the
// outer support surface along one ray.
inline FlatnessProbe boundary_flatness(const LocalizedFlow& lf, double angle, double h) {
    const auto& field = lf.base();
    const double R = field.ring_radius(), rc = field.chart_radius();
    const double cs = std::cos(angle), sn = std::sin(angle);
    const double rlim = 0.995 * rc / std::max(std::abs(cs), std::abs(sn));
    const auto at = [&](double r) { return CylPoint{R * (1 + r * cs), R * r * sn}; };
    double lo = 0.0, hi = rlim;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (field.pressure(at(mid)) < lf.bump().support_hi() ? lo : hi) = mid;
    }
    const auto probe = [&](double r, double& d1, double& d2) {
        const double f2p = speed(lf.sample(at(r + 2 * h / R))),
                     f1p = speed(lf.sample(at(r + h / R))), f0 = speed(lf.sample(at(r))),
                     f1m = speed(lf.sample(at(r - h / R))),
                     f2m = speed(lf.sample(at(r - 2 * h / R)));
        d1 = std::abs((-f2p + 8 * f1p - 8 * f1m + f2m) / (12 * h));
        d2 = std::abs((-f2p + 16 * f1p - 30 * f0 + 16 * f1m - f2m) / (12 * h * h));
    };
    FlatnessProbe out;
    for (const int k : {32, 16, 8, 4, 2}) {
        double d1 = 0, d2 = 0;
        probe(hi - k * h / R, d1, d2);
        out.inside_d1.push_back(d1);
        out.inside_d2.push_back(d2);
    }
    probe(hi + 3 * h / R, out.outside_d1, out.outside_d2);
    return out;
}

inline void report_localized(VerificationReport& rep, const LocalizedFlow& lf,
                             const RunConfig& cfg) {
    const auto sw = sweep_localized(lf, cfg.grid_n, cfg.h_mod);
    const std::string base = "grid + " + std::to_string(sw.straddle_points) +
                             " straddling stencils, h = " + std::to_string(cfg.h_mod);
    rep.check("localized-euler", "(u~ . grad) u~ + grad p~ = 0 including across both support "
                                 "surfaces",
              sw.euler, 1e-6, base);
    rep.check("localized-div", "div u~ = 0 including across both support surfaces", sw.div, 1e-6,
              base);
    rep.check("localized-div-straddle", "div u~ = 0 on stencils straddling p = eps and p = 2 eps",
              sw.div_straddle, 1e-8, base);
    rep.check("localized-energy-pointwise", "|u~|^2 = 3 p w^2(p) at every in-support sample",
              sw.energy_dev, 1e-12, std::to_string(sw.points) + " samples");

    // plateau values of the cut pressure on both complement components
    const auto& field = lf.base();
    const double R = field.ring_radius(), rc = field.chart_radius();
    const double tm = lf.bump().total_mass();
    bool plateau_ok = true;
    for (int k = 0; k < 16; ++k) {
        const double th = 2 * M_PI * k / 16;
        double lo = 0.0, hi = 0.995 * rc / std::max(std::abs(std::cos(th)), std::abs(std::sin(th)));
        const auto at = [&](double r) {
            return CylPoint{R * (1 + r * std::cos(th)), R * r * std::sin(th)};
        };
        const double rout = hi;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (field.pressure(at(mid)) < lf.bump().support_lo() ? lo : hi) = mid;
        }
        const auto core = lf.sample(at(0.5 * lo));
        plateau_ok = plateau_ok && core.p == -tm && speed(core) == 0 && !core.in_support;
        const auto outer = lf.sample(at(rout));
        plateau_ok = plateau_ok && outer.p == 0 && speed(outer) == 0 && !outer.in_support;
    }
    const auto far1 = lf.sample({10 * R, 0}), far2 = lf.sample({R, 5 * R});
    plateau_ok = plateau_ok && far1.p == 0 && speed(far1) == 0 && far2.p == 0 && speed(far2) == 0;
    rep.check_flag("localized-plateaus",
                   "p~ = -total_mass with u~ = 0 on the core component, p~ = 0 with u~ = 0 "
                   "beyond the outer surface and outside the chart",
                   plateau_ok, "16 rays plus far-exterior points");

    const auto ext = measure_support(lf);
    const double beyond = max_speed_beyond(lf, 1.0001 * ext.r_max);
    rep.check("localized-outside-zero",
              "u~ vanishes identically outside the measured support torus",
              std::max(ext.max_speed_outside, beyond), 0.0,
              "support radius " + std::to_string(ext.r_max) + " from " +
                  std::to_string(ext.angles) + " rays");

    double d1_near = 0, d2_near = 0, d_out = 0;
    std::string decay;
    for (const double th : {M_PI, M_PI / 2}) {
        const auto fp = boundary_flatness(lf, th, cfg.h_mod);
        d1_near = std::max(d1_near, fp.inside_d1.back());
        d2_near = std::max(d2_near, fp.inside_d2.back());
        d_out = std::max({d_out, fp.outside_d1, fp.outside_d2});
        if (!decay.empty()) decay += " | ";
        for (size_t i = 0; i < fp.inside_d1.size(); ++i) {
            char b[32];
            std::snprintf(b, sizeof b, "%.1e", fp.inside_d1[i]);
            decay += (i ? " " : "d1: ") + std::string(b);
        }
    }
    rep.check("localized-boundary-flatness",
              "first and second radial differences of |u~| vanish approaching the outer "
              "support surface and equal zero beyond it",
              std::max({d1_near, d2_near, d_out}), 1e-10,
              "at 32h..2h inside: " + decay);
}

// Support radii across a halving ladder of eps; the bounding radius carries
// the conical first-order correction, the vertical half-width is the clean
// sqrt(eps) witness.
inline void report_support_scaling(VerificationReport& rep, const Solutions& s,
                                   const RunConfig& cfg) {
    const double eps_ladder[3] = {4 * cfg.eps, 2 * cfg.eps, cfg.eps};
    double rmax[3], rvert[3];
    std::string note;
    for (int k = 0; k < 3; ++k) {
        const double eps = eps_ladder[k];
        const double rc =
            cfg.radius > 0 ? cfg.radius : chart_radius_for(s.alpha, eps, cfg.R);
        FlowField field(s.alpha, s.prof, cfg.R, rc);
        LocalizedFlow lf(field, make_bump(field, eps));
        const auto ext = measure_support(lf);
        rmax[k] = ext.r_max;
        double lo = 0, hi = 0.995 * rc;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (field.pressure({cfg.R, cfg.R * mid}) < lf.bump().support_hi() ? lo : hi) = mid;
        }
        rvert[k] = cfg.R * hi;
        char b[96];
        std::snprintf(b, sizeof b, "eps %.4g: r %.5f rz %.5f; ", eps, rmax[k], rvert[k]);
        note += b;
    }
    const double s2 = std::sqrt(2.0);
    const double dev_bound = std::max(std::abs(rmax[0] / rmax[1] / s2 - 1),
                                      std::abs(rmax[1] / rmax[2] / s2 - 1));
    const double dev_vert = std::max(std::abs(rvert[0] / rvert[1] / s2 - 1),
                                     std::abs(rvert[1] / rvert[2] / s2 - 1));
    rep.check("support-shrink",
              "halving eps shrinks the measured support radius by sqrt(2), up to the "
              "first-order correction of the bounding direction",
              dev_bound, 0.12, note);
    rep.check("support-shrink-vertical",
              "halving eps shrinks the vertical support half-width by sqrt(2)", dev_vert, 0.02,
              note);
}

// ------------------------------------------------------------- integrals ---

inline void report_integrals(VerificationReport& rep, const LocalizedFlow& lf,
                             const RunConfig& cfg) {
    const auto vc = virial_integral(lf);
    char b[160];
    std::snprintf(b, sizeof b, "I = %.3e / %.3e / %.3e on n/2n/4n grids, kinetic %.3e",
                  vc.coarse, vc.mid, vc.fine, vc.kinetic);
    rep.check("virial-identity", "integral of |u~|^2 + 3 p~ over space vanishes",
              std::abs(vc.fine), 1e-3 * vc.kinetic, b);
    rep.check_flag("virial-convergence",
                   "the virial integral converges to 0 at order 2 or better under grid "
                   "refinement",
                   vc.observed_order >= 2.0,
                   "observed order " + std::to_string(vc.observed_order));

    const auto vol = volume_linearity(lf.base(), cfg.eps / 4, 2 * cfg.eps, 9);
    const double kappa = vol.samples.empty() ? 0 : vol.samples.back().volume /
                                                       vol.samples.back().c;
    std::snprintf(b, sizeof b, "9 levels in [eps/4, 2 eps], V(c)/c about %.6g", kappa);
    rep.check("volume-linearity",
              "the sublevel volume of the pressure is linear: V(c)/c constant to 1%",
              vol.spread, 0.01, b);
}

// ---------------------------------------------------------------- export ---

inline void report_export(VerificationReport& rep, const LocalizedFlow& lf,
                          const RunConfig& cfg) {
    const auto rows = sample_grid(lf, cfg.grid_n);
    const size_t expect = static_cast<size_t>(cfg.grid_n) * cfg.grid_n;
    rep.check_flag("export-row-count",
                   std::to_string(cfg.grid_n) + "x" + std::to_string(cfg.grid_n) +
                       " grid emits " + std::to_string(expect) + " data rows plus the header",
                   rows.size() == expect);
    const auto mem = verify_grid_rows(rows, lf.bump().eps());
    rep.check("export-energy-identity",
              "every in-support row satisfies |u~|^2 = 3 p w^2(p)", mem.max_energy_dev, 1e-10,
              std::to_string(mem.in_support) + " in-support rows");
    rep.check("export-outside-zero", "rows outside the support carry zero modulated velocity",
              mem.max_outside_speed, 0.0,
              std::to_string(mem.rows - mem.in_support) + " outside rows");

    if (cfg.out_dir.empty()) return;
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const std::string csv = (fs::path(cfg.out_dir) / "field_grid.csv").string();
    write_grid_csv(csv, rows);
    write_grid_vtk((fs::path(cfg.out_dir) / "field_raw.vtk").string(), rows, cfg.grid_n, false);
    write_grid_vtk((fs::path(cfg.out_dir) / "field_modulated.vtk").string(), rows, cfg.grid_n,
                   true);
    const auto back = read_grid_csv(csv);
    const auto disk = verify_grid_rows(back, lf.bump().eps());
    rep.check_flag("export-roundtrip",
                   "re-reading the exported grid reproduces the in-memory verification result",
                   back.size() == rows.size() && disk.passed() == mem.passed() &&
                       disk.in_support == mem.in_support,
                   "wrote " + csv);
}

// ------------------------------------------------------------------ suite ---

inline VerificationReport run_suite(const RunConfig& cfg) {
    validate(cfg);
    VerificationReport rep;
    const auto s = solve_chain(cfg.order);
    report_series(rep, s);
    report_profiles(rep, s.prof);
    report_alpha(rep, s, cfg);
    report_field(rep, s, cfg);
    if (cfg.order < 12) {
        const char* sections[] = {"localized", "support-scaling", "integrals", "export"};
        for (const auto* sec : sections)
            rep.skip(std::string(sec) + "-section", std::string(sec) + " checks",
                     "series order too low for the pinned tolerances");
        return rep;
    }
    const double rc = cfg.radius > 0 ? cfg.radius : chart_radius_for(s.alpha, cfg.eps, cfg.R);
    FlowField field(s.alpha, s.prof, cfg.R, rc);
    LocalizedFlow lf(field, make_bump(field, cfg.eps));
    report_localized(rep, lf, cfg);
    report_support_scaling(rep, s, cfg);
    report_integrals(rep, lf, cfg);
    report_export(rep, lf, cfg);
    if (!cfg.out_dir.empty())
        rep.write_json((std::filesystem::path(cfg.out_dir) / "report.json").string());
    return rep;
}

}  // namespace ringflow
