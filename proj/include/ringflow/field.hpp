// Axisymmetric steady flow assembled from the local profile a(X, Y):
//
//   p(rho, z) = a(rho/R, z/R) R^4 / 4
//   u_rho = p_z / rho,   u_z = -p_rho / rho,   u_phi = (R^3/4) sqrt(H(a)) / rho
//
// in cylindrical coordinates (rho, phi, z), on the trusted box
// |rho/R - 1| <= radius, |z/R| <= radius. The verification helpers compute
// residuals of the steady Euler equations and of the stream-function
// identity with fourth-order central differences.
#pragma once

#include <array>
#include <cmath>

#include "alpha.hpp"

namespace ringflow {

struct CylPoint {
    double rho, z;
};

struct FieldSample {
    double u_rho, u_phi, u_z;
    double p;
    double a;    // local profile value
    double err;  // series truncation estimate for a
};

// Deliberate wrongness injections; the verification suite uses them to show
// its checks can fail.
struct FieldTweaks {
    double swirl_scale = 1.0;
    double pressure_scale = 1.0;
};

struct FlowResiduals {
    double r_rho, r_phi, r_z;  // steady Euler momentum residuals
    double div;                // velocity divergence
    double advect_p;           // u . grad p
};

// Fourth-order central-difference residuals of the steady Euler system for
// any sampler mapping CylPoint to a struct with u_rho, u_phi, u_z, p.
template <class Sampler>
FlowResiduals euler_residual_stencil(Sampler&& sample, CylPoint q, double h) {
    const auto s = sample(q);
    const auto rp2 = sample(CylPoint{q.rho + 2 * h, q.z}), rp1 = sample(CylPoint{q.rho + h, q.z});
    const auto rm1 = sample(CylPoint{q.rho - h, q.z}), rm2 = sample(CylPoint{q.rho - 2 * h, q.z});
    const auto zp2 = sample(CylPoint{q.rho, q.z + 2 * h}), zp1 = sample(CylPoint{q.rho, q.z + h});
    const auto zm1 = sample(CylPoint{q.rho, q.z - h}), zm2 = sample(CylPoint{q.rho, q.z - 2 * h});
    const auto d = [h](double a2, double a1, double b1, double b2) {
        return (-a2 + 8 * a1 - 8 * b1 + b2) / (12 * h);
    };
    const double dur_r = d(rp2.u_rho, rp1.u_rho, rm1.u_rho, rm2.u_rho);
    const double dup_r = d(rp2.u_phi, rp1.u_phi, rm1.u_phi, rm2.u_phi);
    const double duz_r = d(rp2.u_z, rp1.u_z, rm1.u_z, rm2.u_z);
    const double dp_r = d(rp2.p, rp1.p, rm1.p, rm2.p);
    const double dur_z = d(zp2.u_rho, zp1.u_rho, zm1.u_rho, zm2.u_rho);
    const double dup_z = d(zp2.u_phi, zp1.u_phi, zm1.u_phi, zm2.u_phi);
    const double duz_z = d(zp2.u_z, zp1.u_z, zm1.u_z, zm2.u_z);
    const double dp_z = d(zp2.p, zp1.p, zm1.p, zm2.p);
    FlowResiduals r;
    r.r_rho = s.u_rho * dur_r + s.u_z * dur_z - s.u_phi * s.u_phi / q.rho + dp_r;
    r.r_phi = s.u_rho * dup_r + s.u_z * dup_z + s.u_rho * s.u_phi / q.rho;
    r.r_z = s.u_rho * duz_r + s.u_z * duz_z + dp_z;
    r.div = dur_r + s.u_rho / q.rho + duz_z;
    r.advect_p = s.u_rho * dp_r + s.u_z * dp_z;
    return r;
}

class FlowField {
  public:
    FlowField(const AlphaSolution& alpha, const ProfileSet& profiles, double R, double radius,
              FieldTweaks tweaks = {})
        : alpha_(alpha),
          H_d_(profiles.H_d),
          Hp_d_(profiles.Hp_d),
          R_(R),
          radius_(radius),
          tweaks_(tweaks) {
        if (!(R > 0)) throw config_error("FlowField: R must be positive");
        if (!(radius > 0) || !(radius < 1))
            throw config_error("FlowField: radius must lie in (0, 1)");
    }

    double ring_radius() const { return R_; }
    double chart_radius() const { return radius_; }

    bool in_chart(CylPoint q) const {
        return std::max(std::abs(q.rho / R_ - 1.0), std::abs(q.z / R_)) <=
               radius_ * (1 + 1e-12);
    }

    FieldSample sample(CylPoint q) const {
        if (!in_chart(q)) throw std::domain_error("FlowField::sample: outside trusted box");
        const double X = q.rho / R_ - 1.0, Y = q.z / R_;
        const auto [a, err] = alpha_.s_d.eval_with_error(X, Y);
        const double q3 = 0.25 * R_ * R_ * R_;
        const double p_rho = q3 * alpha_.sx_d.eval(X, Y);
        const double p_z = q3 * alpha_.sy_d.eval(X, Y);
        // float noise can push H(a) epsilon-negative right at the ring
        const double b = tweaks_.swirl_scale * q3 * std::sqrt(std::max(H_d_.eval(a), 0.0));
        return {p_z / q.rho,       b / q.rho, -p_rho / q.rho,
                tweaks_.pressure_scale * q3 * R_ * a, a,        err};
    }

    double pressure(CylPoint q) const { return sample(q).p; }
    double profile_value(CylPoint q) const { return sample(q).a; }

    FlowResiduals residuals(CylPoint q, double h) const {
        return euler_residual_stencil([this](CylPoint w) { return sample(w); }, q, h);
    }

    struct PointIdentities {
        double energy_dev;     // |u|^2 - 3p
        double bernoulli_dev;  // (p + |u|^2/2) - (5/2) p
    };

    PointIdentities identities(CylPoint q) const {
        const auto s = sample(q);
        const double usq = s.u_rho * s.u_rho + s.u_phi * s.u_phi + s.u_z * s.u_z;
        return {usq - 3 * s.p, (s.p + usq / 2) - 2.5 * s.p};
    }

    // Residual of  (d_rr + d_zz - (1/rho) d_r) Psi = 10 rho^2/R^4 - H'(Psi)/(2R^2)
    // for the stream function Psi = a(rho/R, z/R).
    double stream_identity_residual(CylPoint q, double h) const {
        const auto av = [this](CylPoint w) { return sample(w).a; };
        const double a0 = av(q);
        const double arp2 = av({q.rho + 2 * h, q.z}), arp1 = av({q.rho + h, q.z});
        const double arm1 = av({q.rho - h, q.z}), arm2 = av({q.rho - 2 * h, q.z});
        const double azp2 = av({q.rho, q.z + 2 * h}), azp1 = av({q.rho, q.z + h});
        const double azm1 = av({q.rho, q.z - h}), azm2 = av({q.rho, q.z - 2 * h});
        const double a_r = (-arp2 + 8 * arp1 - 8 * arm1 + arm2) / (12 * h);
        const double a_rr = (-arp2 + 16 * arp1 - 30 * a0 + 16 * arm1 - arm2) / (12 * h * h);
        const double a_zz = (-azp2 + 16 * azp1 - 30 * a0 + 16 * azm1 - azm2) / (12 * h * h);
        const double lhs = a_rr + a_zz - a_r / q.rho;
        const double R2 = R_ * R_;
        const double rhs = 10 * q.rho * q.rho / (R2 * R2) - Hp_d_.eval(a0) / (2 * R2);
        return lhs - rhs;
    }

  private:
    AlphaSolution alpha_;
    Series1D<double> H_d_, Hp_d_;
    double R_, radius_;
    FieldTweaks tweaks_;
};

}  // namespace ringflow
