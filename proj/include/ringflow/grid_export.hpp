// Field grid export: CSV with raw and modulated columns side by side, legacy
// VTK structured grids for visualization, and a file-level re-verification
// used for round-trip checks.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "localize.hpp"

namespace ringflow {

inline constexpr const char* kGridCsvHeader =
    "rho,z,u_rho,u_phi,u_z,p,u_rho_t,u_phi_t,u_z_t,p_t";

struct GridRow {
    double rho, z;
    double u_rho, u_phi, u_z, p;          // unmodulated field
    double u_rho_t, u_phi_t, u_z_t, p_t;  // compactly supported field
};

// Sample both fields on an n x n grid spanning the trusted box. Rows run with
// rho varying fastest, matching the VTK point order.
inline std::vector<GridRow> sample_grid(const LocalizedFlow& lf, int n) {
    if (n < 2) throw config_error("sample_grid: need at least a 2x2 grid");
    const auto& field = lf.base();
    const double R = field.ring_radius(), rc = field.chart_radius();
    std::vector<GridRow> rows;
    rows.reserve(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        const double z = R * (-rc + 2 * rc * j / (n - 1));
        for (int i = 0; i < n; ++i) {
            const double rho = R * (1 - rc + 2 * rc * i / (n - 1));
            const auto raw = field.sample({rho, z});
            const auto mod = lf.sample({rho, z});
            rows.push_back({rho, z, raw.u_rho, raw.u_phi, raw.u_z, raw.p, mod.u_rho, mod.u_phi,
                            mod.u_z, mod.p});
        }
    }
    return rows;
}

inline void write_grid_csv(const std::string& path, const std::vector<GridRow>& rows) {
    std::ofstream f(path);
    if (!f) throw config_error("cannot open for writing: " + path);
    f << kGridCsvHeader << "\n";
    char buf[512];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf,
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.rho, r.z,
                      r.u_rho, r.u_phi, r.u_z, r.p, r.u_rho_t, r.u_phi_t, r.u_z_t, r.p_t);
        f << buf;
    }
    if (!f) throw config_error("write failed: " + path);
}

// Legacy-VTK structured grid of one field on the meridian half-plane; the
// point coordinates are (rho, z, 0) and the vector data carries the swirl
// component in the third slot.
inline void write_grid_vtk(const std::string& path, const std::vector<GridRow>& rows, int n,
                           bool modulated) {
    if (static_cast<size_t>(n) * n != rows.size())
        throw config_error("write_grid_vtk: row count does not match the grid");
    std::ofstream f(path);
    if (!f) throw config_error("cannot open for writing: " + path);
    f << "# vtk DataFile Version 3.0\n"
      << (modulated ? "ring flow, compact support" : "ring flow") << "\nASCII\n"
      << "DATASET STRUCTURED_GRID\nDIMENSIONS " << n << " " << n << " 1\nPOINTS "
      << rows.size() << " double\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g 0\n", r.rho, r.z);
        f << buf;
    }
    f << "POINT_DATA " << rows.size() << "\nVECTORS velocity double\n";
    for (const auto& r : rows) {
        if (modulated)
            std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", r.u_rho_t, r.u_z_t, r.u_phi_t);
        else
            std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", r.u_rho, r.u_z, r.u_phi);
        f << buf;
    }
    f << "SCALARS pressure double 1\nLOOKUP_TABLE default\n";
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g\n", modulated ? r.p_t : r.p);
        f << buf;
    }
    if (!f) throw config_error("write failed: " + path);
}

inline std::vector<GridRow> read_grid_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(f, line)) throw config_error("empty grid file: " + path);
    if (line != kGridCsvHeader) throw config_error("unexpected grid header: " + line);
    std::vector<GridRow> rows;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        double v[10];
        const char* s = line.c_str();
        char* end = nullptr;
        for (int k = 0; k < 10; ++k) {
            v[k] = std::strtod(s, &end);
            if (end == s || (k < 9 && *end != ','))
                throw config_error("malformed grid row: " + line);
            s = end + 1;
        }
        rows.push_back(
            {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]});
    }
    return rows;
}

struct GridFileCheck {
    size_t rows = 0;
    size_t in_support = 0;           // rows whose raw pressure lies in the cutoff shell
    double max_energy_dev = 0;       // | |u~|^2 - 3 p w^2(p) | over in-support rows
    double max_outside_speed = 0;    // |u~| over rows outside the shell
    bool passed(double energy_tol = 1e-10) const {
        return max_energy_dev <= energy_tol && max_outside_speed == 0.0;
    }
};

// Re-derive the support classification from file contents alone: a row is in
// the support iff its raw pressure lies strictly inside (eps, 2 eps).
inline GridFileCheck verify_grid_rows(const std::vector<GridRow>& rows, double eps) {
    BumpProfile bump(eps);
    GridFileCheck out;
    out.rows = rows.size();
    for (const auto& r : rows) {
        const double usq_t = r.u_rho_t * r.u_rho_t + r.u_phi_t * r.u_phi_t + r.u_z_t * r.u_z_t;
        if (r.p > eps && r.p < 2 * eps) {
            ++out.in_support;
            const double w = bump.omega(r.p);
            out.max_energy_dev =
                std::max(out.max_energy_dev, std::abs(usq_t - 3 * r.p * w * w));
        } else {
            out.max_outside_speed = std::max(out.max_outside_speed, std::sqrt(usq_t));
        }
    }
    return out;
}

}  // namespace ringflow
