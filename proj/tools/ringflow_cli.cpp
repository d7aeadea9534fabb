// Command-line driver: solve the series chain, verify the flow at several
// levels, and export field grids. Exit codes: 0 all checks pass, 1 a
// verification check failed, 2 bad configuration, 3 internal solver failure.
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ringflow/suite.hpp"

using namespace ringflow;

namespace {

int emit(const VerificationReport& rep, bool json) {
    if (json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
    return rep.all_passed() ? 0 : 1;
}

int cmd_solve_psi(int order, bool json) {
    const auto sol = solve_psi(order);
    if (json) {
        nlohmann::json out;
        out["order"] = sol.order();
        auto arr = nlohmann::json::array();
        for (int k = 0; k <= sol.order(); ++k) arr.push_back(to_string(sol.series[k]));
        out["coefficients"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
    } else {
        for (int k = 0; k <= sol.order(); ++k)
            std::printf("c[%d] = %s\n", k, to_string(sol.series[k]).c_str());
    }
    return 0;
}

int cmd_verify_profiles(int order, bool json) {
    VerificationReport rep;
    const auto psi = solve_psi(order + 2);
    const auto prof = build_profiles(psi, order + 1);
    report_profiles(rep, prof);
    return emit(rep, json);
}

int cmd_solve_alpha(int order, bool json) {
    const auto s = solve_chain(order);
    const auto& a = s.alpha.series;
    if (json) {
        nlohmann::json out;
        out["order"] = a.order();
        auto arr = nlohmann::json::array();
        for (int i = 0; i <= a.order(); ++i)
            for (int j = 0; i + j <= a.order(); ++j)
                if (!is_zero(a.get(i, j)))
                    arr.push_back({{"i", i}, {"j", j}, {"value", to_string(a.get(i, j))}});
        out["coefficients"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
    } else {
        for (int i = 0; i <= a.order(); ++i)
            for (int j = 0; i + j <= a.order(); ++j)
                if (!is_zero(a.get(i, j)))
                    std::printf("a[%d][%d] = %s\n", i, j, to_string(a.get(i, j)).c_str());
    }
    return 0;
}

int cmd_eval_alpha(int order, double X, double Y, double radius, bool json) {
    const auto s = solve_chain(order);
    const auto e = eval_alpha(s.alpha, 1.0 + X, Y, radius);
    if (json) {
        nlohmann::json out{{"X", X}, {"Y", Y},     {"a", e.a},
                           {"a_X", e.a_x}, {"a_Y", e.a_y}, {"truncation", e.err}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("a(%.17g, %.17g) = %.17g\n", X, Y, e.a);
        std::printf("a_X = %.17g\na_Y = %.17g\ntruncation ~ %.3e\n", e.a_x, e.a_y, e.err);
    }
    return 0;
}

int cmd_verify_field(const RunConfig& cfg, bool json) {
    validate(cfg);
    VerificationReport rep;
    const auto s = solve_chain(cfg.order);
    report_field(rep, s, cfg);
    return emit(rep, json);
}

int cmd_verify_localized(const RunConfig& cfg, bool json) {
    validate(cfg);
    VerificationReport rep;
    const auto s = solve_chain(cfg.order);
    const double rc = cfg.radius > 0 ? cfg.radius : chart_radius_for(s.alpha, cfg.eps, cfg.R);
    FlowField field(s.alpha, s.prof, cfg.R, rc);
    LocalizedFlow lf(field, make_bump(field, cfg.eps));
    report_localized(rep, lf, cfg);
    report_support_scaling(rep, s, cfg);
    report_integrals(rep, lf, cfg);
    return emit(rep, json);
}

int cmd_grid_files(const RunConfig& cfg, bool modulated_only) {
    validate(cfg);
    if (cfg.out_dir.empty()) throw config_error("an output directory is required (--out)");
    const auto s = solve_chain(cfg.order);
    const double rc = cfg.radius > 0 ? cfg.radius : chart_radius_for(s.alpha, cfg.eps, cfg.R);
    FlowField field(s.alpha, s.prof, cfg.R, rc);
    LocalizedFlow lf(field, make_bump(field, cfg.eps));
    const auto rows = sample_grid(lf, cfg.grid_n);
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const auto csv = (fs::path(cfg.out_dir) / "field_grid.csv").string();
    write_grid_csv(csv, rows);
    std::printf("wrote %s (%zu rows)\n", csv.c_str(), rows.size());
    const auto vtk_mod = (fs::path(cfg.out_dir) / "field_modulated.vtk").string();
    write_grid_vtk(vtk_mod, rows, cfg.grid_n, true);
    std::printf("wrote %s\n", vtk_mod.c_str());
    if (!modulated_only) {
        const auto vtk_raw = (fs::path(cfg.out_dir) / "field_raw.vtk").string();
        write_grid_vtk(vtk_raw, rows, cfg.grid_n, false);
        std::printf("wrote %s\n", vtk_raw.c_str());
    }
    return 0;
}

int cmd_verify_all(const RunConfig& cfg, bool json) {
    const auto rep = run_suite(cfg);
    return emit(rep, json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"steady ring flow with compact support: series solvers, field assembly, "
                 "verification, export"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help message and exit");

    RunConfig cfg;
    bool json = false;
    double X = 0.0, Y = 0.0;

    const auto add_common = [&](CLI::App* c, bool with_eps) {
        c->add_option("--order", cfg.order, "series truncation order");
        c->add_option("--R", cfg.R, "ring radius");
        if (with_eps) c->add_option("--eps", cfg.eps, "cutoff shell parameter");
        c->add_option("--grid", cfg.grid_n, "grid resolution per side");
        c->add_option("--radius", cfg.radius, "chart radius override");
        c->add_flag("--json", json, "emit JSON instead of text");
    };

    auto* sp = app.add_subcommand("solve-psi", "print the exact profile series");
    sp->add_option("--order", cfg.order, "series truncation order");
    sp->add_flag("--json", json, "emit JSON instead of text");

    auto* vl2 = app.add_subcommand("verify-lemma2",
                                   "check the profile identities coefficientwise");
    vl2->add_option("--order", cfg.order, "series truncation order");
    vl2->add_flag("--json", json, "emit JSON instead of text");

    auto* sa = app.add_subcommand("solve-alpha", "print the exact pressure-shape series");
    sa->add_option("--order", cfg.order, "series truncation order");
    sa->add_flag("--json", json, "emit JSON instead of text");

    auto* ea = app.add_subcommand("eval-alpha", "evaluate the pressure shape at a chart point");
    ea->add_option("X", X, "radial chart coordinate rho/R - 1")->required();
    ea->add_option("Y", Y, "vertical chart coordinate z/R")->required();
    ea->add_option("--order", cfg.order, "series truncation order");
    ea->add_option("--radius", cfg.radius, "chart radius for the domain check");
    ea->add_flag("--json", json, "emit JSON instead of text");

    auto* vf = app.add_subcommand("verify-field", "finite-difference checks of the full flow");
    add_common(vf, false);
    vf->add_option("--h", cfg.h, "finite-difference step");

    auto* vloc = app.add_subcommand("verify-localized",
                                    "checks of the compactly supported flow and its integrals");
    add_common(vloc, true);
    vloc->add_option("--h", cfg.h_mod, "finite-difference step");

    auto* loc = app.add_subcommand("localize", "emit the modulated field grid");
    add_common(loc, true);
    loc->add_option("--out", cfg.out_dir, "output directory")->required();

    auto* eg = app.add_subcommand("export-grid", "write CSV and VTK grids of both fields");
    add_common(eg, true);
    eg->add_option("--out", cfg.out_dir, "output directory")->required();

    auto* va = app.add_subcommand("verify-all", "run the complete verification suite");
    add_common(va, true);
    va->add_option("--h", cfg.h, "finite-difference step for the unmodulated checks");
    va->add_option("--out", cfg.out_dir, "directory for grids and the JSON report");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->set_help_flag("--help", "print this help message and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sp->parsed()) return cmd_solve_psi(cfg.order, json);
        if (vl2->parsed()) return cmd_verify_profiles(cfg.order, json);
        if (sa->parsed()) return cmd_solve_alpha(cfg.order, json);
        if (ea->parsed())
            return cmd_eval_alpha(cfg.order, X, Y, cfg.radius > 0 ? cfg.radius : 0.44, json);
        if (vf->parsed()) return cmd_verify_field(cfg, json);
        if (vloc->parsed()) return cmd_verify_localized(cfg, json);
        if (loc->parsed()) return cmd_grid_files(cfg, true);
        if (eg->parsed()) return cmd_grid_files(cfg, false);
        if (va->parsed()) return cmd_verify_all(cfg, json);
    } catch (const config_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
    return 2;
}
