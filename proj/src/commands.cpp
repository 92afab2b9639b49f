// commands.cpp — command-line interface over the dephasing and speed limit library
#include "becdeph/commands.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "becdeph/dephasing.hpp"
#include "becdeph/errors.hpp"
#include "becdeph/output.hpp"
#include "becdeph/params_io.hpp"
#include "becdeph/qsl.hpp"
#include "becdeph/reservoir.hpp"
#include "becdeph/spectrum.hpp"
#include "becdeph/units.hpp"

namespace becdeph {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr double a_rubidium_m = 5.3e-9;  // natural scattering length the sweeps are scaled by

struct GlobalOpts {
    std::string config;
    std::string out;
    std::string format = "csv";
    double rel_tol = 1e-9;
    double t_max_s = 0.0;
    bool emit_plot = false;
};

// raw CLI strings for every physical parameter; empty means "not given"
struct ParamFlags {
    std::string preset;
    std::string m_A, m_B, m_AB, n3, a_B, a_AB;
    std::string a_perp_A, a_perp_B, a_z_A, a_z_B;
    std::string sigma, L, omega0;
    int dimension = -1;
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
    cmd->add_option("--preset", f.preset, "parameter preset: fig2 or fig3")
        ->check(CLI::IsMember({"fig2", "fig3"}));
    cmd->add_option("--dimension", f.dimension, "reservoir dimension 1, 2, or 3");
    cmd->add_option("--m_A", f.m_A, "impurity mass (kg)");
    cmd->add_option("--m_B", f.m_B, "reservoir atom mass (kg)");
    cmd->add_option("--m_AB", f.m_AB, "reduced mass (kg); derived when omitted");
    cmd->add_option("--n3", f.n3, "3D condensate density (m^-3)");
    cmd->add_option("--a_B", f.a_B, "boson-boson scattering length (m; nm suffix ok)");
    cmd->add_option("--a_AB", f.a_AB, "impurity-boson scattering length (m)");
    cmd->add_option("--a_perp_A", f.a_perp_A, "impurity transverse confinement (m)");
    cmd->add_option("--a_perp_B", f.a_perp_B, "reservoir transverse confinement (m)");
    cmd->add_option("--a_z_A", f.a_z_A, "impurity axial confinement (m)");
    cmd->add_option("--a_z_B", f.a_z_B, "reservoir axial confinement (m)");
    cmd->add_option("--sigma", f.sigma, "well width (m; nm suffix ok)");
    cmd->add_option("--L", f.L, "well separation (m; nm suffix ok)");
    cmd->add_option("--omega0", f.omega0, "bare qubit splitting (rad/s)");
}

PhysicalParams resolve_params(const ParamFlags& f, const GlobalOpts& g) {
    PhysicalParams p = default_params();
    if (f.preset == "fig3") p.sigma = 50e-9;  // fig2 is the default set itself
    if (!g.config.empty()) load_params_file(g.config, p);
    auto set = [&p](const char* key, const std::string& v) {
        if (!v.empty()) apply_param(p, key, v);
    };
    set("m_A", f.m_A);
    set("m_B", f.m_B);
    set("m_AB", f.m_AB);
    set("n3", f.n3);
    set("a_B", f.a_B);
    set("a_AB", f.a_AB);
    set("a_perp_A", f.a_perp_A);
    set("a_perp_B", f.a_perp_B);
    set("a_z_A", f.a_z_A);
    set("a_z_B", f.a_z_B);
    set("sigma", f.sigma);
    set("L", f.L);
    set("omega0", f.omega0);
    if (f.dimension > 0) p.dimension = f.dimension;

    p = with_reduced_mass(p);
    validate(p);
    if (auto warn = reduced_mass_warning(p)) std::cerr << "warning: " << *warn << "\n";
    double cap = p.dimension == 1 ? 1.0 : (p.dimension == 2 ? 2.0 : 3.0);
    if (p.a_B > cap * a_rubidium_m * (1.0 + 1e-12))
        std::cerr << "warning: a_B = " << p.a_B << " m exceeds the dilute-gas range (about "
                  << cap << " natural lengths in " << p.dimension << "D)\n";
    return p;
}

double seconds_to_internal(double seconds) { return seconds / UnitSystem{}.time_s(); }

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        size_t pos = 0;
        double v = std::stod(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw std::invalid_argument("not a number: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write to '" + path + "'");
    f << text;
}

void maybe_write_plot_script(const GlobalOpts& g, const std::string& data_path,
                             const std::string& ylabel, int ycol) {
    if (!g.emit_plot || g.out.empty()) return;
    std::ostringstream ss;
    ss << "set datafile separator ','\n"
       << "set logscale x\n"
       << "set xlabel 't (internal units)'\n"
       << "set ylabel '" << ylabel << "'\n"
       << "plot '" << fs::path(data_path).filename().string() << "' skip 1 using 1:" << ycol
       << " with lines title '" << ylabel << "'\n";
    write_text(g.out + ".gnuplot", ss.str());
}

ordered_json params_to_json(const PhysicalParams& p) {
    return ordered_json{{"m_A_kg", p.m_A},
                        {"m_B_kg", p.m_B},
                        {"m_AB_kg", p.m_AB},
                        {"n3_per_m3", p.n3},
                        {"a_B_m", p.a_B},
                        {"a_AB_m", p.a_AB},
                        {"a_perp_A_m", p.a_perp_A},
                        {"a_perp_B_m", p.a_perp_B},
                        {"a_z_A_m", p.a_z_A},
                        {"a_z_B_m", p.a_z_B},
                        {"sigma_m", p.sigma},
                        {"L_m", p.L},
                        {"omega0_rad_per_s", p.omega0},
                        {"dimension", p.dimension}};
}

std::vector<double> resolve_time_grid(const std::string& t_grid_csv, const ReservoirModel& r) {
    if (t_grid_csv.empty()) return default_time_grid(r);
    std::vector<double> grid = parse_double_list(t_grid_csv);
    for (double& t : grid) t = seconds_to_internal(t);
    return grid;
}

num::QuadratureSpec spec_from(const GlobalOpts& g) {
    num::QuadratureSpec spec;
    spec.rel_tol = g.rel_tol;
    return spec;
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_gamma(const GlobalOpts& g, const ParamFlags& pf, const std::string& t_grid_csv) {
    PhysicalParams si = resolve_params(pf, g);
    ReservoirModel r = reduce(to_internal(si));
    std::vector<double> grid = resolve_time_grid(t_grid_csv, r);
    std::vector<CurvePoint> curve = sample_curve(r, grid, spec_from(g));

    size_t n_ok = 0;
    for (const CurvePoint& p : curve) n_ok += p.ok ? 1 : 0;
    if (n_ok < curve.size())
        std::cerr << "warning: " << curve.size() - n_ok << " of " << curve.size()
                  << " grid points failed to converge\n";

    if (g.format == "json") {
        ordered_json rows = ordered_json::array();
        for (const CurvePoint& p : curve)
            rows.push_back(ordered_json{{"t_internal", p.t},
                                        {"t_si_seconds", p.t * UnitSystem{}.time_s()},
                                        {"gamma", p.gamma},
                                        {"gamma_dot", p.gamma_dot},
                                        {"err_gamma", p.err_gamma},
                                        {"err_gamma_dot", p.err_gamma_dot},
                                        {"ok", p.ok}});
        write_text(g.out, rows.dump(2) + "\n");
    } else {
        std::ostringstream ss;
        write_curve_csv(ss, curve, UnitSystem{}.time_s());
        write_text(g.out, ss.str());
        maybe_write_plot_script(g, g.out, "gamma", 3);
    }
    return n_ok == 0 ? 3 : 0;
}

int cmd_spectrum(const GlobalOpts& g, const ParamFlags& pf, const std::string& omega_grid_csv,
                 const std::string& regime_str, int points) {
    PhysicalParams si = resolve_params(pf, g);
    ReservoirModel r = reduce(to_internal(si));
    SpectralModel model = regime_str == "auto"
                              ? spectral_model(r)
                              : spectral_model(r, regime_str == "free" ? Regime::free_boson
                                                                       : Regime::interacting);

    std::vector<double> grid;
    if (!omega_grid_csv.empty()) {
        grid = parse_double_list(omega_grid_csv);
        for (double& om : grid) om *= UnitSystem{}.time_s();  // rad/s to internal
    } else {
        if (points < 2) throw std::invalid_argument("--points must be at least 2");
        for (int i = 0; i < points; ++i)
            grid.push_back(model.cutoff * std::pow(10.0, -4.0 + 5.0 * i / (points - 1.0)));
    }

    std::vector<SpectrumRow> rows;
    for (double om : grid) {
        SpectrumRow row;
        row.omega = om;
        row.j_exact = j_exact(r, om);
        row.j_asymptotic = j_asymptotic(model, om);
        row.ratio = row.j_asymptotic != 0.0 ? row.j_exact / row.j_asymptotic
                                            : std::numeric_limits<double>::quiet_NaN();
        rows.push_back(row);
    }

    OhmicityFit fit = fit_ohmicity(r, 1e-4 * model.cutoff, 1e-3 * model.cutoff, 40);
    ordered_json fit_json{
        {"regime", model.regime == Regime::free_boson ? "free" : "interacting"},
        {"model_exponent", model.exponent},
        {"model_prefactor_internal", model.prefactor},
        {"model_cutoff_internal", model.cutoff},
        {"fit_exponent", fit.exponent},
        {"classification", ohmicity_name(fit.kind)},
        {"fit_window_internal", {fit.omega_lo, fit.omega_hi}},
        {"fit_points", fit.points}};

    if (g.format == "json") {
        ordered_json doc;
        doc["model"] = fit_json;
        ordered_json jrows = ordered_json::array();
        for (const SpectrumRow& row : rows)
            jrows.push_back(ordered_json{{"omega_internal", row.omega},
                                         {"j_exact", row.j_exact},
                                         {"j_asymptotic", row.j_asymptotic},
                                         {"ratio", row.ratio}});
        doc["rows"] = jrows;
        write_text(g.out, doc.dump(2) + "\n");
        return 0;
    }
    std::ostringstream ss;
    write_spectrum_csv(ss, rows);
    write_text(g.out, ss.str());
    if (g.out.empty())
        std::cerr << fit_json.dump() << "\n";
    else
        write_text(g.out + ".fit.json", fit_json.dump(2) + "\n");
    maybe_write_plot_script(g, g.out, "J(omega)", 2);
    return 0;
}

int cmd_qfi(const GlobalOpts& g, const ParamFlags& pf, const QubitState& state,
            const std::string& t_grid_csv) {
    validate_state(state);
    PhysicalParams si = resolve_params(pf, g);
    ReservoirModel r = reduce(to_internal(si));
    std::vector<double> grid = resolve_time_grid(t_grid_csv, r);
    num::QuadratureSpec spec = spec_from(g);

    std::ostringstream ss;
    ordered_json jrows = ordered_json::array();
    if (g.format == "csv") ss << "t_internal,t_si_seconds,gamma,gamma_dot,qfi\n";
    for (double t : grid) {
        GammaResult gv = gamma(r, t, spec);
        GammaResult gd = gamma_dot(r, t, spec);
        double f = qfi(state, gv.value, gd.value);
        if (g.format == "csv")
            ss << fmt_g17(t) << ',' << fmt_g17(t * UnitSystem{}.time_s()) << ','
               << fmt_g17(gv.value) << ',' << fmt_g17(gd.value) << ',' << fmt_g17(f) << '\n';
        else
            jrows.push_back(ordered_json{{"t_internal", t},
                                         {"t_si_seconds", t * UnitSystem{}.time_s()},
                                         {"gamma", gv.value},
                                         {"gamma_dot", gd.value},
                                         {"qfi", f}});
    }
    write_text(g.out, g.format == "csv" ? ss.str() : jrows.dump(2) + "\n");
    return 0;
}

ordered_json qsl_result_json(const PhysicalParams& si, const QubitState& state,
                             const QslProblem& prob, const QslResult& res) {
    double time_s = UnitSystem{}.time_s();
    ordered_json doc;
    doc["params_si"] = params_to_json(si);
    doc["state"] = ordered_json{{"x", state.x}, {"y", state.y}, {"z", state.z}};
    doc["D_target"] = prob.distance;
    doc["reachable"] = res.reachable;
    if (res.reachable) {
        doc["tau_qsl_internal"] = res.tau;
        doc["tau_qsl_seconds"] = res.tau * time_s;
        doc["v_qsl_internal"] = res.speed;
        doc["v_qsl_per_second"] = res.speed / time_s;
    } else {
        doc["tau_qsl_internal"] = nullptr;
        doc["tau_qsl_seconds"] = "unreachable";
        doc["v_qsl_internal"] = nullptr;
        doc["v_qsl_per_second"] = nullptr;
    }
    doc["sup_dub"] = res.sup_dub;
    doc["achieved_distance"] = res.achieved;
    doc["solver_iterations"] = res.iterations;
    doc["t_max_internal"] = res.t_max_used;
    return doc;
}

int cmd_qsl(const GlobalOpts& g, const ParamFlags& pf, const QubitState& state, double distance) {
    PhysicalParams si = resolve_params(pf, g);
    QslProblem prob;
    prob.reservoir = reduce(to_internal(si));
    prob.state = state;
    prob.distance = distance;
    if (g.t_max_s > 0.0) prob.t_max = seconds_to_internal(g.t_max_s);
    QslResult res = solve_tau_qsl(prob, spec_from(g));

    if (g.format == "csv") {
        std::ostringstream ss;
        ss << "D_target,reachable,tau_internal,tau_seconds,v_qsl_internal,sup_dub,iterations\n"
           << fmt_g17(prob.distance) << ',' << (res.reachable ? "true" : "false") << ','
           << fmt_g17(res.tau) << ',' << fmt_g17(res.tau * UnitSystem{}.time_s()) << ','
           << fmt_g17(res.speed) << ',' << fmt_g17(res.sup_dub) << ',' << res.iterations
           << '\n';
        write_text(g.out, ss.str());
    } else {
        write_text(g.out, qsl_result_json(si, state, prob, res).dump(2) + "\n");
    }
    return 0;
}

struct SweepRow {
    double value = 0.0;
    std::string status = "error";
    QslResult res;
    std::string message;
};

SweepRow sweep_one(PhysicalParams si, const std::string& var, double value, double distance,
                   const QubitState& state, double t_max_internal,
                   const num::QuadratureSpec& spec) {
    SweepRow row;
    row.value = value;
    try {
        if (var == "a_B") si.a_B = value;
        else if (var == "sigma") si.sigma = value;
        else if (var == "L") si.L = value;
        else if (var == "dimension") si.dimension = static_cast<int>(value);
        else if (var == "distance") distance = value;
        else throw std::invalid_argument("unknown sweep variable '" + var + "'");
        si = with_reduced_mass(si);
        validate(si);
        QslProblem prob;
        prob.reservoir = reduce(to_internal(si));
        prob.state = state;
        prob.distance = distance;
        prob.t_max = t_max_internal;
        row.res = solve_tau_qsl(prob, spec);
        row.status = row.res.reachable ? "ok" : "unreachable";
    } catch (const std::exception& e) {
        row.status = "error";
        row.message = e.what();
    }
    return row;
}

int cmd_sweep(const GlobalOpts& g, const ParamFlags& pf, const std::string& var,
              const std::string& values_csv, double distance, const QubitState& state) {
    validate_state(state);
    if (var != "distance" && distance < 0.0)
        throw std::invalid_argument("--distance is required for this sweep");
    PhysicalParams si = resolve_params(pf, g);
    std::vector<double> values = parse_double_list(values_csv);
    double t_max_internal = g.t_max_s > 0.0 ? seconds_to_internal(g.t_max_s) : 0.0;
    num::QuadratureSpec spec = spec_from(g);

    std::vector<std::future<SweepRow>> jobs;
    for (double v : values)
        jobs.push_back(std::async(std::launch::async, sweep_one, si, var, v, distance, state,
                                  t_max_internal, spec));

    std::vector<SweepRow> rows;
    for (auto& job : jobs) rows.push_back(job.get());

    size_t n_err = 0;
    for (const SweepRow& row : rows) {
        if (row.status == "error") {
            ++n_err;
            std::cerr << "warning: " << var << " = " << row.value << ": " << row.message << "\n";
        }
    }

    double time_s = UnitSystem{}.time_s();
    if (g.format == "json") {
        ordered_json jrows = ordered_json::array();
        for (const SweepRow& row : rows) {
            ordered_json j{{"variable", var}, {"value", row.value}, {"status", row.status}};
            if (row.status == "ok") {
                j["tau_internal"] = row.res.tau;
                j["tau_seconds"] = row.res.tau * time_s;
                j["v_qsl_internal"] = row.res.speed;
            }
            j["sup_dub"] = row.res.sup_dub;
            j["iterations"] = row.res.iterations;
            if (!row.message.empty()) j["message"] = row.message;
            jrows.push_back(j);
        }
        write_text(g.out, jrows.dump(2) + "\n");
    } else {
        std::ostringstream ss;
        ss << "variable,value,status,tau_internal,tau_seconds,v_qsl_internal,sup_dub,iterations\n";
        for (const SweepRow& row : rows)
            ss << var << ',' << fmt_g17(row.value) << ',' << row.status << ','
               << fmt_g17(row.res.tau) << ',' << fmt_g17(row.res.tau * time_s) << ','
               << fmt_g17(row.res.speed) << ',' << fmt_g17(row.res.sup_dub) << ','
               << row.res.iterations << '\n';
        write_text(g.out, ss.str());
    }
    return n_err == rows.size() ? 3 : 0;
}

// ---- reproduce bundles -----------------------------------------------------

std::string iso_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

void write_file(const fs::path& dir, const std::string& name, const std::string& text,
                std::vector<std::string>& files) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write to '" + (dir / name).string() + "'");
    f << text;
    files.push_back(name);
}

std::string curve_csv_text(const ReservoirModel& r, const std::vector<double>& grid,
                           const num::QuadratureSpec& spec) {
    std::ostringstream ss;
    write_curve_csv(ss, sample_curve(r, grid, spec), UnitSystem{}.time_s());
    return ss.str();
}

void reproduce_fig2(const fs::path& dir, const num::QuadratureSpec& spec,
                    std::vector<std::string>& files) {
    PhysicalParams base = default_params();
    std::vector<double> grid;
    for (int d = 1; d <= 3; ++d) {
        for (int interacting = 0; interacting <= 1; ++interacting) {
            PhysicalParams si = base;
            si.dimension = d;
            si.a_B = interacting ? base.a_B : 0.0;
            ReservoirModel r = reduce(to_internal(si));
            if (grid.empty()) grid = default_time_grid(r);  // sigma is shared, so is the grid
            std::string name = "gamma_" + std::to_string(d) + "d_" +
                               (interacting ? "interacting" : "free") + ".csv";
            write_file(dir, name, curve_csv_text(r, grid, spec), files);
        }
    }
}

void reproduce_fig3(const fs::path& dir, const num::QuadratureSpec& spec,
                    std::vector<std::string>& files) {
    const double nm = 1e-9;
    const double sigmas[3] = {50, 100, 50};
    const double wells[3] = {150, 150, 300};
    std::vector<double> grid;
    for (int i = 0; i < 3; ++i) {
        PhysicalParams si = default_params();
        si.dimension = 3;
        si.sigma = sigmas[i] * nm;
        si.L = wells[i] * nm;
        ReservoirModel r = reduce(to_internal(si));
        if (grid.empty()) grid = default_time_grid(r);  // share the baseline grid
        std::ostringstream name;
        name << "gamma_sigma" << sigmas[i] << "_L" << wells[i] << ".csv";
        write_file(dir, name.str(), curve_csv_text(r, grid, spec), files);
    }
}

std::string qsl_rows_csv(const std::string& var_name, const std::vector<double>& dists,
                         const std::vector<double>& values,
                         const std::function<PhysicalParams(double)>& make_params,
                         const num::QuadratureSpec& spec) {
    QubitState state;  // maximally coherent, x = 1
    struct Cell {
        double dist, value;
        std::future<SweepRow> job;
    };
    std::vector<Cell> cells;
    for (double dist : dists)
        for (double v : values) {
            PhysicalParams si = make_params(v);
            cells.push_back(Cell{dist, v,
                                 std::async(std::launch::async, [si, dist, v, state, spec]() {
                                     return sweep_one(si, "distance", dist, dist, state, 0.0,
                                                      spec);
                                 })});
        }
    double time_s = UnitSystem{}.time_s();
    std::ostringstream ss;
    ss << "distance," << var_name << ",status,tau_internal,tau_seconds,v_qsl_internal\n";
    for (Cell& c : cells) {
        SweepRow row = c.job.get();
        ss << fmt_g17(c.dist) << ',' << fmt_g17(c.value) << ',' << row.status << ','
           << fmt_g17(row.res.tau) << ',' << fmt_g17(row.res.tau * time_s) << ','
           << fmt_g17(row.res.speed) << '\n';
    }
    return ss.str();
}

void reproduce_fig4(const fs::path& dir, const num::QuadratureSpec& spec,
                    std::vector<std::string>& files) {
    const std::vector<double> fracs{0.2, 0.4, 0.6, 0.8, 1.0};
    const std::vector<std::vector<double>> dists{
        {4.5e-5, 4.0e-5, 3.5e-5}, {8e-5, 7e-5, 6e-5}, {1.3e-4, 1.2e-4, 1.1e-4}};
    for (int d = 1; d <= 3; ++d) {
        auto make = [d](double frac) {
            PhysicalParams si = default_params();
            si.dimension = d;
            si.a_B = frac * a_rubidium_m;
            return si;
        };
        write_file(dir, "qsl_" + std::to_string(d) + "d.csv",
                   qsl_rows_csv("a_B_over_a_Rb", dists[d - 1], fracs, make, spec), files);
    }
}

void reproduce_fig5(const fs::path& dir, const num::QuadratureSpec& spec,
                    std::vector<std::string>& files) {
    const double nm = 1e-9;
    auto make_sigma = [nm](double sigma_nm) {
        PhysicalParams si = default_params();
        si.sigma = sigma_nm * nm;
        return si;
    };
    write_file(dir, "qsl_sigma.csv",
               qsl_rows_csv("sigma_nm", {1.2e-4, 1.1e-4, 1.0e-4}, {45, 60, 80, 100},
                            make_sigma, spec),
               files);
    auto make_l = [nm](double l_nm) {
        PhysicalParams si = default_params();
        si.L = l_nm * nm;
        return si;
    };
    write_file(dir, "qsl_L.csv",
               qsl_rows_csv("L_nm", {1.55e-4, 1.5e-4, 1.4e-4},
                            {50, 100, 150, 200, 250, 300, 350, 400}, make_l, spec),
               files);
}

void reproduce_appendix(const fs::path& dir, std::vector<std::string>& files) {
    ordered_json fits = ordered_json::array();
    for (int d = 1; d <= 3; ++d) {
        for (int interacting = 0; interacting <= 1; ++interacting) {
            PhysicalParams si = default_params();
            si.dimension = d;
            si.a_B = interacting ? si.a_B : 0.0;
            ReservoirModel r = reduce(to_internal(si));
            SpectralModel model = spectral_model(r);
            std::vector<SpectrumRow> rows;
            const int n = 200;
            for (int i = 0; i < n; ++i) {
                SpectrumRow row;
                row.omega = model.cutoff * std::pow(10.0, -4.0 + 5.0 * i / (n - 1.0));
                row.j_exact = j_exact(r, row.omega);
                row.j_asymptotic = j_asymptotic(model, row.omega);
                row.ratio = row.j_asymptotic != 0.0
                                ? row.j_exact / row.j_asymptotic
                                : std::numeric_limits<double>::quiet_NaN();
                rows.push_back(row);
            }
            std::ostringstream ss;
            write_spectrum_csv(ss, rows);
            std::string name = "spectrum_" + std::to_string(d) + "d_" +
                               (interacting ? "interacting" : "free") + ".csv";
            write_file(dir, name, ss.str(), files);

            OhmicityFit fit = fit_ohmicity(r, 1e-4 * model.cutoff, 1e-3 * model.cutoff, 40);
            fits.push_back(ordered_json{
                {"dimension", d},
                {"regime", interacting ? "interacting" : "free"},
                {"exponent_model", model.exponent},
                {"exponent_fit", fit.exponent},
                {"classification", ohmicity_name(fit.kind)},
                {"ratio_at_window_lo", j_exact(r, fit.omega_lo) / j_asymptotic(model, fit.omega_lo)}});
        }
    }
    write_file(dir, "fits.json", fits.dump(2) + "\n", files);
}

const char* reproduce_plot_script(const std::string& id) {
    if (id == "fig2")
        return "set datafile separator ','\nset logscale x\n"
               "plot 'gamma_1d_free.csv' skip 1 using 1:3 with lines, \\\n"
               "     'gamma_1d_interacting.csv' skip 1 using 1:3 with lines, \\\n"
               "     'gamma_2d_free.csv' skip 1 using 1:3 with lines, \\\n"
               "     'gamma_2d_interacting.csv' skip 1 using 1:3 with lines, \\\n"
               "     'gamma_3d_free.csv' skip 1 using 1:3 with lines, \\\n"
               "     'gamma_3d_interacting.csv' skip 1 using 1:3 with lines\n";
    if (id == "fig3")
        return "set datafile separator ','\nset logscale x\n"
               "plot 'gamma_sigma50_L150.csv' skip 1 using 1:3 with lines, \\\n"
               "     'gamma_sigma100_L150.csv' skip 1 using 1:3 with lines, \\\n"
               "     'gamma_sigma50_L300.csv' skip 1 using 1:3 with lines\n";
    if (id == "fig4")
        return "set datafile separator ','\n"
               "plot 'qsl_3d.csv' skip 1 using 2:5 with linespoints\n";
    if (id == "fig5")
        return "set datafile separator ','\n"
               "plot 'qsl_sigma.csv' skip 1 using 2:5 with linespoints\n";
    return "set datafile separator ','\nset logscale xy\n"
           "plot 'spectrum_3d_interacting.csv' skip 1 using 1:2 with lines, \\\n"
           "     'spectrum_3d_interacting.csv' skip 1 using 1:3 with lines\n";
}

int cmd_reproduce(const GlobalOpts& g, const std::string& id) {
    fs::path dir = g.out.empty() ? fs::path("reproduce_" + id) : fs::path(g.out);
    fs::create_directories(dir);
    num::QuadratureSpec spec = spec_from(g);
    std::vector<std::string> files;

    if (id == "fig2") reproduce_fig2(dir, spec, files);
    else if (id == "fig3") reproduce_fig3(dir, spec, files);
    else if (id == "fig4") reproduce_fig4(dir, spec, files);
    else if (id == "fig5") reproduce_fig5(dir, spec, files);
    else if (id == "appendixA") reproduce_appendix(dir, files);
    else throw std::invalid_argument("unknown reproduce target '" + id + "'");

    if (g.emit_plot) {
        std::ofstream f(dir / "plot.gnuplot", std::ios::binary);
        f << reproduce_plot_script(id);
        files.push_back("plot.gnuplot");
    }

    ordered_json manifest;
    manifest["id"] = id;
    manifest["files"] = files;
    manifest["parameters"] = params_to_json(default_params());
    manifest["generated_at"] = iso_timestamp();
    std::ofstream mf(dir / "manifest.json", std::ios::binary);
    mf << manifest.dump(2) << "\n";
    std::cerr << "wrote " << files.size() + 1 << " files to " << dir.string() << "\n";
    return 0;
}

int cmd_params(const GlobalOpts& g, const ParamFlags& pf) {
    PhysicalParams si = resolve_params(pf, g);
    PhysicalParams internal = to_internal(si);
    ReservoirModel r = reduce(internal);
    ordered_json doc;
    doc["si"] = params_to_json(si);
    doc["internal"] = ordered_json{{"m_A", internal.m_A},     {"m_B", internal.m_B},
                                   {"m_AB", internal.m_AB},   {"n3", internal.n3},
                                   {"a_B", internal.a_B},     {"a_AB", internal.a_AB},
                                   {"sigma", internal.sigma}, {"L", internal.L},
                                   {"omega0", internal.omega0}};
    doc["reduced"] = ordered_json{{"dimension", r.dimension},
                                  {"coupling_g", r.g},
                                  {"density_n", r.n},
                                  {"coupling_eta", r.eta},
                                  {"chemical_potential", r.mu()},
                                  {"sound_speed", r.sound_speed()},
                                  {"natural_time_internal", r.natural_time()},
                                  {"time_unit_seconds", UnitSystem{}.time_s()}};
    if (g.format == "csv") {
        std::ostringstream ss;
        for (auto& [section, obj] : doc.items())
            for (auto& [key, value] : obj.items())
                ss << section << '.' << key << ',' << value.dump() << '\n';
        write_text(g.out, ss.str());
    } else {
        write_text(g.out, doc.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"pure dephasing of an impurity qubit in a cold-atom reservoir"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--config", g.config, "parameter file with key = value lines");
    app.add_option("--out", g.out, "output file (directory for reproduce); stdout if omitted");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--rel-tol", g.rel_tol, "relative quadrature tolerance");
    app.add_option("--t-max", g.t_max_s, "speed limit search horizon in seconds");
    app.add_flag("--emit-plot-script", g.emit_plot, "write a gnuplot script next to the output");

    ParamFlags pf;
    std::string t_grid_csv, omega_grid_csv, regime_str = "auto";
    std::string sweep_var, sweep_values;
    std::string reproduce_id;
    QubitState state;
    double distance = -1.0;
    int spectrum_points = 200;
    int rc = 0;

    CLI::App* c_gamma = app.add_subcommand("gamma", "dephasing exponent on a time grid");
    add_param_flags(c_gamma, pf);
    c_gamma->add_option("--t-grid", t_grid_csv, "comma-separated times in seconds");
    c_gamma->fallthrough();
    c_gamma->callback([&] { rc = cmd_gamma(g, pf, t_grid_csv); });

    CLI::App* c_spec = app.add_subcommand("spectrum", "spectral density and its low-frequency fit");
    add_param_flags(c_spec, pf);
    c_spec->add_option("--omega-grid", omega_grid_csv, "comma-separated frequencies in rad/s");
    c_spec->add_option("--points", spectrum_points, "size of the default frequency grid");
    c_spec->add_option("--regime", regime_str, "free, interacting, or auto")
        ->check(CLI::IsMember({"auto", "free", "interacting"}));
    c_spec->fallthrough();
    c_spec->callback([&] { rc = cmd_spectrum(g, pf, omega_grid_csv, regime_str, spectrum_points); });

    CLI::App* c_qfi = app.add_subcommand("qfi", "quantum Fisher information along the path");
    add_param_flags(c_qfi, pf);
    c_qfi->add_option("--x", state.x, "initial Bloch x");
    c_qfi->add_option("--y", state.y, "initial Bloch y");
    c_qfi->add_option("--z", state.z, "initial Bloch z");
    c_qfi->add_option("--t-grid", t_grid_csv, "comma-separated times in seconds");
    c_qfi->fallthrough();
    c_qfi->callback([&] { rc = cmd_qfi(g, pf, state, t_grid_csv); });

    CLI::App* c_qsl = app.add_subcommand("qsl", "speed limit time for a target distance");
    add_param_flags(c_qsl, pf);
    c_qsl->add_option("--distance", distance, "target Bures angle")->required();
    c_qsl->add_option("--x", state.x, "initial Bloch x");
    c_qsl->add_option("--y", state.y, "initial Bloch y");
    c_qsl->add_option("--z", state.z, "initial Bloch z");
    c_qsl->fallthrough();
    c_qsl->callback([&] { rc = cmd_qsl(g, pf, state, distance); });

    CLI::App* c_sweep = app.add_subcommand("sweep", "speed limit across a parameter range");
    add_param_flags(c_sweep, pf);
    c_sweep->add_option("--var", sweep_var, "a_B, sigma, L, dimension, or distance")
        ->required()
        ->check(CLI::IsMember({"a_B", "sigma", "L", "dimension", "distance"}));
    c_sweep->add_option("--values", sweep_values, "comma-separated values (SI units)")
        ->required();
    c_sweep->add_option("--distance", distance, "target Bures angle");
    c_sweep->add_option("--x", state.x, "initial Bloch x");
    c_sweep->add_option("--y", state.y, "initial Bloch y");
    c_sweep->add_option("--z", state.z, "initial Bloch z");
    c_sweep->fallthrough();
    c_sweep->callback([&] { rc = cmd_sweep(g, pf, sweep_var, sweep_values, distance, state); });

    CLI::App* c_rep = app.add_subcommand("reproduce", "figure and appendix data bundles");
    c_rep->add_option("id", reproduce_id, "fig2, fig3, fig4, fig5, or appendixA")->required();
    c_rep->fallthrough();
    c_rep->callback([&] { rc = cmd_reproduce(g, reproduce_id); });

    CLI::App* c_par = app.add_subcommand("params", "resolved parameter set and derived scales");
    add_param_flags(c_par, pf);
    c_par->fallthrough();
    c_par->callback([&] { rc = cmd_params(g, pf); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const NonConvergence& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const NoBracket& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateFit& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const NegativeDenominator& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected failure: " << e.what() << "\n";
        return 3;
    }
    return rc;
}

}  // namespace becdeph
