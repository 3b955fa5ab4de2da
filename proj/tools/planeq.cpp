// planeq: command-line surface of the plane-quantum library. Every command
// emits plot-ready CSV or JSON; no plotting happens here.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "planeq/bipartite.hpp"
#include "planeq/circle_quant.hpp"
#include "planeq/dynamics.hpp"
#include "planeq/errors.hpp"
#include "planeq/measurement.hpp"
#include "planeq/plane.hpp"
#include "planeq/sphere_quant.hpp"
#include "planeq/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

// 17 significant digits: round-trip exact for 64-bit floats
std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct Output {
    std::string format = "csv";
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << text;
    }
};

std::string to_csv(const Table& table) {
    std::string text;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) text += ',';
        text += table.columns[i];
    }
    text += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) text += ',';
            text += fmt17(row[i]);
        }
        text += '\n';
    }
    return text;
}

json provenance(const std::string& command, const json& parameters) {
    return json{{"command", command},
                {"version", planeq::version},
                {"parameters", parameters}};
}

json table_json(const Table& table) {
    json rows = json::array();
    for (const auto& row : table.rows) rows.push_back(row);
    return json{{"columns", table.columns}, {"rows", rows}};
}

void emit_table(const Output& out, const Table& table, const std::string& command,
                const json& parameters, const json& extra = {}) {
    if (out.format == "csv") {
        out.write(to_csv(table));
        return;
    }
    json doc = table_json(table);
    doc["provenance"] = provenance(command, parameters);
    for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
    out.write(doc.dump(2) + "\n");
}

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* cap = std::getenv("PLANEQ_THREADS")) {
        const long parsed = std::strtol(cap, nullptr, 10);
        if (parsed >= 1 && static_cast<unsigned>(parsed) < hw) {
            hw = static_cast<unsigned>(parsed);
        }
    }
    return static_cast<int>(hw);
}

struct EntropyOpts {
    int grid = 101;
    Output out;
};

void run_entropy_curve(const EntropyOpts& o) {
    Table table{{"r", "entropy"}, {}};
    for (int i = 0; i < o.grid; ++i) {
        const double r = static_cast<double>(i) / (o.grid - 1);
        table.rows.push_back({r, planeq::entropy_from_r(r)});
    }
    emit_table(o.out, table, "entropy-curve", json{{"grid", o.grid}});
}

struct LowerSymbolOpts {
    double r = 1.0;
    int grid = 360;
    Output out;
};

void run_lower_symbol_angle(const LowerSymbolOpts& o) {
    const planeq::CircleFunction sym = planeq::angle_lower_symbol(o.r);
    const double band = 0.5 * o.r * o.r;
    Table table{{"phi", "value"}, {}};
    for (int i = 0; i < o.grid; ++i) {
        const double phi = planeq::two_pi * i / o.grid;
        const double value = sym(phi);
        if (value < planeq::pi - band - 1e-12 || value > planeq::pi + band + 1e-12) {
            throw planeq::validation_error("lower symbol left its eigenvalue band");
        }
        table.rows.push_back({phi, value});
    }
    emit_table(o.out, table, "lower-symbol-angle",
               json{{"r", o.r}, {"grid", o.grid}});
}

struct LindbladOpts {
    double h1 = 0.0, h2 = 0.0, h3 = 0.0;
    double energy = 0.0;
    double r0 = 1.0, phi0 = 0.0;
    double t0 = 0.0, t1 = 1.0, dt = 1e-3;
    Output out;
};

void run_lindblad(const LindbladOpts& o) {
    const planeq::LindbladParams params{
        o.h1, o.h2, o.h3, planeq::EnergyProfile::constant(o.energy)};
    const planeq::Trajectory traj =
        planeq::lindblad_integrate(o.r0, o.phi0, params, o.t0, o.t1, o.dt);

    Table table{{"t", "r", "phi", "entropy"}, {}};
    for (const auto& s : traj.samples) {
        table.rows.push_back({s.t, s.r, s.phi, s.entropy});
    }

    // self-consistency of r against the exponential-of-integral expression
    double formula_residual = 0.0;
    for (const auto& s : traj.samples) {
        const double formula =
            o.r0 * std::exp(-(o.h3 + o.h1) * (s.t - o.t0) +
                            (o.h3 - o.h1) * s.cos4phi_integral);
        formula_residual = std::max(formula_residual, std::abs(s.r - formula));
    }
    json extra{{"exponential_formula_residual", formula_residual}};
    if (o.h1 == o.h3) {
        double closed_residual = 0.0;
        for (const auto& s : traj.samples) {
            closed_residual = std::max(
                closed_residual,
                std::abs(s.r - o.r0 * std::exp(-2.0 * o.h1 * (s.t - o.t0))));
        }
        extra["h1_eq_h3_residual"] = closed_residual;
    }
    emit_table(o.out, table, "lindblad",
               json{{"h1", o.h1}, {"h2", o.h2}, {"h3", o.h3},
                    {"energy", o.energy}, {"r0", o.r0}, {"phi0", o.phi0},
                    {"t0", o.t0}, {"t1", o.t1}, {"dt", o.dt}},
               extra);
}

struct BellScanOpts {
    int grid = 181;
    Output out;
};

void run_bell_scan(const BellScanOpts& o) {
    const planeq::ViolationScan scan = planeq::violation_scan(o.grid, worker_count());
    Table table{{"zeta", "eta", "lhs", "rhs", "violated"}, {}};
    table.rows.reserve(scan.samples.size());
    for (const auto& s : scan.samples) {
        table.rows.push_back({s.zeta, s.eta, s.lhs, s.rhs, s.violated ? 1.0 : 0.0});
    }
    emit_table(o.out, table, "bell-scan", json{{"grid", o.grid}});
}

struct MeasureOpts {
    double phi_s = 0.0;
    double phi_par = 0.0;
    double lambda_par = 0.0;
    double lambda_perp = planeq::half_pi;
    std::uint64_t n = 100000;
    std::uint64_t seed = 1;
    Output out;
};

void run_measure_sim(const MeasureOpts& o) {
    const planeq::MeasurementSetup setup{o.lambda_par, o.phi_par, o.lambda_perp, 0.0};
    const auto [par, perp] = planeq::measure(setup, o.phi_s);
    const planeq::SampleCounts counts =
        planeq::sample_outcomes(setup, o.phi_s, o.n, o.seed);

    const json parameters{{"phi_s", o.phi_s},       {"phi_par", o.phi_par},
                          {"lambda_par", o.lambda_par}, {"lambda_perp", o.lambda_perp},
                          {"n", o.n},               {"seed", o.seed}};
    if (o.out.format == "csv") {
        std::string text = "outcome,probability,count\n";
        text += "parallel," + fmt17(par.probability) + ',' +
                std::to_string(counts.parallel) + '\n';
        text += "perpendicular," + fmt17(perp.probability) + ',' +
                std::to_string(counts.perpendicular) + '\n';
        o.out.write(text);
        return;
    }
    json doc{{"provenance", provenance("measure-sim", parameters)},
             {"probabilities",
              {{"parallel", par.probability}, {"perpendicular", perp.probability}}},
             {"counts",
              {{"parallel", counts.parallel}, {"perpendicular", counts.perpendicular}}},
             {"n", o.n},
             {"seed", counts.seed}};
    o.out.write(doc.dump(2) + "\n");
}

struct SphereOpts {
    double r = 1.0;
    Output out;
};

void run_sphere_check(const SphereOpts& o) {
    using planeq::CMat2;
    const CMat2 ax = planeq::quantize_s2(
        planeq::SphereFunction([](double t, double p) { return std::sin(t) * std::cos(p); }),
        o.r);
    const CMat2 ay = planeq::quantize_s2(
        planeq::SphereFunction([](double t, double p) { return std::sin(t) * std::sin(p); }),
        o.r);
    const CMat2 az = planeq::quantize_s2(
        planeq::SphereFunction([](double t, double) { return std::cos(t); }), o.r);

    const double fx = ax.m01.real();
    const double fy = -ay.m01.imag();
    const double fz = 0.5 * (az.m00 - az.m11).real();
    const double expected = o.r / 3.0;

    json doc{{"provenance", provenance("sphere-check", json{{"r", o.r}})},
             {"pauli_factors", {{"x", fx}, {"y", fy}, {"z", fz}}},
             {"residuals",
              {{"resolution", planeq::resolution_residual_s2(o.r)},
               {"pauli_x", ax.max_abs_diff(planeq::pauli1() * expected)},
               {"pauli_y", ay.max_abs_diff(planeq::pauli2() * expected)},
               {"pauli_z", az.max_abs_diff(planeq::pauli3() * expected)}}}};
    if (o.out.format == "csv") {
        std::string text = "quantity,value\n";
        text += "pauli_factor_x," + fmt17(fx) + '\n';
        text += "pauli_factor_y," + fmt17(fy) + '\n';
        text += "pauli_factor_z," + fmt17(fz) + '\n';
        text += "resolution_residual," + fmt17(doc["residuals"]["resolution"].get<double>()) + '\n';
        o.out.write(text);
        return;
    }
    o.out.write(doc.dump(2) + "\n");
}

void add_output_options(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out.path, "Output path (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-quantum toolkit: states on the circle, integral "
                 "quantization, open-system dynamics, Bell scans, sphere "
                 "quantization and pointer measurements"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read defaults from a key=value file");

    EntropyOpts entropy_opts;
    auto* entropy = app.add_subcommand(
        "entropy-curve", "Tabulate the von Neumann entropy over the mixing radius");
    entropy->fallthrough();
    entropy->add_option("--grid", entropy_opts.grid, "Number of radii")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    add_output_options(entropy, entropy_opts.out);
    entropy->callback([&] { run_entropy_curve(entropy_opts); });

    LowerSymbolOpts lower_opts;
    auto* lower = app.add_subcommand(
        "lower-symbol-angle", "Tabulate the lower symbol of the quantized angle");
    lower->fallthrough();
    lower->add_option("--r", lower_opts.r, "Mixing radius of the quantizer family")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    lower->add_option("--grid", lower_opts.grid, "Number of angles")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    add_output_options(lower, lower_opts.out);
    lower->callback([&] { run_lower_symbol_angle(lower_opts); });

    LindbladOpts lindblad_opts;
    auto* lindblad = app.add_subcommand(
        "lindblad", "Integrate the reduced open-system dynamics in (r, phi)");
    lindblad->fallthrough();
    lindblad->add_option("--h1", lindblad_opts.h1, "First damping rate")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    lindblad->add_option("--h2", lindblad_opts.h2,
                         "Second damping rate (must be 0; kept for the schema)")
        ->capture_default_str();
    lindblad->add_option("--h3", lindblad_opts.h3, "Third damping rate")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    lindblad->add_option("--energy", lindblad_opts.energy, "Constant drive E")
        ->capture_default_str();
    lindblad->add_option("--r", lindblad_opts.r0, "Initial mixing radius")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    lindblad->add_option("--phi0", lindblad_opts.phi0, "Initial angle")
        ->capture_default_str();
    lindblad->add_option("--t0", lindblad_opts.t0, "Start time")->capture_default_str();
    lindblad->add_option("--t1", lindblad_opts.t1, "End time")->capture_default_str();
    lindblad->add_option("--dt", lindblad_opts.dt, "Integrator step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(lindblad, lindblad_opts.out);
    lindblad->callback([&] { run_lindblad(lindblad_opts); });

    BellScanOpts bell_opts;
    auto* bell = app.add_subcommand(
        "bell-scan", "Scan the Bell inequality over the half-angle plane");
    bell->fallthrough();
    bell->add_option("--grid", bell_opts.grid, "Grid points per axis")
        ->check(CLI::Range(8, 100000))
        ->capture_default_str();
    add_output_options(bell, bell_opts.out);
    bell->callback([&] { run_bell_scan(bell_opts); });

    MeasureOpts measure_opts;
    auto* measure = app.add_subcommand(
        "measure-sim", "Sample pointer measurement outcomes for a pure state");
    measure->fallthrough();
    measure->add_option("--phi-s", measure_opts.phi_s, "System state angle")
        ->capture_default_str();
    measure->add_option("--phi-par", measure_opts.phi_par, "Parallel pointer direction")
        ->capture_default_str();
    measure->add_option("--lambda-par", measure_opts.lambda_par,
                        "Pointer rotation for the parallel outcome")
        ->capture_default_str();
    measure->add_option("--lambda-perp", measure_opts.lambda_perp,
                        "Pointer rotation for the perpendicular outcome")
        ->capture_default_str();
    measure->add_option("--n", measure_opts.n, "Number of samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    measure->add_option("--seed", measure_opts.seed, "RNG seed")->capture_default_str();
    add_output_options(measure, measure_opts.out);
    measure->callback([&] { run_measure_sim(measure_opts); });

    SphereOpts sphere_opts;
    auto* sphere = app.add_subcommand(
        "sphere-check", "Verify the sphere quantization identities at radius r");
    sphere->fallthrough();
    sphere->add_option("--r", sphere_opts.r, "Mixing radius")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    add_output_options(sphere, sphere_opts.out);
    sphere->callback([&] { run_sphere_check(sphere_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const planeq::validation_error& e) {
        std::cerr << "validation failure: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation failure: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
