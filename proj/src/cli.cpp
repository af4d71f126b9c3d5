#include "hmono/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hmono/beamsim.hpp"
#include "hmono/io.hpp"
#include "hmono/monopole.hpp"
#include "hmono/stark.hpp"
#include "hmono/verify.hpp"

namespace hmono::cli {

namespace fs = std::filesystem;

namespace {

struct GlobalOptions {
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::string units = "au";
    std::string profile = "default";
};

io::Metadata base_metadata(const GlobalOptions& g, const std::string& command) {
    io::Metadata meta{{"command", command},
                      {"units", g.units},
                      {"tolerance_profile", g.profile},
                      {"seed", g.seed ? std::to_string(*g.seed) : std::string("none")}};
    for (auto& kv : io::constants_metadata(UnitSystem::atomic())) meta.push_back(std::move(kv));
    return meta;
}

fs::path prepare_out_dir(const GlobalOptions& g) {
    fs::path dir(g.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw std::runtime_error("output directory '" + g.out_dir + "' is not writable");
    return dir;
}

int cmd_verify(const GlobalOptions& g, int n_max, bool dump, std::ostream& out, std::ostream& err) {
    if (n_max < 1 || n_max > 8) {
        err << "verify: --n-max must be in 1..8\n";
        return kExitUsage;
    }
    const auto tol = Tolerances::from_profile(g.profile);
    const auto dir = prepare_out_dir(g);
    const auto checks = run_verification(n_max, tol);
    const auto report = verification_report(n_max, g.profile, checks);
    io::write_text(dir / "verify_report.json", report.dump(2) + "\n");
    if (dump)
        for (int n = 1; n <= n_max; ++n)
            io::write_text(dir / ("operators_n" + std::to_string(n) + ".json"),
                           io::operators_json(build_so4(n)).dump() + "\n");
    out << report.dump(2) << "\n";

    int status = kExitOk;
    for (const auto& c : checks)
        if (!c.passed) {
            err << "verify: check '" << c.name << "' failed: " << c.value << " > " << c.tolerance << "\n";
            status = kExitFailure;
        }
    return status;
}

int cmd_charges(const GlobalOptions& g, int n, std::ostream& out, std::ostream& err) {
    if (n < 1 || n > 10) {
        err << "charges: --n must be in 1..10\n";
        return kExitUsage;
    }
    const auto dir = prepare_out_dir(g);
    const auto table = charge_table(n);
    auto meta = base_metadata(g, "charges");
    meta.emplace_back("n", std::to_string(n));
    const auto path = dir / ("charges_n" + std::to_string(n) + ".csv");
    io::write_text(path, io::charges_csv(table, meta));
    out << "wrote " << table.size() << " rows to " << path.string() << "\n";
    for (const auto& r : table)
        out << r.label.to_string() << " spin " << to_string(r.spin) << ": g = " << io::format_double(r.g)
            << " e, eg/(hbar c) = " << io::format_double(r.ratio) << " alpha\n";
    return kExitOk;
}

int cmd_stark_map(const GlobalOptions& g, int n_max, std::vector<double> fields, const std::vector<double>& fields_au,
                  const std::vector<double>& fields_vcm, std::ostream& out, std::ostream& err) {
    if (n_max < 1 || n_max > 10) {
        err << "stark-map: --n-max must be in 1..10\n";
        return kExitUsage;
    }
    // bare --field values follow --units: atomic units or V/cm
    std::vector<double> grid;
    for (double f : fields) grid.push_back(g.units == "si" ? convert::field_vcm_to_au(f) : f);
    grid.insert(grid.end(), fields_au.begin(), fields_au.end());
    for (double f : fields_vcm) grid.push_back(convert::field_vcm_to_au(f));
    if (grid.empty()) {
        err << "stark-map: give at least one field via --field, --field-au or --field-vcm\n";
        return kExitUsage;
    }
    for (double f : grid)
        if (!(f > 0.0) || !std::isfinite(f)) {
            err << "stark-map: field values must be > 0\n";
            return kExitUsage;
        }
    const auto dir = prepare_out_dir(g);
    const auto rows = stark_map(n_max, grid, Tolerances::from_profile(g.profile));
    auto meta = base_metadata(g, "stark-map");
    meta.emplace_back("n_max", std::to_string(n_max));
    meta.emplace_back("slope_convention", "shift = +(3/2) n (n1 - n2) F hartree");
    const auto path = dir / "stark_map.csv";
    io::write_text(path, io::stark_map_csv(rows, meta));
    out << "wrote " << rows.size() << " rows to " << path.string() << "\n";
    return kExitOk;
}

int cmd_simulate(const GlobalOptions& g, const std::string& config_path, std::ostream& out) {
    auto config = io::load_sim_config(config_path, g.units == "si" ? "si" : "cgs");
    if (g.seed) config.rng_seed = *g.seed;
    const auto dir = prepare_out_dir(g);
    const auto result = beam::simulate_beam(config);

    GlobalOptions effective = g;
    effective.seed = config.rng_seed;
    auto meta = base_metadata(effective, "simulate");
    meta.emplace_back("config", config_path);
    meta.emplace_back("dt_s", io::format_double(result.dt));
    meta.emplace_back("internal_units", "gaussian-cgs");
    io::write_text(dir / "trajectories.csv", io::trajectories_csv(result.trajectories, meta));
    io::write_text(dir / "detector.csv", io::detector_csv(result.detector, meta));
    io::write_text(dir / "flux.csv", io::flux_csv(result.flux, meta));
    io::write_text(dir / "summary.json", io::summary_json(result, config, meta).dump(2) + "\n");

    for (const auto& s : result.summary)
        out << "species g = " << io::format_double(s.g_over_e) << " e: detected " << s.detected << "/" << s.launched
            << ", mean y = " << io::format_double(s.mean_y) << " cm (+- " << io::format_double(s.stderr_y())
            << "), mean z = " << io::format_double(s.mean_z) << " cm\n";
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Magnetic-charge operator for hydrogen Stark states: checks, tables and beam simulation", "hmono"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    std::uint64_t seed = 0;
    app.add_option("--out-dir", g.out_dir, "Directory for output files")->capture_default_str();
    auto* seed_opt = app.add_option("--seed", seed, "RNG seed (overrides the simulate config)");
    app.add_option("--units", g.units, "Unit mode for inputs")->check(CLI::IsMember({"au", "si"}))->capture_default_str();
    app.add_option("--tolerance-profile", g.profile, "Tolerance set")
        ->check(CLI::IsMember({"default", "strict"}))
        ->capture_default_str();

    int verify_n = 6;
    bool dump = false;
    auto* verify = app.add_subcommand("verify", "Run the operator-algebra invariant suite");
    verify->add_option("--n-max", verify_n, "Largest manifold to check (1..8)")->capture_default_str();
    verify->add_flag("--dump-operators", dump, "Write operators_n<k>.json for every manifold checked");

    int charges_n = 2;
    auto* charges = app.add_subcommand("charges", "Write the magnetic-charge table of one manifold");
    charges->add_option("--n", charges_n, "Principal quantum number (1..10)")->capture_default_str();

    int stark_n = 2;
    std::vector<double> fields, fields_au, fields_vcm;
    auto* stark = app.add_subcommand("stark-map", "Write first-order Stark shifts over a field grid");
    stark->add_option("--n-max", stark_n, "Largest manifold (1..10)")->capture_default_str();
    stark->add_option("--field", fields, "Field values in the --units mode (a.u. or V/cm)");
    stark->add_option("--field-au", fields_au, "Field values in atomic units");
    stark->add_option("--field-vcm", fields_vcm, "Field values in V/cm");

    std::string config_path;
    auto* simulate = app.add_subcommand("simulate", "Run the beam-deflection and SQUID simulation");
    simulate->add_option("--config", config_path, "JSON simulation config")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (*seed_opt) g.seed = seed;

    try {
        if (*verify) return cmd_verify(g, verify_n, dump, out, err);
        if (*charges) return cmd_charges(g, charges_n, out, err);
        if (*stark) return cmd_stark_map(g, stark_n, fields, fields_au, fields_vcm, out, err);
        if (*simulate) return cmd_simulate(g, config_path, out);
    } catch (const beam::StepSizeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace hmono::cli
