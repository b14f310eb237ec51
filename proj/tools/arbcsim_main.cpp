// arbcsim — command-line front end.
//
// Exit codes: 0 success, 2 usage/config error, 3 output I/O failure.

#include "arbc/cli_commands.hpp"
#include "arbc/config.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

// Table commands print to stdout unless --out-dir is given, in which
// case each command writes <out-dir>/<command>.csv.
std::ofstream open_table_file(const std::string& out_dir, const std::string& command) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw arbc::IoError("cannot create output directory " + out_dir);
    const std::filesystem::path path = std::filesystem::path(out_dir) / (command + ".csv");
    std::ofstream file(path);
    if (!file) throw arbc::IoError("cannot open " + path.string() + " for writing");
    return file;
}

int run(int argc, char** argv) {
    CLI::App app{"Adaptive resonant beam charging simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--out-dir", out_dir, "directory for CSV output");
    CLI::Option* seed_opt = app.add_option("--seed", seed, "override the simulation seed");

    CLI::App* link_curve = app.add_subcommand("link-curve", "source power vs distance");
    std::vector<double> pout{1.0, 3.0, 5.0};
    double d_max = 10.0;
    double d_step = 0.1;
    link_curve->add_option("--pout", pout, "output power column values, W");
    link_curve->add_option("--d-max", d_max, "sweep end distance, m");
    link_curve->add_option("--d-step", d_step, "sweep step, m");

    CLI::App* source_vs_output =
        app.add_subcommand("source-vs-output", "source power vs output power");
    std::vector<double> distances{1.0, 3.0, 5.0};
    double pout_max = 6.0;
    double pout_step = 0.1;
    source_vs_output->add_option("--d", distances, "distance column values, m");
    source_vs_output->add_option("--pout-max", pout_max, "sweep end output power, W");
    source_vs_output->add_option("--pout-step", pout_step, "sweep step, W");

    CLI::App* profile = app.add_subcommand("profile", "battery charging profile");
    double t_step = 0.01;
    profile->add_option("--t-step", t_step, "sample spacing, h");

    CLI::App* trace =
        app.add_subcommand("trace", "per-step commanded power along the run-0 draw");

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo campaign");
    std::uint64_t runs = 0;
    unsigned threads = 1;
    CLI::Option* runs_opt = simulate->add_option("--runs", runs, "number of runs");
    simulate->add_option("--threads", threads, "worker threads (results are identical)");

    for (CLI::App* sub : {link_curve, source_vs_output, profile, trace, simulate})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);   // prints help or the error message
        return code == 0 ? 0 : 2;
    }

    arbc::SimConfig config =
        config_path.empty() ? arbc::SimConfig{} : arbc::load_config_file(config_path);
    if (*seed_opt) config.seed = seed;

    if (app.got_subcommand(simulate)) {
        if (*runs_opt) {
            if (runs == 0) throw arbc::ConfigError("runs must be at least 1");
            config.runs = runs;
        }
        config.threads = threads;
        arbc::cmd_simulate(config, out_dir.empty() ? "." : out_dir);
        return 0;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_dir.empty()) {
        file = open_table_file(out_dir, command);
        out = &file;
    }
    if (app.got_subcommand(link_curve))
        arbc::cmd_link_curve(config, pout, d_max, d_step, *out);
    else if (app.got_subcommand(source_vs_output))
        arbc::cmd_source_vs_output(config, distances, pout_max, pout_step, *out);
    else if (app.got_subcommand(profile))
        arbc::cmd_profile(config, t_step, *out);
    else if (app.got_subcommand(trace))
        arbc::cmd_trace(config, *out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const arbc::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const arbc::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
