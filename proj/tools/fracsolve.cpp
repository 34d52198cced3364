// fracsolve: command-line driver for the multi-term fractional diffusion solver.
//
//   fracsolve <solve|converge|nu-star|residual-check> --config run.toml [--out file.csv]
//             [--no-richardson] [--emit-samples]
//
// Exit codes: 0 success, 1 usage or configuration error, 2 solver failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracsolve/cli/commands.hpp"
#include "fracsolve/error.hpp"

#ifndef FRACSOLVE_VERSION
#define FRACSOLVE_VERSION "0.0.0"
#endif

namespace {

using namespace fracsolve;

constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;

struct Options {
    std::string config;
    std::string out;
    bool no_richardson = false;
    bool emit_samples = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + path.string() + "'");
    return f;
}

void write_metadata(const std::filesystem::path& csv, const RunSpec& spec, double seconds) {
    nlohmann::ordered_json meta;
    meta["version"] = FRACSOLVE_VERSION;
    meta["command"] = to_string(spec.command);
    meta["problem"] = spec.problem;
    meta["richardson"] = spec.richardson;
    meta["threads"] = worker_count();
    meta["elapsed_seconds"] = seconds;
    meta["config"] = serialize(spec);
    std::ofstream f(csv.string() + ".meta.json");
    f << meta.dump(2) << '\n';
}

void run(Command command, const Options& opt) {
    RunSpec spec = parse_config(read_file(opt.config), command);
    if (opt.no_richardson) spec.richardson = false;
    if (opt.emit_samples) spec.emit_samples = true;
    if (!opt.out.empty()) spec.output = opt.out;

    std::ofstream file;
    if (!spec.output.empty()) file = open_output(spec.output);
    std::ostream& out = spec.output.empty() ? std::cout : file;

    const auto t0 = std::chrono::steady_clock::now();
    switch (command) {
        case Command::Solve: cmd_solve(spec, out, std::cerr); break;
        case Command::Converge: cmd_converge(spec, out); break;
        case Command::ResidualCheck: cmd_residual_check(spec, out); break;
        case Command::NuStar: {
            if (!spec.emit_samples) {
                cmd_nu_star(spec, out);
            } else if (spec.output.empty()) {
                std::ostringstream samples;
                cmd_nu_star(spec, out, &samples);
                out << '\n' << samples.str();
            } else {
                auto path = std::filesystem::path(spec.output).replace_extension(".samples.csv");
                std::ofstream samples = open_output(path);
                cmd_nu_star(spec, out, &samples);
            }
            break;
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.flush();
    if (!spec.output.empty()) write_metadata(spec.output, spec, seconds);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-difference solver for multi-term time-fractional diffusion with memory"};
    app.set_version_flag("--version", std::string(FRACSOLVE_VERSION));
    app.require_subcommand(1);

    Options opt;
    std::optional<Command> chosen;
    for (Command c : {Command::Solve, Command::Converge, Command::NuStar, Command::ResidualCheck}) {
        CLI::App* sub = app.add_subcommand(to_string(c));
        sub->add_option("--config", opt.config, "Run configuration (TOML)")->required();
        sub->add_option("--out", opt.out, "Output CSV path (default: stdout)");
        sub->add_flag("--no-richardson", opt.no_richardson, "Disable temporal Richardson extrapolation");
        sub->add_flag("--emit-samples", opt.emit_samples, "nu-star: also write N(t) curves");
        sub->callback([&chosen, c] { chosen = c; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        run(*chosen, opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitConfig;
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolver;
    }
    return 0;
}
