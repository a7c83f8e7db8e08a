// Command-line front end: runs experiments from JSON configs, emits QASM,
// prints the shift cost table, and cross-checks the two shift
// implementations against each other.
//
// Exit codes: 0 success, 2 config error, 3 internal verification failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qwalk/experiment.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/qasm.hpp"
#include "qwalk/simulator.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitVerificationFailure = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qwalk::ConfigError("cannot read config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + path.string());
    out << content;
}

int job_position_qubits(const qwalk::ExperimentConfig& config) {
    if (const auto* walk = std::get_if<qwalk::WalkSpec>(&config.job)) return walk->n;
    return std::get<qwalk::ConvolutionSpec>(config.job).n;
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
    const auto config = qwalk::parse_experiment_config(read_file(config_path));
    const auto report = qwalk::run_experiment(config);

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    const std::string stem = std::filesystem::path(config_path).stem().string();
    for (const qwalk::OutputKind kind : config.outputs) {
        switch (kind) {
            case qwalk::OutputKind::DistributionCsv:
                write_file(dir / (stem + ".distribution.csv"),
                           qwalk::distribution_to_csv(report.ideal_distribution));
                break;
            case qwalk::OutputKind::CountsCsv:
                write_file(dir / (stem + ".counts.csv"),
                           qwalk::counts_to_csv(report.sampled_counts));
                break;
            case qwalk::OutputKind::Qasm:
                write_file(dir / (stem + ".qasm"),
                           qwalk::to_qasm(qwalk::build_circuit(config)));
                break;
            case qwalk::OutputKind::CostTable: {
                const int n = job_position_qubits(config);
                write_file(dir / (stem + ".costs.csv"), qwalk::emit_cost_table(n, n));
                break;
            }
            case qwalk::OutputKind::HistogramText:
                write_file(dir / (stem + ".histogram.txt"),
                           qwalk::emit_histogram(report.ideal_distribution));
                break;
        }
    }
    std::cout << qwalk::report_to_json(report).dump(2) << "\n";
    return 0;
}

int cmd_qasm(const std::string& config_path) {
    const auto config = qwalk::parse_experiment_config(read_file(config_path));
    std::cout << qwalk::to_qasm(qwalk::build_circuit(config));
    return 0;
}

int cmd_costs(int n_min, int n_max) {
    std::cout << qwalk::emit_cost_table(n_min, n_max);
    return 0;
}

int cmd_compare(const std::string& config_path) {
    const auto config = qwalk::parse_experiment_config(read_file(config_path));
    const auto* walk = std::get_if<qwalk::WalkSpec>(&config.job);
    if (walk == nullptr) {
        throw qwalk::ConfigError("compare needs a walk config");
    }
    qwalk::WalkSpec qft = *walk;
    qft.shift = qwalk::ShiftImpl::Qft;
    qwalk::WalkSpec mcx = *walk;
    mcx.shift = qwalk::ShiftImpl::Mcx;
    const auto u_qft = qwalk::circuit_unitary(qwalk::walk_circuit(qft));
    const auto u_mcx = qwalk::circuit_unitary(qwalk::walk_circuit(mcx));
    const double deviation = qwalk::oracle::max_deviation(u_qft, u_mcx, true);
    std::printf("max deviation between qft and mcx walk unitaries: %.3e\n", deviation);
    if (deviation > 1e-9) {
        std::fprintf(stderr, "shift implementations disagree beyond tolerance\n");
        return kExitVerificationFailure;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circuit construction and simulation for discrete-time quantum walks"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    int n_min = 2;
    int n_max = 8;

    auto* run = app.add_subcommand("run", "run an experiment config and report results");
    run->add_option("config", config_path, "experiment config JSON")->required();
    run->add_option("--out-dir", out_dir, "directory for requested output files");

    auto* qasm = app.add_subcommand("qasm", "emit the configured circuit as OpenQASM 2.0");
    qasm->add_option("config", config_path, "experiment config JSON")->required();

    auto* costs = app.add_subcommand("costs", "print the shift/walk cost table as CSV");
    costs->add_option("--n-min", n_min, "smallest position-qubit count");
    costs->add_option("--n-max", n_max, "largest position-qubit count");

    auto* compare = app.add_subcommand(
        "compare", "check the two shift implementations against each other");
    compare->add_option("config", config_path, "walk config JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, out_dir);
        if (qasm->parsed()) return cmd_qasm(config_path);
        if (costs->parsed()) return cmd_costs(n_min, n_max);
        return cmd_compare(config_path);
    } catch (const qwalk::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerificationFailure;
    }
}
