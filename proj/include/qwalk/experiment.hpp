#pragma once

// Experiment orchestration: config parsing, circuit construction, exact
// distribution, seeded sampling, and the plain-text/CSV reporting the CLI
// exposes. Everything here is a pure function of the config, seed included,
// so repeated runs produce byte-identical artifacts.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "qwalk/circulant.hpp"
#include "qwalk/distribution.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/simulator.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Invalid or malformed user input (configs, kernels); the CLI maps this to
/// its config-error exit code.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kConfigVersion = 1;

enum class OutputKind {
    DistributionCsv,
    CountsCsv,
    Qasm,
    CostTable,
    HistogramText,
};

struct ConvolutionSpec {
    int n = 1;
    int steps = 1;
    double alpha = 0.0;
    double theta = 0.0;
    PhaseSpectrum spectrum_c;   // v = 0 block
    PhaseSpectrum spectrum_c2;  // v = 1 block
    std::string initial;        // basis bitstring, velocity first
};

struct ExperimentConfig {
    std::variant<WalkSpec, ConvolutionSpec> job;
    long long shots = 1024;
    std::uint64_t seed = 0;
    std::set<OutputKind> outputs;
};

struct ExperimentReport {
    Distribution ideal_distribution;
    Counts sampled_counts;
    long long circuit_size = 0;
    long long circuit_depth = 0;
    std::optional<long long> paper_size_formula;
    double l1_sampled_vs_ideal = 0.0;
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& j,
                                const std::set<std::string>& allowed,
                                const std::string& where) {
    for (const auto& [key, _] : j.items()) {
        if (!allowed.count(key)) {
            throw ConfigError("unknown field \"" + key + "\" in " + where);
        }
    }
}

template <typename T>
T require(const nlohmann::json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw ConfigError("missing field \"" + key + "\" in " + where);
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("bad value for \"" + key + "\" in " + where + ": " + e.what());
    }
}

// Scattering angles from either explicit alpha/theta or the named preset
// "hadamard-like", which is (pi/2, -pi/4) and realizes the balanced matrix
// (1/sqrt2) [[1, i], [i, 1]].
inline std::pair<double, double> scattering_params(const nlohmann::json& j,
                                                   const std::string& where) {
    const bool has_angles = j.contains("alpha") || j.contains("theta");
    if (j.contains("preset")) {
        if (has_angles) {
            throw ConfigError("give either preset or alpha/theta in " + where);
        }
        const auto preset = require<std::string>(j, "preset", where);
        if (preset != "hadamard-like") throw ConfigError("unknown preset: " + preset);
        return {std::numbers::pi / 2.0, -std::numbers::pi / 4.0};
    }
    if (!j.contains("alpha") || !j.contains("theta")) {
        throw ConfigError("scattering needs alpha and theta (or a preset) in " + where);
    }
    return {require<double>(j, "alpha", where), require<double>(j, "theta", where)};
}

inline PhaseSpectrum parse_kernel(const nlohmann::json& j, int n, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be an object");
    reject_unknown_keys(j, {"kind", "values"}, where);
    const auto kind = require<std::string>(j, "kind", where);
    const std::size_t expected = std::size_t{1} << n;
    try {
        if (kind == "phases") {
            PhaseSpectrum s;
            s.thetas = require<std::vector<double>>(j, "values", where);
            if (s.thetas.size() != expected) {
                throw ConfigError(where + " needs exactly 2^n = " +
                                  std::to_string(expected) + " phases");
            }
            return s;
        }
        if (kind == "first_row") {
            const auto values = require<std::vector<std::vector<double>>>(j, "values", where);
            if (values.size() != expected) {
                throw ConfigError(where + " needs exactly 2^n = " +
                                  std::to_string(expected) + " entries");
            }
            CirculantKernel kernel;
            for (const auto& pair : values) {
                if (pair.size() != 2) {
                    throw ConfigError(where + " entries must be [re, im] pairs");
                }
                kernel.first_row.emplace_back(pair[0], pair[1]);
            }
            return spectrum_of_circulant(kernel);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError(where + " kind must be \"first_row\" or \"phases\"");
}

}  // namespace detail

inline ExperimentConfig parse_experiment_config(const nlohmann::json& j) {
    using detail::require;
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    detail::reject_unknown_keys(
        j, {"version", "walk", "convolution", "shots", "seed", "outputs"}, "config");
    if (require<int>(j, "version", "config") != kConfigVersion) {
        throw ConfigError("unsupported config version");
    }
    if (j.contains("walk") == j.contains("convolution")) {
        throw ConfigError("config needs exactly one of \"walk\" or \"convolution\"");
    }

    ExperimentConfig config;
    config.seed = require<std::uint64_t>(j, "seed", "config");
    if (j.contains("shots")) config.shots = require<long long>(j, "shots", "config");
    if (config.shots < 1) throw ConfigError("shots must be >= 1");

    if (j.contains("outputs")) {
        for (const auto& o : require<std::vector<std::string>>(j, "outputs", "config")) {
            if (o == "distribution_csv") config.outputs.insert(OutputKind::DistributionCsv);
            else if (o == "counts_csv") config.outputs.insert(OutputKind::CountsCsv);
            else if (o == "qasm") config.outputs.insert(OutputKind::Qasm);
            else if (o == "cost_table") config.outputs.insert(OutputKind::CostTable);
            else if (o == "histogram_text") config.outputs.insert(OutputKind::HistogramText);
            else throw ConfigError("unknown output kind: " + o);
        }
    }

    if (j.contains("walk")) {
        const auto& w = j.at("walk");
        detail::reject_unknown_keys(
            w, {"n", "steps", "alpha", "theta", "preset", "shift", "initial"}, "walk");
        WalkSpec spec;
        spec.n = require<int>(w, "n", "walk");
        spec.steps = require<int>(w, "steps", "walk");
        std::tie(spec.alpha, spec.theta) = detail::scattering_params(w, "walk");
        const auto shift = require<std::string>(w, "shift", "walk");
        if (shift == "qft") spec.shift = ShiftImpl::Qft;
        else if (shift == "mcx") spec.shift = ShiftImpl::Mcx;
        else throw ConfigError("shift must be \"qft\" or \"mcx\"");
        spec.initial = require<std::string>(w, "initial", "walk");
        try {
            validate_walk_spec(spec);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("invalid walk: ") + e.what());
        }
        config.job = spec;
    } else {
        const auto& c = j.at("convolution");
        detail::reject_unknown_keys(
            c, {"n", "steps", "alpha", "theta", "preset", "kernelC", "kernelC2", "initial"},
            "convolution");
        ConvolutionSpec spec;
        spec.n = require<int>(c, "n", "convolution");
        if (spec.n < 1) throw ConfigError("convolution needs n >= 1");
        spec.steps = require<int>(c, "steps", "convolution");
        if (spec.steps < 0) throw ConfigError("steps must be >= 0");
        std::tie(spec.alpha, spec.theta) = detail::scattering_params(c, "convolution");
        if (!c.contains("kernelC") || !c.contains("kernelC2")) {
            throw ConfigError("convolution needs kernelC and kernelC2");
        }
        spec.spectrum_c = detail::parse_kernel(c.at("kernelC"), spec.n, "kernelC");
        spec.spectrum_c2 = detail::parse_kernel(c.at("kernelC2"), spec.n, "kernelC2");
        spec.initial = c.contains("initial") ? require<std::string>(c, "initial", "convolution")
                                             : std::string(spec.n + 1, '0');
        try {
            basis_state(spec.n + 1, spec.initial);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("invalid initial state: ") + e.what());
        }
        config.job = spec;
    }
    return config;
}

inline ExperimentConfig parse_experiment_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_experiment_config(j);
}

inline Circuit build_circuit(const ExperimentConfig& config) {
    if (const auto* walk = std::get_if<WalkSpec>(&config.job)) {
        return walk_circuit(*walk);
    }
    const auto& conv = std::get<ConvolutionSpec>(config.job);
    Circuit c(conv.n + 1);
    const Circuit step =
        compose(scattering_circuit(conv.n, conv.alpha, conv.theta),
                circulant_propagation(conv.spectrum_c, conv.spectrum_c2));
    for (int s = 0; s < conv.steps; ++s) c.extend(step);
    return c;
}

inline std::string initial_bitstring(const ExperimentConfig& config) {
    if (const auto* walk = std::get_if<WalkSpec>(&config.job)) return walk->initial;
    return std::get<ConvolutionSpec>(config.job).initial;
}

inline ExperimentReport run_experiment(const ExperimentConfig& config) {
    const Circuit circuit = build_circuit(config);
    const Statevector final_state =
        run(circuit, basis_state(circuit.num_qubits(), initial_bitstring(config)));

    ExperimentReport report;
    report.ideal_distribution = distribution(final_state);
    report.sampled_counts = sample(report.ideal_distribution, config.shots, config.seed);
    report.circuit_size = circuit.size();
    report.circuit_depth = circuit.depth();
    if (const auto* walk = std::get_if<WalkSpec>(&config.job)) {
        if (walk->shift == ShiftImpl::Qft) {
            const long long n = walk->n;
            report.paper_size_formula = walk->steps * (n * n + 4 * n + 1);
        }
    }
    Distribution empirical;
    for (const auto& [bits, c] : report.sampled_counts) {
        empirical[bits] = static_cast<double>(c) / static_cast<double>(config.shots);
    }
    report.l1_sampled_vs_ideal = oracle::l1_distance(empirical, report.ideal_distribution);
    return report;
}

inline nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json j{{"ideal_distribution", distribution_to_json(report.ideal_distribution)},
                     {"sampled_counts", counts_to_json(report.sampled_counts)},
                     {"circuit_size", report.circuit_size},
                     {"circuit_depth", report.circuit_depth},
                     {"l1_sampled_vs_ideal", report.l1_sampled_vs_ideal}};
    if (report.paper_size_formula) j["paper_size_formula"] = *report.paper_size_formula;
    return j;
}

/// Text histogram: one sorted row per outcome, bar scaled to 40 columns at
/// probability 1.
inline std::string emit_histogram(const Distribution& dist) {
    std::string out;
    for (const auto& [bits, p] : dist) {
        char prob[24];
        std::snprintf(prob, sizeof(prob), "%.6f", p);
        out += bits;
        out += "  ";
        out += prob;
        out += "  ";
        out.append(static_cast<std::size_t>(std::llround(p * 40.0)), '#');
        out += '\n';
    }
    return out;
}

/// Shift/walk cost table as CSV, one row per n. Formula columns use the
/// closed forms; depth columns for the Fourier route are ASAP depths of the
/// constructed circuits. Out-of-domain cells are left empty.
inline std::string emit_cost_table(int n_min, int n_max) {
    if (n_min < 1 || n_max < n_min) throw ConfigError("bad cost-table range");
    std::string out =
        "n,qft_walk_size,qft_walk_depth,qft_shift_size,qft_shift_depth,"
        "mcx_shift_size_no_ancilla,mcx_shift_depth_no_ancilla,"
        "mcx_shift_size_ancilla,mcx_shift_depth_ancilla,mcx_ancilla_qubits\n";
    for (int n = n_min; n <= n_max; ++n) {
        const auto summary = shift_cost_summary(n);
        const long long nn = n;
        WalkSpec spec{n, 1, 0.0, 0.0, ShiftImpl::Qft, std::string(n + 1, '0')};
        const Circuit walk = walk_circuit(spec);
        out += std::to_string(n) + ',';
        out += std::to_string(nn * nn + 4 * nn + 1) + ',';
        out += std::to_string(walk.depth()) + ',';
        out += std::to_string(summary.qft.size) + ',';
        out += std::to_string(summary.qft.depth) + ',';
        if (summary.mcx_no_ancilla) {
            out += std::to_string(summary.mcx_no_ancilla->size) + ',';
            out += std::to_string(summary.mcx_no_ancilla->depth) + ',';
        } else {
            out += ",,";
        }
        if (summary.mcx_ancilla) {
            out += std::to_string(summary.mcx_ancilla->size) + ',';
            out += std::to_string(summary.mcx_ancilla->depth) + ',';
            out += std::to_string(summary.mcx_ancilla_qubits);
        } else {
            out += ",,";
        }
        out += '\n';
    }
    return out;
}

}  // namespace qwalk
