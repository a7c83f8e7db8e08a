#pragma once

// Versioned JSON form of a circuit, for persistence and interchange.
// {"version": 1, "num_qubits": n, "gates": [{"kind": "...", ...}, ...]}

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qwalk/circuit.hpp"

namespace qwalk {

inline constexpr int kCircuitJsonVersion = 1;

inline nlohmann::json circuit_to_json(const Circuit& circuit) {
    nlohmann::json gates = nlohmann::json::array();
    for (const Gate& gate : circuit.gates()) {
        nlohmann::json j;
        std::visit(
            [&j](const auto& g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, Hadamard>) {
                    j = {{"kind", "h"}, {"target", g.target}};
                } else if constexpr (std::is_same_v<T, PauliX>) {
                    j = {{"kind", "x"}, {"target", g.target}};
                } else if constexpr (std::is_same_v<T, Phase>) {
                    j = {{"kind", "phase"}, {"k", g.k}, {"sign", g.sign},
                         {"target", g.target}};
                } else if constexpr (std::is_same_v<T, Rotation>) {
                    j = {{"kind", "rot"}, {"theta", g.theta}, {"target", g.target}};
                } else if constexpr (std::is_same_v<T, ScatterS>) {
                    j = {{"kind", "scatter"}, {"alpha", g.alpha}, {"theta", g.theta},
                         {"target", g.target}};
                } else if constexpr (std::is_same_v<T, Cnot>) {
                    j = {{"kind", "cx"}, {"control", g.control}, {"target", g.target}};
                } else if constexpr (std::is_same_v<T, ControlledPhase>) {
                    j = {{"kind", "cphase"}, {"k", g.k}, {"sign", g.sign},
                         {"control", g.control}, {"target", g.target}};
                } else if constexpr (std::is_same_v<T, ControlledRotation>) {
                    j = {{"kind", "crot"}, {"theta", g.theta}, {"control", g.control},
                         {"target", g.target},
                         {"polarity", g.polarity == Polarity::OnOne ? "one" : "zero"}};
                } else {
                    j = {{"kind", "mcx"}, {"controls", g.controls}, {"target", g.target},
                         {"cost_method",
                          g.cost_method == McxCostMethod::NoAncilla ? "no_ancilla"
                                                                    : "ancilla"}};
                }
            },
            gate);
        gates.push_back(std::move(j));
    }
    return {{"version", kCircuitJsonVersion},
            {"num_qubits", circuit.num_qubits()},
            {"gates", std::move(gates)}};
}

inline Circuit circuit_from_json(const nlohmann::json& j) {
    if (!j.contains("version") || j.at("version").get<int>() != kCircuitJsonVersion) {
        throw std::invalid_argument("unsupported circuit JSON version");
    }
    Circuit circuit(j.at("num_qubits").get<int>());
    for (const auto& g : j.at("gates")) {
        const std::string kind = g.at("kind").get<std::string>();
        if (kind == "h") {
            circuit.append(Hadamard{g.at("target").get<int>()});
        } else if (kind == "x") {
            circuit.append(PauliX{g.at("target").get<int>()});
        } else if (kind == "phase") {
            circuit.append(Phase{g.at("k").get<int>(), g.at("sign").get<int>(),
                                 g.at("target").get<int>()});
        } else if (kind == "rot") {
            circuit.append(Rotation{g.at("theta").get<double>(), g.at("target").get<int>()});
        } else if (kind == "scatter") {
            circuit.append(ScatterS{g.at("alpha").get<double>(),
                                    g.at("theta").get<double>(), g.at("target").get<int>()});
        } else if (kind == "cx") {
            circuit.append(Cnot{g.at("control").get<int>(), g.at("target").get<int>()});
        } else if (kind == "cphase") {
            circuit.append(ControlledPhase{g.at("k").get<int>(), g.at("sign").get<int>(),
                                           g.at("control").get<int>(),
                                           g.at("target").get<int>()});
        } else if (kind == "crot") {
            const std::string pol = g.at("polarity").get<std::string>();
            if (pol != "one" && pol != "zero") {
                throw std::invalid_argument("bad polarity: " + pol);
            }
            circuit.append(ControlledRotation{
                g.at("theta").get<double>(), g.at("control").get<int>(),
                g.at("target").get<int>(),
                pol == "one" ? Polarity::OnOne : Polarity::OnZero});
        } else if (kind == "mcx") {
            const std::string method = g.at("cost_method").get<std::string>();
            if (method != "no_ancilla" && method != "ancilla") {
                throw std::invalid_argument("bad cost_method: " + method);
            }
            circuit.append(MultiControlledX{
                g.at("controls").get<std::vector<QubitIndex>>(), g.at("target").get<int>(),
                method == "no_ancilla" ? McxCostMethod::NoAncilla
                                       : McxCostMethod::Ancilla});
        } else {
            throw std::invalid_argument("unknown gate kind: " + kind);
        }
    }
    return circuit;
}

}  // namespace qwalk
