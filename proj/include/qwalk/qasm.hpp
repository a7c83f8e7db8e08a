#pragma once

// OpenQASM 2.0 emission (emit only; there is deliberately no parser here).
//
// Mapping: h/x/cx/ccx verbatim; dyadic and arbitrary phases as u1; the
// controlled variants as cu1, with the on-|0> polarity realized by x
// conjugation on the control line; the scattering gate as rx(pi - 2*theta),
// which matches it up to the global phase e^{i(alpha + pi/2)}. Since u1 and
// cu1 are exactly diag(1, e^{i*lambda}) and its controlled form, every
// emitted program reproduces the simulator's measurement distribution.
// Multi-controlled X has a QASM spelling only at two controls (ccx); wider
// blocks must be decomposed by the caller first.

#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwalk/circuit.hpp"

namespace qwalk {

namespace detail {

inline std::string qasm_dyadic_angle(int k, int sign) {
    std::string s = sign < 0 ? "-pi" : "pi";
    if (k >= 2) s += "/" + std::to_string(1LL << (k - 1));
    return s;
}

inline std::string qasm_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string q(int i) { return "q[" + std::to_string(i) + "]"; }

}  // namespace detail

inline std::string to_qasm(const Circuit& circuit) {
    using detail::q;
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(circuit.num_qubits()) + "];\n";
    out += "creg c[" + std::to_string(circuit.num_qubits()) + "];\n";
    for (const Gate& gate : circuit.gates()) {
        std::visit(
            [&out](const auto& g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, Hadamard>) {
                    out += "h " + q(g.target) + ";\n";
                } else if constexpr (std::is_same_v<T, PauliX>) {
                    out += "x " + q(g.target) + ";\n";
                } else if constexpr (std::is_same_v<T, Phase>) {
                    out += "u1(" + detail::qasm_dyadic_angle(g.k, g.sign) + ") " +
                           q(g.target) + ";\n";
                } else if constexpr (std::is_same_v<T, Rotation>) {
                    out += "u1(" + detail::qasm_real(g.theta) + ") " + q(g.target) + ";\n";
                } else if constexpr (std::is_same_v<T, ScatterS>) {
                    out += "rx(" + detail::qasm_real(std::numbers::pi - 2.0 * g.theta) +
                           ") " + q(g.target) + ";\n";
                } else if constexpr (std::is_same_v<T, Cnot>) {
                    out += "cx " + q(g.control) + "," + q(g.target) + ";\n";
                } else if constexpr (std::is_same_v<T, ControlledPhase>) {
                    out += "cu1(" + detail::qasm_dyadic_angle(g.k, g.sign) + ") " +
                           q(g.control) + "," + q(g.target) + ";\n";
                } else if constexpr (std::is_same_v<T, ControlledRotation>) {
                    const std::string cu1 = "cu1(" + detail::qasm_real(g.theta) + ") " +
                                            q(g.control) + "," + q(g.target) + ";\n";
                    if (g.polarity == Polarity::OnZero) {
                        out += "x " + q(g.control) + ";\n" + cu1 + "x " + q(g.control) +
                               ";\n";
                    } else {
                        out += cu1;
                    }
                } else {  // MultiControlledX
                    if (g.controls.size() == 2) {
                        out += "ccx " + q(g.controls[0]) + "," + q(g.controls[1]) + "," +
                               q(g.target) + ";\n";
                    } else if (g.controls.size() == 1) {
                        out += "cx " + q(g.controls[0]) + "," + q(g.target) + ";\n";
                    } else if (g.controls.empty()) {
                        out += "x " + q(g.target) + ";\n";
                    } else {
                        throw std::invalid_argument(
                            "multi-controlled X with more than 2 controls has no QASM "
                            "spelling; rebuild the circuit with at most 2-control blocks");
                    }
                }
            },
            gate);
    }
    out += "measure q -> c;\n";
    return out;
}

}  // namespace qwalk
