#pragma once

// Gate vocabulary for the walk circuits.
//
// Register convention: a walk over N = 2^n lattice sites uses n + 1 qubits.
// Position qubit j (0 <= j < n) carries bit 2^j of the site index x, so the
// register is little-endian in position. The velocity (direction) qubit is
// the highest index n, with |0> meaning "move right" and |1> meaning "move
// left". A computational basis label therefore reads v x_{n-1} ... x_0 and
// its statevector index is N*v + x.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qwalk {

using QubitIndex = int;

struct Hadamard {
    QubitIndex target;
};

struct PauliX {
    QubitIndex target;
};

// diag(1, exp(sign * 2*pi*i / 2^k)). Dyadic phases are kept as (k, sign)
// so the QFT ladder and the shift spectrum stay exact instead of drifting
// through radian round-trips.
struct Phase {
    int k;
    int sign;  // +1 or -1
    QubitIndex target;
};

// diag(1, exp(i*theta)) about Z, for angles that are not dyadic.
struct Rotation {
    double theta;
    QubitIndex target;
};

// The 2x2 scattering matrix with diagonal i*e^{i*alpha}*sin(theta) and
// off-diagonal e^{i*alpha}*cos(theta), applied to the velocity qubit.
struct ScatterS {
    double alpha;
    double theta;
    QubitIndex target;
};

struct Cnot {
    QubitIndex control;
    QubitIndex target;
};

// Controlled dyadic phase: diag(1, 1, 1, exp(sign * 2*pi*i / 2^k)) on the
// (control, target) pair. Symmetric in its two qubits.
struct ControlledPhase {
    int k;
    int sign;
    QubitIndex control;
    QubitIndex target;
};

enum class Polarity { OnOne, OnZero };

// Controlled arbitrary-angle phase: the target picks up exp(i*theta) when
// it is |1> and the control satisfies the polarity condition.
struct ControlledRotation {
    double theta;
    QubitIndex control;
    QubitIndex target;
    Polarity polarity = Polarity::OnOne;
};

enum class McxCostMethod { NoAncilla, Ancilla };

// Multi-controlled X, kept as an opaque block: it is simulated exactly and
// charged size/depth from the closed-form cost model of its method rather
// than being lowered to two-qubit gates.
struct MultiControlledX {
    std::vector<QubitIndex> controls;
    QubitIndex target;
    McxCostMethod cost_method = McxCostMethod::NoAncilla;
};

using Gate = std::variant<Hadamard, PauliX, Phase, Rotation, ScatterS, Cnot,
                          ControlledPhase, ControlledRotation, MultiControlledX>;

/// All qubit indices a gate touches, target last.
inline std::vector<QubitIndex> gate_qubits(const Gate& gate) {
    return std::visit(
        [](const auto& g) -> std::vector<QubitIndex> {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Hadamard> || std::is_same_v<T, PauliX> ||
                          std::is_same_v<T, Phase> || std::is_same_v<T, Rotation> ||
                          std::is_same_v<T, ScatterS>) {
                return {g.target};
            } else if constexpr (std::is_same_v<T, Cnot> ||
                                 std::is_same_v<T, ControlledPhase> ||
                                 std::is_same_v<T, ControlledRotation>) {
                return {g.control, g.target};
            } else {
                std::vector<QubitIndex> qs(g.controls.begin(), g.controls.end());
                qs.push_back(g.target);
                return qs;
            }
        },
        gate);
}

/// Adjoint of a single gate. Every kind in the vocabulary is closed under
/// adjoints: dyadic phases flip sign, rotations negate, the scatter matrix
/// conjugates through (alpha, theta) -> (-alpha, -theta), the rest are
/// self-adjoint.
inline Gate gate_adjoint(Gate gate) {
    if (auto* p = std::get_if<Phase>(&gate)) {
        p->sign = -p->sign;
    } else if (auto* r = std::get_if<Rotation>(&gate)) {
        r->theta = -r->theta;
    } else if (auto* s = std::get_if<ScatterS>(&gate)) {
        s->alpha = -s->alpha;
        s->theta = -s->theta;
    } else if (auto* cp = std::get_if<ControlledPhase>(&gate)) {
        cp->sign = -cp->sign;
    } else if (auto* cr = std::get_if<ControlledRotation>(&gate)) {
        cr->theta = -cr->theta;
    }
    return gate;
}

/// Validates index bounds/distinctness and the per-kind field domains.
/// Throws std::invalid_argument on violation.
inline void validate_gate(const Gate& gate, int num_qubits) {
    const auto qs = gate_qubits(gate);
    for (QubitIndex q : qs) {
        if (q < 0 || q >= num_qubits) {
            throw std::invalid_argument("gate qubit index " + std::to_string(q) +
                                        " out of range for " + std::to_string(num_qubits) +
                                        "-qubit register");
        }
    }
    for (std::size_t i = 0; i < qs.size(); ++i) {
        for (std::size_t j = i + 1; j < qs.size(); ++j) {
            if (qs[i] == qs[j]) {
                throw std::invalid_argument("duplicated qubit index " +
                                            std::to_string(qs[i]) + " within gate");
            }
        }
    }
    if (const auto* p = std::get_if<Phase>(&gate)) {
        if (p->k < 1 || (p->sign != 1 && p->sign != -1)) {
            throw std::invalid_argument("phase gate requires k >= 1 and sign +-1");
        }
    } else if (const auto* cp = std::get_if<ControlledPhase>(&gate)) {
        if (cp->k < 1 || (cp->sign != 1 && cp->sign != -1)) {
            throw std::invalid_argument("controlled phase requires k >= 1 and sign +-1");
        }
    } else if (const auto* m = std::get_if<MultiControlledX>(&gate)) {
        if (m->cost_method == McxCostMethod::Ancilla && m->controls.size() + 1 < 4) {
            throw std::invalid_argument(
                "ancilla cost method needs at least 4 qubits (3 controls)");
        }
    }
}

}  // namespace qwalk
