#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qwalk/gate.hpp"

namespace qwalk {

// Cost of one multi-controlled X block over total_qubits = controls + target,
// in (at most) two-qubit gates. Blocks of width <= 2 are ordinary gates; a
// width-3 block (Toffoli) is always charged the no-ancilla figures since the
// ancilla construction needs at least 4 qubits.
struct McxBlockCost {
    long long size;
    long long depth;
    int ancillas;
};

inline McxBlockCost mcx_block_cost(int total_qubits, McxCostMethod method) {
    const long long m = total_qubits;
    if (m <= 2) return {1, 1, 0};
    if (m == 3 || method == McxCostMethod::NoAncilla) {
        return {2 * m * m - 6 * m + 5, 8 * m - 20, 0};
    }
    return {20 * (m - 3), 16 * (m - 3), static_cast<int>(m - 3)};
}

/// An ordered gate sequence over a fixed register. Value-semantic: build it
/// up with append, then treat it as immutable and share freely.
class Circuit {
public:
    explicit Circuit(int num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits < 1) {
            throw std::invalid_argument("circuit needs at least one qubit");
        }
    }

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }

    void append(Gate gate) {
        validate_gate(gate, num_qubits_);
        gates_.push_back(std::move(gate));
    }

    void extend(const Circuit& other) {
        if (other.num_qubits_ != num_qubits_) {
            throw std::invalid_argument("cannot extend across register widths");
        }
        gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    }

    /// Size in (at most) two-qubit gates: 1 per ordinary gate, the cost-model
    /// size per multi-controlled X block.
    long long size() const {
        long long total = 0;
        for (const Gate& g : gates_) {
            if (const auto* m = std::get_if<MultiControlledX>(&g)) {
                total += mcx_block_cost(static_cast<int>(m->controls.size()) + 1,
                                        m->cost_method)
                             .size;
            } else {
                total += 1;
            }
        }
        return total;
    }

    /// ASAP-layered depth: each gate lands one layer past the latest busy
    /// layer among its qubits; a multi-controlled X occupies its cost-model
    /// depth as an opaque block across all of its qubits.
    long long depth() const {
        std::vector<long long> busy_until(num_qubits_, 0);
        long long overall = 0;
        for (const Gate& g : gates_) {
            long long block = 1;
            if (const auto* m = std::get_if<MultiControlledX>(&g)) {
                block = mcx_block_cost(static_cast<int>(m->controls.size()) + 1,
                                       m->cost_method)
                            .depth;
            }
            long long start = 0;
            const auto qs = gate_qubits(g);
            for (QubitIndex q : qs) start = std::max(start, busy_until[q]);
            for (QubitIndex q : qs) busy_until[q] = start + block;
            overall = std::max(overall, start + block);
        }
        return overall;
    }

private:
    int num_qubits_;
    std::vector<Gate> gates_;
};

/// Adjoint circuit: gates reversed, each replaced by its adjoint.
inline Circuit inverse(const Circuit& c) {
    Circuit out(c.num_qubits());
    const auto& gs = c.gates();
    for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
        out.append(gate_adjoint(*it));
    }
    return out;
}

/// Gates of a followed by gates of b; widths must match.
inline Circuit compose(const Circuit& a, const Circuit& b) {
    Circuit out = a;
    out.extend(b);
    return out;
}

/// The same gate sequence lifted onto a wider register (extra qubits idle).
inline Circuit widened(const Circuit& c, int num_qubits) {
    if (num_qubits < c.num_qubits()) {
        throw std::invalid_argument("widened cannot shrink a circuit");
    }
    Circuit out(num_qubits);
    for (const Gate& g : c.gates()) out.append(g);
    return out;
}

}  // namespace qwalk
