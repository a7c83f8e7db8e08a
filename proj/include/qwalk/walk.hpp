#pragma once

// Constructors for the walk circuits. A walk over N = 2^n sites uses the
// register described in gate.hpp: position qubits 0..n-1, velocity qubit n.
//
// One evolution step is scattering on the velocity qubit followed by the
// propagation stage, which realizes block-diag(X, X^T) from a single
// increment: conjugating the increment with a velocity-controlled flip of
// every position bit (the exchange permutation) turns it into a decrement
// exactly on the v = 1 branch. The increment itself is pluggable: either
// the Fourier route (transform, phase ramp, inverse transform) or a cascade
// of multi-controlled X gates.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "qwalk/circuit.hpp"
#include "qwalk/simulator.hpp"

namespace qwalk {

enum class ShiftImpl { Qft, Mcx };

struct WalkSpec {
    int n = 1;           // position qubits; lattice size is 2^n
    int steps = 1;       // evolution steps, >= 0
    double alpha = 0.0;  // scattering parameters, radians
    double theta = 0.0;
    ShiftImpl shift = ShiftImpl::Qft;
    std::string initial;  // basis bitstring of length n + 1, velocity first
};

inline void validate_walk_spec(const WalkSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("walk needs at least one position qubit");
    if (spec.steps < 0) throw std::invalid_argument("steps must be >= 0");
    basis_state(spec.n + 1, spec.initial);  // throws on malformed bitstrings
}

/// Scattering on the velocity qubit, identity on position: S tensor I.
inline Circuit scattering_circuit(int n, double alpha, double theta) {
    Circuit c(n + 1);
    c.append(ScatterS{alpha, theta, n});
    return c;
}

/// Velocity-controlled exchange: a CNOT from the velocity qubit onto every
/// position qubit. On the v = 1 branch this complements every position bit,
/// i.e. applies the anti-diagonal permutation x -> N-1-x. The CNOTs commute,
/// so the target order is immaterial; ascending is used for reproducible
/// output.
inline Circuit controlled_exchange_circuit(int n) {
    Circuit c(n + 1);
    for (int j = 0; j < n; ++j) c.append(Cnot{n, j});
    return c;
}

/// Fourier transform on n position qubits: the Hadamard + controlled-phase
/// ladder, msb first. Without swaps the output wires are bit-reversed;
/// include_swaps appends floor(n/2) swaps (3 CNOTs each) so the unitary is
/// the DFT matrix itself.
inline Circuit qft_circuit(int n, bool include_swaps) {
    if (n < 1) throw std::invalid_argument("qft needs at least one qubit");
    Circuit c(n);
    for (int i = n - 1; i >= 0; --i) {
        c.append(Hadamard{i});
        for (int j = i - 1; j >= 0; --j) {
            c.append(ControlledPhase{i - j + 1, +1, j, i});
        }
    }
    if (include_swaps) {
        for (int j = 0; j < n / 2; ++j) {
            const int k = n - 1 - j;
            c.append(Cnot{j, k});
            c.append(Cnot{k, j});
            c.append(Cnot{j, k});
        }
    }
    return c;
}

/// Dyadic phase level carried by position qubit j in the linear phase ramp
/// diag(1, w, w^2, ...), w = exp(2*pi*i/2^n): qubit j contributes
/// diag(1, exp(2*pi*i/2^(n-j))). When the ramp sits between a swap-free
/// transform and its inverse, the levels are assigned in reversed wire
/// order instead, which absorbs the omitted swaps.
inline int phase_ramp_level(int n, int qubit, bool swap_absorbed) {
    return swap_absorbed ? qubit + 1 : n - qubit;
}

/// The diagonal phase ramp diag(w^x) over position, one dyadic phase gate
/// per qubit; conjugate negates every phase (the elementwise conjugate ramp).
inline Circuit phase_ramp_circuit(int n, bool conjugate, bool swap_absorbed) {
    if (n < 1) throw std::invalid_argument("phase ramp needs at least one qubit");
    Circuit c(n);
    for (int j = 0; j < n; ++j) {
        c.append(Phase{phase_ramp_level(n, j, swap_absorbed), conjugate ? -1 : +1, j});
    }
    return c;
}

/// Increment via the Fourier route: transform, phase ramp, inverse
/// transform, with the terminal swaps of both transforms absorbed into the
/// ramp's wire assignment. Size n^2 + 2n.
inline Circuit shift_qft_circuit(int n) {
    const Circuit f = qft_circuit(n, false);
    return compose(compose(f, phase_ramp_circuit(n, false, true)), inverse(f));
}

/// Increment as a ripple cascade of multi-controlled X gates: flip bit n-1
/// controlled on all lower bits, then bit n-2 on its lower bits, down to a
/// bare flip of bit 0.
inline Circuit shift_mcx_circuit(int n, McxCostMethod method = McxCostMethod::NoAncilla) {
    if (n < 1) throw std::invalid_argument("shift needs at least one qubit");
    Circuit c(n);
    for (int t = n - 1; t >= 2; --t) {
        std::vector<QubitIndex> controls;
        for (int j = 0; j < t; ++j) controls.push_back(j);
        c.append(MultiControlledX{std::move(controls), t,
                                  t >= 3 ? method : McxCostMethod::NoAncilla});
    }
    if (n >= 2) c.append(Cnot{0, 1});
    c.append(PauliX{0});
    return c;
}

/// Cost model for one multi-controlled X over n_total qubits, in (at most)
/// two-qubit gates: without ancillas size 2n^2-6n+5 and depth 8n-20 (n >= 3);
/// with n-3 reusable ancillas size 20(n-3) and depth 16(n-3) (n >= 4).
inline McxBlockCost mcx_cost(int n_total, McxCostMethod method) {
    if (method == McxCostMethod::NoAncilla && n_total < 3) {
        throw std::invalid_argument("no-ancilla cost model needs n >= 3");
    }
    if (method == McxCostMethod::Ancilla && n_total < 4) {
        throw std::invalid_argument("ancilla cost model needs n >= 4");
    }
    return mcx_block_cost(n_total, method);
}

struct SizeDepth {
    long long size;
    long long depth;
};

struct ShiftCostSummary {
    SizeDepth qft;                              // n^2 + 2n and the ASAP depth
    std::optional<SizeDepth> mcx_no_ancilla;    // n >= 3
    std::optional<SizeDepth> mcx_ancilla;       // n >= 4
    int mcx_ancilla_qubits = 0;                 // n - 3 when present
};

/// Closed-form shift costs per implementation. The cascade totals follow
/// from summing the per-block model over widths 3..n plus the closing CNOT
/// and X: size n(2n^2-6n+7)/3 and depth 2(2n^2-8n+9) without ancillas;
/// size 10n^2-50n+67 and depth 2(4n^2-20n+27) with them.
inline ShiftCostSummary shift_cost_summary(int n) {
    if (n < 1) throw std::invalid_argument("shift cost summary needs n >= 1");
    ShiftCostSummary s{};
    const long long nn = n;
    s.qft = {nn * nn + 2 * nn, shift_qft_circuit(n).depth()};
    if (n >= 3) {
        s.mcx_no_ancilla = SizeDepth{nn * (2 * nn * nn - 6 * nn + 7) / 3,
                                     2 * (2 * nn * nn - 8 * nn + 9)};
    }
    if (n >= 4) {
        s.mcx_ancilla = SizeDepth{10 * nn * nn - 50 * nn + 67,
                                  2 * (4 * nn * nn - 20 * nn + 27)};
        s.mcx_ancilla_qubits = n - 3;
    }
    return s;
}

/// The propagation stage block-diag(X, X^T) on the full register:
/// controlled exchange, increment on position, controlled exchange again.
inline Circuit propagation_circuit(int n, ShiftImpl impl) {
    const Circuit flip = controlled_exchange_circuit(n);
    const Circuit shift =
        impl == ShiftImpl::Qft ? shift_qft_circuit(n) : shift_mcx_circuit(n);
    return compose(compose(flip, widened(shift, n + 1)), flip);
}

/// Full multi-step walk: per step, scattering then propagation. Size per
/// step with the Fourier shift is n^2 + 4n + 1.
inline Circuit walk_circuit(const WalkSpec& spec) {
    validate_walk_spec(spec);
    Circuit c(spec.n + 1);
    const Circuit step = compose(scattering_circuit(spec.n, spec.alpha, spec.theta),
                                 propagation_circuit(spec.n, spec.shift));
    for (int s = 0; s < spec.steps; ++s) c.extend(step);
    return c;
}

}  // namespace qwalk
