#pragma once

// Dense statevector simulation. Gates mix amplitudes in place over strided
// index pairs, O(2^q) per gate; more than enough for the desk scale this
// library targets (q <= 12).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwalk/circuit.hpp"
#include "qwalk/dense_matrix.hpp"
#include "qwalk/distribution.hpp"

namespace qwalk {

struct Statevector {
    int num_qubits = 0;
    std::vector<Complex> amps;

    double norm() const {
        double s = 0.0;
        for (const Complex& a : amps) s += std::norm(a);
        return std::sqrt(s);
    }
};

/// Exact dyadic phase exp(sign * 2*pi*i / 2^k).
inline Complex dyadic_phase(int k, int sign) {
    return std::exp(Complex(0.0, sign * 2.0 * std::numbers::pi / std::ldexp(1.0, k)));
}

/// Basis state from its bitstring label; the leftmost character is the
/// highest qubit (the velocity qubit of a walk register).
inline Statevector basis_state(int num_qubits, std::string_view bits) {
    if (static_cast<int>(bits.size()) != num_qubits) {
        throw std::invalid_argument("bitstring length must equal qubit count");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may only contain 0 and 1");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c - '0');
    }
    Statevector psi;
    psi.num_qubits = num_qubits;
    psi.amps.assign(std::uint64_t{1} << num_qubits, Complex{});
    psi.amps[index] = 1.0;
    return psi;
}

inline std::string bitstring_of_index(std::uint64_t index, int num_qubits) {
    std::string s(num_qubits, '0');
    for (int q = 0; q < num_qubits; ++q) {
        if (index >> q & 1ULL) s[num_qubits - 1 - q] = '1';
    }
    return s;
}

namespace detail {

inline void apply_single_qubit(std::vector<Complex>& amps, QubitIndex target,
                               Complex u00, Complex u01, Complex u10, Complex u11) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & bit) continue;
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | bit];
        amps[i] = u00 * a0 + u01 * a1;
        amps[i | bit] = u10 * a0 + u11 * a1;
    }
}

inline void apply_phase_if(std::vector<Complex>& amps, std::uint64_t ones_mask,
                           std::uint64_t zeros_mask, Complex phase) {
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & ones_mask) == ones_mask && (i & zeros_mask) == 0) amps[i] *= phase;
    }
}

}  // namespace detail

inline void apply_gate_in_place(Statevector& state, const Gate& gate) {
    validate_gate(gate, state.num_qubits);
    auto& amps = state.amps;
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, Hadamard>) {
                const double r = 1.0 / std::numbers::sqrt2;
                detail::apply_single_qubit(amps, g.target, r, r, r, -r);
            } else if constexpr (std::is_same_v<T, PauliX>) {
                detail::apply_single_qubit(amps, g.target, 0, 1, 1, 0);
            } else if constexpr (std::is_same_v<T, Phase>) {
                detail::apply_phase_if(amps, std::uint64_t{1} << g.target, 0,
                                       dyadic_phase(g.k, g.sign));
            } else if constexpr (std::is_same_v<T, Rotation>) {
                detail::apply_phase_if(amps, std::uint64_t{1} << g.target, 0,
                                       std::exp(Complex(0.0, g.theta)));
            } else if constexpr (std::is_same_v<T, ScatterS>) {
                const Complex phase = std::exp(Complex(0.0, g.alpha));
                const Complex d = Complex(0.0, 1.0) * phase * std::sin(g.theta);
                const Complex o = phase * std::cos(g.theta);
                detail::apply_single_qubit(amps, g.target, d, o, o, d);
            } else if constexpr (std::is_same_v<T, Cnot>) {
                const std::uint64_t cbit = std::uint64_t{1} << g.control;
                const std::uint64_t tbit = std::uint64_t{1} << g.target;
                for (std::uint64_t i = 0; i < amps.size(); ++i) {
                    if ((i & cbit) && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
                }
            } else if constexpr (std::is_same_v<T, ControlledPhase>) {
                const std::uint64_t mask = (std::uint64_t{1} << g.control) |
                                           (std::uint64_t{1} << g.target);
                detail::apply_phase_if(amps, mask, 0, dyadic_phase(g.k, g.sign));
            } else if constexpr (std::is_same_v<T, ControlledRotation>) {
                const std::uint64_t cbit = std::uint64_t{1} << g.control;
                const std::uint64_t tbit = std::uint64_t{1} << g.target;
                const Complex phase = std::exp(Complex(0.0, g.theta));
                if (g.polarity == Polarity::OnOne) {
                    detail::apply_phase_if(amps, cbit | tbit, 0, phase);
                } else {
                    detail::apply_phase_if(amps, tbit, cbit, phase);
                }
            } else {  // MultiControlledX, applied exactly
                std::uint64_t cmask = 0;
                for (QubitIndex c : g.controls) cmask |= std::uint64_t{1} << c;
                const std::uint64_t tbit = std::uint64_t{1} << g.target;
                for (std::uint64_t i = 0; i < amps.size(); ++i) {
                    if ((i & cmask) == cmask && !(i & tbit)) {
                        std::swap(amps[i], amps[i | tbit]);
                    }
                }
            }
        },
        gate);
}

inline Statevector apply_gate(Statevector state, const Gate& gate) {
    apply_gate_in_place(state, gate);
    return state;
}

inline Statevector run(const Circuit& circuit, Statevector initial) {
    if (circuit.num_qubits() != initial.num_qubits) {
        throw std::invalid_argument("circuit and state register widths differ");
    }
    for (const Gate& g : circuit.gates()) apply_gate_in_place(initial, g);
    return initial;
}

/// Exact outcome probabilities; entries below 1e-12 are omitted.
inline Distribution distribution(const Statevector& state) {
    if (std::abs(state.norm() - 1.0) > 1e-8) {
        throw std::invalid_argument("distribution requires a normalized state");
    }
    Distribution dist;
    for (std::uint64_t i = 0; i < state.amps.size(); ++i) {
        const double p = std::norm(state.amps[i]);
        if (p >= 1e-12) dist[bitstring_of_index(i, state.num_qubits)] = p;
    }
    return dist;
}

/// Multinomial sampling, deterministic for a fixed seed.
inline Counts sample(const Distribution& dist, long long shots, std::uint64_t seed) {
    if (dist.empty()) throw std::invalid_argument("cannot sample an empty distribution");
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    std::vector<std::pair<double, const std::string*>> cumulative;
    cumulative.reserve(dist.size());
    double total = 0.0;
    for (const auto& [bits, p] : dist) {
        total += p;
        cumulative.emplace_back(total, &bits);
    }
    std::mt19937_64 rng(seed);
    Counts counts;
    for (long long s = 0; s < shots; ++s) {
        // 53-bit uniform in [0, 1); avoids distribution objects that vary
        // across standard libraries.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        auto it = std::lower_bound(
            cumulative.begin(), cumulative.end(), u,
            [](const auto& entry, double v) { return entry.first <= v; });
        if (it == cumulative.end()) --it;
        ++counts[*it->second];
    }
    return counts;
}

/// Full unitary by running every basis column; guarded to small registers.
inline DenseMatrix circuit_unitary(const Circuit& circuit) {
    const int q = circuit.num_qubits();
    if (q > 12) throw std::invalid_argument("register too wide for dense unitary");
    const std::uint64_t dim = std::uint64_t{1} << q;
    DenseMatrix u(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        Statevector psi;
        psi.num_qubits = q;
        psi.amps.assign(dim, Complex{});
        psi.amps[col] = 1.0;
        psi = run(circuit, std::move(psi));
        for (std::uint64_t row = 0; row < dim; ++row) u.at(row, col) = psi.amps[row];
    }
    return u;
}

}  // namespace qwalk
