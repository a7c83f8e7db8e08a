#pragma once

// Propagation by unitary circulant matrices. The Fourier transform
// diagonalizes every circulant, so block-diag(C, C') factors into a
// transform, a velocity-controlled pair of diagonal phase unitaries, and
// the inverse transform.
//
// Diagonal synthesis is exact: the phase vector's Walsh-Hadamard transform
// yields one phase angle per bit-parity mask, and each nonzero mask becomes
// a rotation on a parity wire prepared by CNOTs. Masks sharing a lowest bit
// are visited in Gray-code order over their remaining bits, walking the
// parity wire directly between the masks that actually carry weight, so a
// dense spectrum costs at most 2^n - 1 rotations plus 2^n - 1 CNOTs and a
// bitwise-linear spectrum (the shift's ramp) collapses to n bare rotations.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qwalk/circuit.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

struct CirculantKernel {
    std::vector<Complex> first_row;
};

struct PhaseSpectrum {
    std::vector<double> thetas;  // eigenphases; the diagonal is diag(e^{i theta_k})
};

namespace detail {

inline int log2_exact(std::size_t n) {
    int bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    if ((std::size_t{1} << bits) != n) {
        throw std::invalid_argument("length must be a power of two");
    }
    return bits;
}

// In-place Walsh-Hadamard butterfly; divides by the length so the output
// coefficients a_m satisfy theta_x = sum_m a_m * (-1)^popcount(m & x).
inline std::vector<double> walsh_coefficients(std::vector<double> theta) {
    const std::size_t n = theta.size();
    log2_exact(n);
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t i = 0; i < n; i += half << 1) {
            for (std::size_t j = i; j < i + half; ++j) {
                const double a = theta[j];
                const double b = theta[j + half];
                theta[j] = a + b;
                theta[j + half] = a - b;
            }
        }
    }
    for (double& v : theta) v /= static_cast<double>(n);
    return theta;
}

struct ParityTerm {
    std::uint32_t mask;  // nonzero bit-parity mask
    double lambda;       // phase picked up when the parity is odd
};

// theta_x - theta_0 = sum over terms of lambda * parity(mask & x), exactly.
inline std::vector<ParityTerm> parity_terms(const std::vector<double>& thetas) {
    const auto coeff = walsh_coefficients(thetas);
    std::vector<ParityTerm> terms;
    for (std::uint32_t m = 1; m < coeff.size(); ++m) {
        const double lambda = -2.0 * coeff[m];
        if (std::abs(lambda) > 1e-13) terms.push_back({m, lambda});
    }
    return terms;
}

inline std::uint32_t gray_rank(std::uint32_t gray) {
    std::uint32_t rank = gray;
    for (std::uint32_t shift = 1; shift < 32; shift <<= 1) rank ^= rank >> shift;
    return rank;
}

// Emits the parity network for the given terms onto `circuit`, calling
// rotate(angle, wire) wherever a phase belongs. Only the wire currently
// holding a parity is ever a CNOT target, so the scaffolding nets to the
// identity around the rotations.
template <typename RotateFn>
void emit_parity_network(Circuit& circuit, int n, std::vector<ParityTerm> terms,
                         RotateFn&& rotate) {
    for (int t = 0; t < n; ++t) {
        // Terms whose lowest set bit is t; their parities live on wire t.
        std::vector<ParityTerm> block;
        for (const ParityTerm& term : terms) {
            if ((term.mask & ((1U << (t + 1)) - 1U)) == (1U << t)) block.push_back(term);
        }
        std::sort(block.begin(), block.end(), [t](const ParityTerm& a, const ParityTerm& b) {
            return gray_rank(a.mask >> (t + 1)) < gray_rank(b.mask >> (t + 1));
        });
        std::uint32_t current = 0;  // parity bits (absolute, above t) on wire t
        auto walk_to = [&](std::uint32_t next) {
            std::uint32_t diff = current ^ next;
            while (diff != 0) {
                const int bit = std::countr_zero(diff);
                circuit.append(Cnot{t + 1 + bit, t});
                diff &= diff - 1;
            }
            current = next;
        };
        for (const ParityTerm& term : block) {
            walk_to(term.mask >> (t + 1));
            rotate(term.lambda, t);
        }
        walk_to(0);
    }
}

}  // namespace detail

/// Eigenphases of the circulant with the given first row, in the Fourier
/// order that reconstructs the matrix as transform-adjoint * diag * transform.
/// Rejects kernels whose eigenvalue moduli stray from 1 by more than 1e-8.
inline PhaseSpectrum spectrum_of_circulant(const CirculantKernel& kernel) {
    const std::size_t n = kernel.first_row.size();
    if (n == 0) throw std::invalid_argument("empty circulant kernel");
    PhaseSpectrum spectrum;
    spectrum.thetas.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex lambda = 0.0;
        for (std::size_t d = 0; d < n; ++d) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) *
                                 static_cast<double>(d) / static_cast<double>(n);
            lambda += kernel.first_row[d] * std::exp(Complex(0.0, angle));
        }
        if (std::abs(std::abs(lambda) - 1.0) > 1e-8) {
            throw std::invalid_argument("kernel is not unitary: eigenvalue modulus " +
                                        std::to_string(std::abs(lambda)));
        }
        spectrum.thetas.push_back(std::arg(lambda));
    }
    return spectrum;
}

/// Inverse of spectrum_of_circulant (up to eigenvalue-modulus rounding).
inline CirculantKernel kernel_from_spectrum(const PhaseSpectrum& spectrum) {
    const std::size_t n = spectrum.thetas.size();
    if (n == 0) throw std::invalid_argument("empty spectrum");
    CirculantKernel kernel;
    kernel.first_row.assign(n, Complex{});
    for (std::size_t d = 0; d < n; ++d) {
        Complex c = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) *
                                 static_cast<double>(d) / static_cast<double>(n);
            c += std::exp(Complex(0.0, spectrum.thetas[k] + angle));
        }
        kernel.first_row[d] = c / static_cast<double>(n);
    }
    return kernel;
}

/// Exact circuit for diag(e^{i theta_x}) over n = log2(len) qubits, up to a
/// global phase.
inline Circuit diagonal_circuit(const PhaseSpectrum& spectrum) {
    const int n = detail::log2_exact(spectrum.thetas.size());
    Circuit c(n);
    detail::emit_parity_network(c, n, detail::parity_terms(spectrum.thetas),
                                [&c](double angle, int wire) {
                                    c.append(Rotation{angle, wire});
                                });
    return c;
}

struct TruncatedDiagonal {
    Circuit circuit;
    double error_bound;  // operator-norm bound on the synthesis error
};

/// Like diagonal_circuit but keeping only the max_rotations largest-weight
/// parity terms. The reported bound is the sum of dropped phase magnitudes,
/// which dominates || exact - truncated || in operator norm.
inline TruncatedDiagonal diagonal_circuit_truncated(const PhaseSpectrum& spectrum,
                                                    std::size_t max_rotations) {
    const int n = detail::log2_exact(spectrum.thetas.size());
    auto terms = detail::parity_terms(spectrum.thetas);
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return std::abs(a.lambda) > std::abs(b.lambda);
    });
    double dropped = 0.0;
    if (terms.size() > max_rotations) {
        for (std::size_t i = max_rotations; i < terms.size(); ++i) {
            dropped += std::abs(terms[i].lambda);
        }
        terms.resize(max_rotations);
    }
    TruncatedDiagonal out{Circuit(n), dropped};
    detail::emit_parity_network(out.circuit, n, std::move(terms),
                                [&out](double angle, int wire) {
                                    out.circuit.append(Rotation{angle, wire});
                                });
    return out;
}

/// Velocity-controlled diagonal on an (n+1)-qubit register: applies
/// diag(e^{i theta_x}) to position exactly when the velocity qubit matches
/// the polarity, and the identity otherwise. The parity-mask rotations
/// become velocity-controlled rotations; the constant phase theta_0 that
/// plain synthesis would shed as a global phase is physical here (it is the
/// relative phase between the two velocity blocks) and is restored by one
/// phase on the velocity wire itself, conditioned via X conjugation for the
/// on-|0> polarity.
inline Circuit controlled_diagonal(const PhaseSpectrum& spectrum, Polarity polarity) {
    const int n = detail::log2_exact(spectrum.thetas.size());
    const int velocity = n;
    Circuit c(n + 1);
    detail::emit_parity_network(
        c, n, detail::parity_terms(spectrum.thetas),
        [&c, velocity, polarity](double angle, int wire) {
            c.append(ControlledRotation{angle, velocity, wire, polarity});
        });
    const double theta0 = spectrum.thetas[0];
    if (std::abs(theta0) > 1e-13) {
        if (polarity == Polarity::OnZero) c.append(PauliX{velocity});
        c.append(Rotation{theta0, velocity});
        if (polarity == Polarity::OnZero) c.append(PauliX{velocity});
    }
    return c;
}

/// Propagation block-diag(C, C') from the two blocks' eigenphases:
/// transform, controlled diagonal for each velocity branch, inverse
/// transform.
inline Circuit circulant_propagation(const PhaseSpectrum& spectrum_c,
                                     const PhaseSpectrum& spectrum_c2) {
    if (spectrum_c.thetas.size() != spectrum_c2.thetas.size()) {
        throw std::invalid_argument("circulant blocks must have equal size");
    }
    const int n = detail::log2_exact(spectrum_c.thetas.size());
    const Circuit f = widened(qft_circuit(n, true), n + 1);
    Circuit c = f;
    c.extend(controlled_diagonal(spectrum_c2, Polarity::OnOne));
    c.extend(controlled_diagonal(spectrum_c, Polarity::OnZero));
    c.extend(inverse(f));
    return c;
}

inline Circuit circulant_propagation(const CirculantKernel& kernel_c,
                                     const CirculantKernel& kernel_c2) {
    if (kernel_c.first_row.size() != kernel_c2.first_row.size()) {
        throw std::invalid_argument("circulant blocks must have equal size");
    }
    return circulant_propagation(spectrum_of_circulant(kernel_c),
                                 spectrum_of_circulant(kernel_c2));
}

/// The closed-form controlled phase-ramp ladder: n velocity-controlled
/// dyadic phases applying the ramp (or its conjugate) to one velocity
/// branch. The on-|0> branch is reached by X conjugation on the velocity
/// wire.
inline Circuit controlled_ramp_ladder(int n, bool conjugate, Polarity polarity,
                                      bool swap_absorbed) {
    if (n < 1) throw std::invalid_argument("ladder needs at least one position qubit");
    Circuit c(n + 1);
    if (polarity == Polarity::OnZero) c.append(PauliX{n});
    for (int j = 0; j < n; ++j) {
        c.append(ControlledPhase{phase_ramp_level(n, j, swap_absorbed),
                                 conjugate ? -1 : +1, n, j});
    }
    if (polarity == Polarity::OnZero) c.append(PauliX{n});
    return c;
}

/// The basic walk rebuilt on the circulant route: the increment and
/// decrement blocks are the ramp and conjugate ramp in Fourier space, so
/// one transform pair per step carries both directions, steered by the
/// controlled ladders instead of general synthesis.
inline Circuit walk_via_circulant(int n, double alpha, double theta, int steps) {
    if (n < 1) throw std::invalid_argument("walk needs at least one position qubit");
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");
    const Circuit f = widened(qft_circuit(n, false), n + 1);
    Circuit step = scattering_circuit(n, alpha, theta);
    step.extend(f);
    step.extend(controlled_ramp_ladder(n, true, Polarity::OnOne, true));
    step.extend(controlled_ramp_ladder(n, false, Polarity::OnZero, true));
    step.extend(inverse(f));
    Circuit c(n + 1);
    for (int s = 0; s < steps; ++s) c.extend(step);
    return c;
}

}  // namespace qwalk
