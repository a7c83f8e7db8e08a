#pragma once

// Independent ground truth for the circuit constructions: every operator is
// assembled entrywise from its defining matrix form, never from gates, so
// that circuit-versus-oracle equality is a meaningful test. Keep it that
// way: this header must not include circuit, simulator, walk or circulant
// machinery.

#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <stdexcept>
#include <vector>

#include "qwalk/dense_matrix.hpp"
#include "qwalk/distribution.hpp"

namespace qwalk::oracle {

/// Cyclic increment: X|x> = |x+1 mod N>, i.e. X_{i,j} = 1 iff i = (j+1) mod N.
inline DenseMatrix shift_matrix(std::size_t n_sites) {
    if (n_sites < 2) throw std::invalid_argument("shift needs at least 2 sites");
    DenseMatrix x(n_sites, n_sites);
    for (std::size_t j = 0; j < n_sites; ++j) x.at((j + 1) % n_sites, j) = 1.0;
    return x;
}

/// Anti-diagonal permutation J (J_{i,j} = 1 iff i + j = N - 1).
inline DenseMatrix exchange_matrix(std::size_t n) {
    if (n < 1) throw std::invalid_argument("exchange matrix needs dimension >= 1");
    DenseMatrix j(n, n);
    for (std::size_t i = 0; i < n; ++i) j.at(i, n - 1 - i) = 1.0;
    return j;
}

/// Whether A satisfies the reversal identity A^T = J A J (true for every
/// Toeplitz matrix; generally false otherwise).
inline bool toeplitz_transpose_check(const DenseMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("square matrix required");
    const DenseMatrix j = exchange_matrix(a.rows());
    return max_abs_diff(a.transpose(), j * a * j) <= 1e-12;
}

/// Velocity-conditioned move: block-diag(X, X^T) on the 2N-dimensional
/// joint space, indexed N*v + x.
inline DenseMatrix propagation_matrix(std::size_t n_sites) {
    const DenseMatrix x = shift_matrix(n_sites);
    DenseMatrix sigma(2 * n_sites, 2 * n_sites);
    for (std::size_t i = 0; i < n_sites; ++i) {
        for (std::size_t j = 0; j < n_sites; ++j) {
            sigma.at(i, j) = x.at(i, j);
            sigma.at(n_sites + i, n_sites + j) = x.at(j, i);
        }
    }
    return sigma;
}

/// Circulant from its first row: C_{i,j} = c_{(j-i) mod N}.
inline DenseMatrix circulant_matrix(const std::vector<Complex>& first_row) {
    const std::size_t n = first_row.size();
    if (n == 0) throw std::invalid_argument("empty circulant row");
    DenseMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.at(i, j) = first_row[(j + n - i) % n];
    return c;
}

/// The 2x2 scattering matrix S(alpha, theta).
inline DenseMatrix scattering_matrix(double alpha, double theta) {
    DenseMatrix s(2, 2);
    const Complex phase = std::exp(Complex(0.0, alpha));
    const Complex diag = Complex(0.0, 1.0) * phase * std::sin(theta);
    const Complex off = phase * std::cos(theta);
    s.at(0, 0) = diag;
    s.at(1, 1) = diag;
    s.at(0, 1) = off;
    s.at(1, 0) = off;
    return s;
}

/// One walk step T = sigma * (S tensor I_N).
inline DenseMatrix step_matrix(std::size_t n_sites, double alpha, double theta) {
    return propagation_matrix(n_sites) *
           kron(scattering_matrix(alpha, theta), DenseMatrix::identity(n_sites));
}

/// Half the total-variation sum over the union of supports; in [0, 1].
inline double l1_distance(const Distribution& p, const Distribution& q) {
    auto total = [](const Distribution& d) {
        double t = 0.0;
        for (const auto& [_, v] : d) t += v;
        return t;
    };
    if (std::abs(total(p) - 1.0) > 1e-8 || std::abs(total(q) - 1.0) > 1e-8) {
        throw std::invalid_argument("l1_distance requires normalized distributions");
    }
    std::set<std::string> support;
    for (const auto& [k, _] : p) support.insert(k);
    for (const auto& [k, _] : q) support.insert(k);
    double sum = 0.0;
    for (const auto& k : support) {
        const auto pi = p.find(k);
        const auto qi = q.find(k);
        sum += std::abs((pi == p.end() ? 0.0 : pi->second) -
                        (qi == q.end() ? 0.0 : qi->second));
    }
    return 0.5 * sum;
}

/// Largest entrywise deviation, optionally after aligning B's phase to A at
/// A's largest-modulus entry.
inline double max_deviation(const DenseMatrix& a, const DenseMatrix& b,
                            bool up_to_global_phase) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix comparison shape mismatch");
    }
    Complex align = 1.0;
    if (up_to_global_phase) {
        double best = -1.0;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (std::abs(a.at(i, j)) > best) {
                    best = std::abs(a.at(i, j));
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best > 0.0 && std::abs(b.at(bi, bj)) > 0.0) {
            align = std::exp(Complex(
                0.0, std::arg(a.at(bi, bj)) - std::arg(b.at(bi, bj))));
        }
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a.at(i, j) - align * b.at(i, j)));
    return worst;
}

inline bool matrices_close(const DenseMatrix& a, const DenseMatrix& b, double tol,
                           bool up_to_global_phase) {
    return max_deviation(a, b, up_to_global_phase) <= tol;
}

}  // namespace qwalk::oracle
