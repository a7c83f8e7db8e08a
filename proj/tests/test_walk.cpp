#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/oracle.hpp"
#include "qwalk/simulator.hpp"
#include "qwalk/walk.hpp"
#include "test_helpers.hpp"

using namespace qwalk;
using qwalk::testing::block_diag;
using qwalk::testing::dft_matrix;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Scattering, CircuitEqualsKroneckerProductWithIdentity) {
    std::mt19937_64 rng(301);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int n = 1; n <= 4; ++n) {
        const double alpha = u(rng);
        const double theta = u(rng);
        const DenseMatrix got = circuit_unitary(scattering_circuit(n, alpha, theta));
        const DenseMatrix want = kron(oracle::scattering_matrix(alpha, theta),
                                      DenseMatrix::identity(std::size_t{1} << n));
        EXPECT_LE(max_abs_diff(got, want), 1e-12) << "n=" << n;
    }
}

TEST(Scattering, PreferredParametersGiveBalancedMatrix) {
    const DenseMatrix got = circuit_unitary(scattering_circuit(1, kPi / 2.0, -kPi / 4.0));
    const DenseMatrix want = kron(oracle::scattering_matrix(kPi / 2.0, -kPi / 4.0),
                                  DenseMatrix::identity(2));
    EXPECT_LE(max_abs_diff(got, want), 1e-15);
    const double r = 1.0 / std::numbers::sqrt2;
    EXPECT_NEAR(std::abs(got.at(0, 0) - Complex(r, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(got.at(0, 2) - Complex(0.0, r)), 0.0, 1e-15);
}

TEST(Scattering, FullThetaCollapsesToScaledIdentity) {
    // sin(pi/2) = 1, cos(pi/2) = 0: the matrix is i times the identity.
    const DenseMatrix got = circuit_unitary(scattering_circuit(1, 0.0, kPi / 2.0));
    DenseMatrix want = DenseMatrix::identity(4);
    for (std::size_t i = 0; i < 4; ++i) want.at(i, i) = Complex(0.0, 1.0);
    EXPECT_LE(max_abs_diff(got, want), 1e-15);
}

TEST(ControlledExchange, UnitaryIsIdentityAndReversalBlocks) {
    for (int n = 1; n <= 5; ++n) {
        const std::size_t sites = std::size_t{1} << n;
        const DenseMatrix got = circuit_unitary(controlled_exchange_circuit(n));
        const DenseMatrix want = block_diag(DenseMatrix::identity(sites),
                                            oracle::exchange_matrix(sites));
        EXPECT_LE(max_abs_diff(got, want), 1e-12) << "n=" << n;
    }
}

TEST(ControlledExchange, AppliedTwiceIsIdentity) {
    const Circuit c = controlled_exchange_circuit(3);
    const DenseMatrix u = circuit_unitary(compose(c, c));
    EXPECT_EQ(max_abs_diff(u, DenseMatrix::identity(16)), 0.0);
}

TEST(ControlledExchange, CnotOrderIsImmaterial) {
    // n = 2: both orders explicitly.
    Circuit swapped(3);
    swapped.append(Cnot{2, 1});
    swapped.append(Cnot{2, 0});
    EXPECT_EQ(max_abs_diff(circuit_unitary(swapped),
                           circuit_unitary(controlled_exchange_circuit(2))),
              0.0);
    // n = 4: sampled shuffles.
    std::mt19937_64 rng(311);
    const DenseMatrix reference = circuit_unitary(controlled_exchange_circuit(4));
    std::vector<int> targets{0, 1, 2, 3};
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(targets.begin(), targets.end(), rng);
        Circuit c(5);
        for (int t : targets) c.append(Cnot{4, t});
        EXPECT_EQ(max_abs_diff(circuit_unitary(c), reference), 0.0);
    }
}

TEST(Qft, SingleQubitTransformIsHadamard) {
    const Circuit c = qft_circuit(1, false);
    ASSERT_EQ(c.gates().size(), 1u);
    EXPECT_LE(max_abs_diff(circuit_unitary(c), dft_matrix(2)), 1e-15);
}

TEST(Qft, SizeWithoutSwapsIsTriangular) {
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(qft_circuit(n, false).size(), n * (n + 1) / 2) << "n=" << n;
    }
}

TEST(Qft, WithSwapsMatchesDftMatrix) {
    for (int n = 1; n <= 5; ++n) {
        const DenseMatrix got = circuit_unitary(qft_circuit(n, true));
        EXPECT_LE(max_abs_diff(got, dft_matrix(std::size_t{1} << n)), 1e-10) << "n=" << n;
    }
}

TEST(PhaseRamp, SingleQubitRampIsZ) {
    const DenseMatrix got = circuit_unitary(phase_ramp_circuit(1, false, false));
    DenseMatrix want = DenseMatrix::identity(2);
    want.at(1, 1) = -1.0;
    EXPECT_LE(max_abs_diff(got, want), 1e-15);
}

TEST(PhaseRamp, DiagonalIsLinearInTheSiteIndex) {
    for (int n = 1; n <= 5; ++n) {
        const std::size_t sites = std::size_t{1} << n;
        const DenseMatrix got = circuit_unitary(phase_ramp_circuit(n, false, false));
        DenseMatrix want(sites, sites);
        for (std::size_t x = 0; x < sites; ++x) {
            want.at(x, x) = std::exp(Complex(0.0, 2.0 * kPi * static_cast<double>(x) /
                                                      static_cast<double>(sites)));
        }
        EXPECT_LE(max_abs_diff(got, want), 1e-12) << "n=" << n;
    }
}

TEST(PhaseRamp, ConjugateFlagConjugatesEveryEntry) {
    const DenseMatrix plain = circuit_unitary(phase_ramp_circuit(3, false, false));
    const DenseMatrix conj = circuit_unitary(phase_ramp_circuit(3, true, false));
    double diff = 0.0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            diff = std::max(diff, std::abs(conj.at(i, j) - std::conj(plain.at(i, j))));
    EXPECT_LE(diff, 1e-15);
}

TEST(ShiftQft, MatchesOracleShiftMatrix) {
    for (int n = 1; n <= 5; ++n) {
        const DenseMatrix got = circuit_unitary(shift_qft_circuit(n));
        EXPECT_LE(max_abs_diff(got, oracle::shift_matrix(std::size_t{1} << n)), 1e-10)
            << "n=" << n;
    }
}

TEST(ShiftQft, SizeIsQuadraticFormula) {
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(shift_qft_circuit(n).size(), n * n + 2 * n) << "n=" << n;
    }
}

TEST(ShiftQft, WrapsTheLastSiteToZero) {
    const int n = 3;
    const Statevector out = run(shift_qft_circuit(n), basis_state(n, "111"));
    EXPECT_NEAR(std::abs(out.amps[0]), 1.0, 1e-12);
}

TEST(ShiftQft, NthPowerIsIdentity) {
    for (int n = 1; n <= 5; ++n) {
        const std::size_t sites = std::size_t{1} << n;
        const DenseMatrix u = circuit_unitary(shift_qft_circuit(n));
        EXPECT_LE(max_abs_diff(matrix_power(u, sites), DenseMatrix::identity(sites)), 1e-8)
            << "n=" << n;
    }
}

TEST(ShiftMcx, SingleQubitShiftIsPauliX) {
    const Circuit c = shift_mcx_circuit(1);
    ASSERT_EQ(c.gates().size(), 1u);
    EXPECT_TRUE(std::holds_alternative<PauliX>(c.gates().front()));
}

TEST(ShiftMcx, CascadeStructureAtThreeQubits) {
    const Circuit c = shift_mcx_circuit(3);
    ASSERT_EQ(c.gates().size(), 3u);
    const auto& mcx = std::get<MultiControlledX>(c.gates()[0]);
    EXPECT_EQ(mcx.controls, (std::vector<QubitIndex>{0, 1}));
    EXPECT_EQ(mcx.target, 2);
    const auto& cx = std::get<Cnot>(c.gates()[1]);
    EXPECT_EQ(cx.control, 0);
    EXPECT_EQ(cx.target, 1);
    EXPECT_EQ(std::get<PauliX>(c.gates()[2]).target, 0);
}

TEST(ShiftMcx, AgreesWithQftShiftAndOracle) {
    for (int n = 1; n <= 5; ++n) {
        const DenseMatrix mcx = circuit_unitary(shift_mcx_circuit(n));
        const DenseMatrix qft = circuit_unitary(shift_qft_circuit(n));
        EXPECT_LE(max_abs_diff(mcx, oracle::shift_matrix(std::size_t{1} << n)), 1e-12);
        EXPECT_LE(max_abs_diff(mcx, qft), 1e-10) << "n=" << n;
    }
}

TEST(McxCost, MatchesClosedFormsAtSmallWidths) {
    const auto toffoli = mcx_cost(3, McxCostMethod::NoAncilla);
    EXPECT_EQ(toffoli.size, 5);
    EXPECT_EQ(toffoli.depth, 4);
    EXPECT_EQ(toffoli.ancillas, 0);

    const auto four = mcx_cost(4, McxCostMethod::Ancilla);
    EXPECT_EQ(four.size, 20);
    EXPECT_EQ(four.depth, 16);
    EXPECT_EQ(four.ancillas, 1);

    const auto five = mcx_cost(5, McxCostMethod::NoAncilla);
    EXPECT_EQ(five.size, 25);
    EXPECT_EQ(five.depth, 20);
}

TEST(McxCost, RejectsWidthsBelowTheModelDomain) {
    EXPECT_THROW(mcx_cost(2, McxCostMethod::NoAncilla), std::invalid_argument);
    EXPECT_THROW(mcx_cost(3, McxCostMethod::Ancilla), std::invalid_argument);
}

TEST(ShiftCostSummary, ReproducesClosedForms) {
    const auto s3 = shift_cost_summary(3);
    ASSERT_TRUE(s3.mcx_no_ancilla.has_value());
    EXPECT_EQ(s3.mcx_no_ancilla->size, 7);
    EXPECT_EQ(s3.mcx_no_ancilla->depth, 6);
    EXPECT_FALSE(s3.mcx_ancilla.has_value());
    EXPECT_EQ(s3.qft.size, 15);

    const auto s4 = shift_cost_summary(4);
    ASSERT_TRUE(s4.mcx_ancilla.has_value());
    EXPECT_EQ(s4.mcx_ancilla->size, 27);
    EXPECT_EQ(s4.mcx_ancilla->depth, 2 * (4 * 16 - 80 + 27));
    EXPECT_EQ(s4.mcx_ancilla_qubits, 1);
}

// The closed forms must equal a direct summation over the cascade: one
// block per width 3..n plus the closing CNOT and X.
TEST(ShiftCostSummary, CascadeSummationMatchesClosedNoAncillaTotals) {
    for (int n = 3; n <= 10; ++n) {
        long long size_sum = 2;   // CNOT + X
        long long depth_sum = 2;  // strictly serial cascade
        for (int width = 3; width <= n; ++width) {
            const auto cost = mcx_cost(width, McxCostMethod::NoAncilla);
            size_sum += cost.size;
            depth_sum += cost.depth;
        }
        const auto summary = shift_cost_summary(n);
        ASSERT_TRUE(summary.mcx_no_ancilla.has_value());
        EXPECT_EQ(summary.mcx_no_ancilla->size, size_sum) << "n=" << n;
        EXPECT_EQ(summary.mcx_no_ancilla->depth, depth_sum) << "n=" << n;
        // The constructed cascade is charged identically.
        EXPECT_EQ(shift_mcx_circuit(n).size(), size_sum) << "n=" << n;
        EXPECT_EQ(shift_mcx_circuit(n).depth(), depth_sum) << "n=" << n;
    }
}

TEST(ShiftCostSummary, AncillaSummationMatchesClosedTotals) {
    for (int n = 4; n <= 10; ++n) {
        long long size_sum = 2 + mcx_cost(3, McxCostMethod::NoAncilla).size;
        long long depth_sum = 2 + mcx_cost(3, McxCostMethod::NoAncilla).depth;
        for (int width = 4; width <= n; ++width) {
            const auto cost = mcx_cost(width, McxCostMethod::Ancilla);
            size_sum += cost.size;
            depth_sum += cost.depth;
        }
        const auto summary = shift_cost_summary(n);
        ASSERT_TRUE(summary.mcx_ancilla.has_value());
        EXPECT_EQ(summary.mcx_ancilla->size, size_sum) << "n=" << n;
        EXPECT_EQ(summary.mcx_ancilla->depth, depth_sum) << "n=" << n;
    }
}

TEST(Propagation, UnitaryIsBlockDiagonalShiftPair) {
    for (int n = 1; n <= 5; ++n) {
        for (ShiftImpl impl : {ShiftImpl::Qft, ShiftImpl::Mcx}) {
            const DenseMatrix got = circuit_unitary(propagation_circuit(n, impl));
            const DenseMatrix want = oracle::propagation_matrix(std::size_t{1} << n);
            EXPECT_LE(max_abs_diff(got, want), 1e-10)
                << "n=" << n << " impl=" << (impl == ShiftImpl::Qft ? "qft" : "mcx");
        }
    }
}

TEST(Propagation, MovesRightForVZeroAndLeftForVOne) {
    const int n = 3;
    const Circuit c = propagation_circuit(n, ShiftImpl::Mcx);
    Statevector right = run(c, basis_state(n + 1, "0010"));
    EXPECT_NEAR(std::abs(right.amps[3]), 1.0, 1e-12);  // x: 2 -> 3
    Statevector left = run(c, basis_state(n + 1, "1010"));
    EXPECT_NEAR(std::abs(left.amps[8 + 1]), 1.0, 1e-12);  // x: 2 -> 1
    Statevector wrap = run(c, basis_state(n + 1, "1000"));
    EXPECT_NEAR(std::abs(wrap.amps[8 + 7]), 1.0, 1e-12);  // x: 0 -> 7
}

TEST(Propagation, QftRouteSizeIsQuadraticPlusControls) {
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(propagation_circuit(n, ShiftImpl::Qft).size(), n * n + 4 * n);
    }
}

TEST(Walk, SizeMatchesPerStepFormula) {
    EXPECT_EQ(walk_circuit({2, 1, 0.1, 0.2, ShiftImpl::Qft, "000"}).size(), 13);
    EXPECT_EQ(walk_circuit({3, 1, 0.1, 0.2, ShiftImpl::Qft, "0000"}).size(), 22);
    for (int n = 1; n <= 6; ++n) {
        for (int steps = 0; steps <= 3; ++steps) {
            const WalkSpec spec{n, steps, 0.3, -0.8, ShiftImpl::Qft,
                                std::string(n + 1, '0')};
            EXPECT_EQ(walk_circuit(spec).size(), steps * (n * n + 4 * n + 1));
        }
    }
}

TEST(Walk, ZeroStepsGiveTheIdentity) {
    const WalkSpec spec{2, 0, 0.4, 0.9, ShiftImpl::Qft, "010"};
    const Circuit c = walk_circuit(spec);
    EXPECT_EQ(c.gates().size(), 0u);
    EXPECT_EQ(max_abs_diff(circuit_unitary(c), DenseMatrix::identity(8)), 0.0);
}

TEST(Walk, UnitaryMatchesOracleStepPower) {
    std::mt19937_64 rng(331);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int n = 1; n <= 5; ++n) {
        for (ShiftImpl impl : {ShiftImpl::Qft, ShiftImpl::Mcx}) {
            const double alpha = u(rng);
            const double theta = u(rng);
            const int steps = 1 + static_cast<int>(rng() % 4);
            const WalkSpec spec{n, steps, alpha, theta, impl, std::string(n + 1, '0')};
            const DenseMatrix got = circuit_unitary(walk_circuit(spec));
            const DenseMatrix want = matrix_power(
                oracle::step_matrix(std::size_t{1} << n, alpha, theta), steps);
            EXPECT_TRUE(oracle::matrices_close(want, got, 1e-9, true))
                << "n=" << n << " steps=" << steps << " deviation "
                << oracle::max_deviation(want, got, true);
        }
    }
}

TEST(Walk, ValidatesItsSpec) {
    EXPECT_THROW(walk_circuit({0, 1, 0, 0, ShiftImpl::Qft, "0"}), std::invalid_argument);
    EXPECT_THROW(walk_circuit({2, -1, 0, 0, ShiftImpl::Qft, "000"}), std::invalid_argument);
    EXPECT_THROW(walk_circuit({2, 1, 0, 0, ShiftImpl::Qft, "00"}), std::invalid_argument);
    EXPECT_THROW(walk_circuit({2, 1, 0, 0, ShiftImpl::Qft, "0x0"}), std::invalid_argument);
}

// Keeping the transform's terminal swaps and the plain ramp must equal
// dropping the swaps and reversing the ramp's wire assignment.
TEST(Walk, SwapAbsorptionLeavesTheShiftUnchanged) {
    for (int n = 2; n <= 5; ++n) {
        const Circuit with_swaps = qft_circuit(n, true);
        const Circuit shift_swapped = compose(
            compose(with_swaps, phase_ramp_circuit(n, false, false)), inverse(with_swaps));
        const DenseMatrix a = circuit_unitary(shift_swapped);
        const DenseMatrix b = circuit_unitary(shift_qft_circuit(n));
        EXPECT_LE(max_abs_diff(a, b), 1e-10) << "n=" << n;
    }
}
