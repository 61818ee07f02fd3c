#include <cmath>

#include <gtest/gtest.h>

#include "wsqaoa/bloch.hpp"
#include "wsqaoa/bm_solver.hpp"
#include "wsqaoa/qaoa.hpp"
#include "wsqaoa/rotation.hpp"

using namespace wsqaoa;

namespace {

// Oracle: Pauli expectations from explicit 2x2 matrices.
Eigen::Vector3d pauli_expectations(const std::array<Complex, 2> &a) {
    const Complex i{0, 1};
    const Complex x = std::conj(a[0]) * a[1] + std::conj(a[1]) * a[0];
    const Complex y = std::conj(a[0]) * (-i * a[1]) + std::conj(a[1]) * (i * a[0]);
    const Complex z = std::conj(a[0]) * a[0] - std::conj(a[1]) * a[1];
    return {x.real(), y.real(), z.real()};
}

}  // namespace

TEST(MapRank3, Examples) {
    const auto s = map_rank3({3, {{0, 1.0}, {kPi, 2.0}, {kPi / 2, 0}}});
    auto a = qubit_amplitudes(s.qubits[0]);
    EXPECT_NEAR(std::abs(a[0]), 1.0, 1e-15);
    a = qubit_amplitudes(s.qubits[1]);
    EXPECT_NEAR(std::abs(a[1]), 1.0, 1e-15);
    a = qubit_amplitudes(s.qubits[2]);
    EXPECT_NEAR(std::abs(a[0] - 1 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a[1] - 1 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_THROW(map_rank3({2, {{0, 0}}}), std::invalid_argument);
}

TEST(MapRank3, BlochVectorMatchesEmbedding) {
    Rng rng = make_rng(1);
    SphereEmbedding x{3, {}};
    for (int i = 0; i < 200; ++i) {
        x.points.push_back({uniform(rng, -7, 7), uniform(rng, -7, 7)});
    }
    const auto s = map_rank3(x);
    for (int i = 0; i < x.size(); ++i) {
        const auto bv = pauli_expectations(qubit_amplitudes(s.qubits[static_cast<std::size_t>(i)]));
        EXPECT_LT((bv - to_cartesian(x, i)).norm(), 1e-9);
        EXPECT_LT((bloch_vector(s.qubits[static_cast<std::size_t>(i)]) - bv).norm(), 1e-12);
    }
}

TEST(MapRank2, Examples) {
    const auto s = map_rank2({2, {{0, 0}, {kPi, 0}, {kPi / 2, 0}}});
    auto a = qubit_amplitudes(s.qubits[0]);
    EXPECT_NEAR(std::abs(a[0]), 1.0, 1e-15);
    a = qubit_amplitudes(s.qubits[1]);
    EXPECT_NEAR(std::abs(a[1]), 1.0, 1e-15);
    a = qubit_amplitudes(s.qubits[2]);
    const double h = 1 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(a[0] - Complex(h, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a[1] - Complex(0, -h)), 0.0, 1e-15);
    EXPECT_LT((pauli_expectations(a) - Eigen::Vector3d(0, -1, 0)).norm(), 1e-12);
    EXPECT_THROW(map_rank2({3, {{0, 0}}}), std::invalid_argument);
}

TEST(MapRank2, YzPlaneAndAngles) {
    Rng rng = make_rng(2);
    SphereEmbedding x{2, {}};
    for (int i = 0; i < 100; ++i) {
        x.points.push_back({uniform(rng, 0, kTwoPi), 0});
    }
    const auto s = map_rank2(x);
    for (std::size_t i = 0; i < s.qubits.size(); ++i) {
        const auto u = pauli_expectations(qubit_amplitudes(s.qubits[i]));
        EXPECT_NEAR(u.x(), 0.0, 1e-12);
        EXPECT_LT((u - Eigen::Vector3d(0, -std::sin(x.points[i].theta), std::cos(x.points[i].theta))).norm(),
                  1e-9);
        for (std::size_t j = 0; j < i; ++j) {
            const auto v = pauli_expectations(qubit_amplitudes(s.qubits[j]));
            double gap = std::fmod(std::abs(x.points[i].theta - x.points[j].theta), kTwoPi);
            gap = std::min(gap, kTwoPi - gap);
            EXPECT_NEAR(std::acos(std::clamp(u.dot(v), -1.0, 1.0)), gap, 1e-7);
        }
    }
}

TEST(Amplitudes, Examples) {
    auto s = amplitudes(ProductState{{kZero, kZero, kZero}});
    EXPECT_NEAR(std::abs(s[0]), 1.0, 1e-15);
    s = amplitudes(ProductState{{kZero, kOne}});
    EXPECT_NEAR(std::abs(s[1]), 1.0, 1e-15);
    s = amplitudes(ProductState{{kPlus, kMinus}});
    const double want[4] = {0.5, -0.5, 0.5, -0.5};
    for (int b = 0; b < 4; ++b) {
        EXPECT_NEAR(std::abs(s[b] - Complex(want[b], 0)), 0.0, 1e-15);
    }
}

TEST(Amplitudes, MatchesExplicitKronecker) {
    Rng rng = make_rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        ProductState ps;
        const int n = 1 + trial % 6;
        for (int i = 0; i < n; ++i) {
            ps.qubits.push_back({uniform(rng, 0, kPi), uniform(rng, 0, kTwoPi)});
        }
        const auto s = amplitudes(ps);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
        for (std::size_t b = 0; b < s.dimension(); ++b) {
            Complex prod{1, 0};
            for (int i = 0; i < n; ++i) {
                const int bit = static_cast<int>((b >> (n - 1 - i)) & 1);
                prod *= qubit_amplitudes(ps.qubits[static_cast<std::size_t>(i)])[static_cast<std::size_t>(bit)];
            }
            EXPECT_NEAR(std::abs(s[b] - prod), 0.0, 1e-14);
        }
    }
    EXPECT_THROW(amplitudes(ProductState{std::vector<QubitAngles>(21, kZero)}), std::length_error);
}

TEST(GateDecomposition, Examples) {
    EXPECT_TRUE(gate_decomposition_check(0, 0));
    EXPECT_TRUE(gate_decomposition_check(kPi / 2, 0));
    Rng rng = make_rng(4);
    for (int i = 0; i < 100; ++i) {
        EXPECT_TRUE(gate_decomposition_check(uniform(rng, 0, kPi), uniform(rng, 0, kTwoPi)));
    }
}

TEST(Mapping, AntipodalGivesMaxCutBasisState) {
    const auto g = cycle_graph(6);
    SphereEmbedding x{3, {}};
    const SpherePoint u{1.0, 0.5};
    const SpherePoint minus_u{kPi - 1.0, 0.5 + kPi};
    for (int i = 0; i < 6; ++i) {
        x.points.push_back(i % 2 ? minus_u : u);
    }
    Rng rng = make_rng(5);
    const auto s = amplitudes(map_to_product_state(rotate_vertex_at_top(x, rng)));
    const auto probs = cut_distribution(s);
    const auto peak = static_cast<std::uint64_t>(std::max_element(probs.begin(), probs.end()) - probs.begin());
    EXPECT_NEAR(probs[peak], 1.0, 1e-9);
    EXPECT_NEAR(cut_value(g, CutAssignment::from_index(peak, 6)), objective_bm(g, x), 1e-9);
}
