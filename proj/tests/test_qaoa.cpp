#include <cmath>
#include <cstring>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "wsqaoa/bloch.hpp"
#include "wsqaoa/qaoa.hpp"

using namespace wsqaoa;

namespace {

const WeightedGraph kK2(2, {{0, 1, 1.0}});

WeightedGraph random_graph(int n, Rng &rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (uniform(rng, 0, 1) < 0.5) {
                edges.push_back({u, v, uniform(rng, 0.2, 2.0)});
            }
        }
    }
    return WeightedGraph(n, edges);
}

StateVector random_state(int n, Rng &rng) {
    std::vector<Complex> a(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &z : a) {
        z = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
        norm += std::norm(z);
    }
    for (auto &z : a) {
        z /= std::sqrt(norm);
    }
    return StateVector(n, a);
}

// Oracle: dense matrix exponentials of H_C and H_B built from Kronecker products.
Eigen::VectorXcd dense_evolve(const WeightedGraph &g, const Eigen::VectorXcd &s0, const QaoaParams &q) {
    const int n = g.num_vertices();
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    Eigen::VectorXcd s = s0;
    for (int k = 0; k < q.depth(); ++k) {
        for (Eigen::Index b = 0; b < dim; ++b) {
            double cut = 0.0;
            for (const auto &e : g.edges()) {
                if (((b >> (n - 1 - e.u)) & 1) != ((b >> (n - 1 - e.v)) & 1)) {
                    cut += e.w;
                }
            }
            s[b] *= std::exp(Complex(0, -q.gamma[k] * cut));
        }
        const Eigen::Matrix2cd u = std::cos(q.beta[k]) * Eigen::Matrix2cd::Identity() -
                                   Complex(0, std::sin(q.beta[k])) * x;
        Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(1, 1);
        for (int i = 0; i < n; ++i) {
            Eigen::MatrixXcd next(full.rows() * 2, full.cols() * 2);
            for (Eigen::Index r = 0; r < full.rows(); ++r) {
                for (Eigen::Index c = 0; c < full.cols(); ++c) {
                    next.block(2 * r, 2 * c, 2, 2) = full(r, c) * u;
                }
            }
            full = next;
        }
        s = full * s;
    }
    return s;
}

}  // namespace

TEST(CostTable, Examples) {
    EXPECT_EQ(build_cost_table(kK2).cut, (std::vector<double>{0, 1, 1, 0}));
    EXPECT_EQ(build_cost_table(cycle_graph(4)).cut[0b0101], 4.0);
    for (double c : build_cost_table(WeightedGraph(3)).cut) {
        EXPECT_EQ(c, 0.0);
    }
    EXPECT_THROW(build_cost_table(WeightedGraph(21)), std::length_error);
    EXPECT_NO_THROW(build_cost_table(WeightedGraph(3), 3));
}

TEST(CostTable, MatchesCutValueAndIsComplementSymmetric) {
    Rng rng = make_rng(1);
    const auto g = random_graph(7, rng);
    const auto t = build_cost_table(g);
    for (std::uint64_t b = 0; b < t.cut.size(); ++b) {
        EXPECT_NEAR(t.cut[b], cut_value(g, CutAssignment::from_index(b, 7)), 1e-12);
        EXPECT_NEAR(t.cut[b], t.cut[b ^ 0x7f], 1e-12);
    }
}

TEST(CostLayer, Examples) {
    const auto t = build_cost_table(kK2);
    auto s = StateVector::uniform_superposition(2);
    const auto before = s;
    apply_cost_layer(s, t, 0.0);
    for (std::size_t b = 0; b < 4; ++b) {
        EXPECT_EQ(s[b], before[b]);
    }

    auto basis = StateVector::basis_state(2, 1);
    apply_cost_layer(basis, t, kPi);
    EXPECT_NEAR(std::abs(basis[1] - Complex(-1, 0)), 0.0, 1e-15);

    const double gamma = 0.83;
    auto pm = amplitudes(ProductState{{kPlus, kMinus}});
    apply_cost_layer(pm, t, gamma);
    const Complex e = std::exp(Complex(0, -gamma));
    const Complex want[4] = {0.5, -0.5 * e, 0.5 * e, -0.5};
    for (std::size_t b = 0; b < 4; ++b) {
        EXPECT_NEAR(std::abs(pm[b] - want[b]), 0.0, 1e-15);
    }
    StateVector wrong(3);
    EXPECT_THROW(apply_cost_layer(wrong, t, 1.0), std::invalid_argument);
}

TEST(MixerLayer, Examples) {
    auto s = StateVector(1);
    apply_mixer_layer(s, 0.0);
    EXPECT_EQ(s[0], Complex(1, 0));
    apply_mixer_layer(s, kPi / 2);
    EXPECT_NEAR(std::abs(s[0]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s[1] - Complex(0, -1)), 0.0, 1e-15);

    // The cost-evolved |+-> state is a zero-eigenvector of the mixer Hamiltonian.
    auto pm = amplitudes(ProductState{{kPlus, kMinus}});
    apply_cost_layer(pm, build_cost_table(kK2), 1.9);
    const auto before = pm;
    apply_mixer_layer(pm, 0.37);
    for (std::size_t b = 0; b < 4; ++b) {
        EXPECT_NEAR(std::abs(pm[b] - before[b]), 0.0, 1e-15);
    }
}

TEST(Evolve, Examples) {
    Rng rng = make_rng(2);
    const auto g = random_graph(4, rng);
    const auto t = build_cost_table(g);
    const auto s0 = random_state(4, rng);
    auto same = evolve(s0, t, QaoaParams::zeros(0));
    auto zeros = evolve(s0, t, QaoaParams::zeros(2));
    for (std::size_t b = 0; b < s0.dimension(); ++b) {
        EXPECT_EQ(same[b], s0[b]);
        EXPECT_NEAR(std::abs(zeros[b] - s0[b]), 0.0, 1e-15);
    }
    auto manual = s0;
    apply_cost_layer(manual, t, 0.4);
    apply_mixer_layer(manual, -0.2);
    const auto one = evolve(s0, t, {{0.4}, {-0.2}});
    for (std::size_t b = 0; b < s0.dimension(); ++b) {
        EXPECT_EQ(one[b], manual[b]);
    }
    EXPECT_THROW(evolve(s0, t, {{0.1, 0.2}, {0.3}}), std::invalid_argument);
}

TEST(Evolve, MatchesDenseOracle) {
    Rng rng = make_rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 4;
        const auto g = random_graph(n, rng);
        const auto s0 = random_state(n, rng);
        QaoaParams q = QaoaParams::zeros(1 + trial % 3);
        for (int k = 0; k < q.depth(); ++k) {
            q.gamma[k] = uniform(rng, -kPi, kPi);
            q.beta[k] = uniform(rng, -kPi, kPi);
        }
        Eigen::VectorXcd v(static_cast<Eigen::Index>(s0.dimension()));
        for (std::size_t b = 0; b < s0.dimension(); ++b) {
            v[static_cast<Eigen::Index>(b)] = s0[b];
        }
        const auto oracle = dense_evolve(g, v, q);
        const auto got = evolve(s0, build_cost_table(g), q);
        for (std::size_t b = 0; b < s0.dimension(); ++b) {
            EXPECT_NEAR(std::abs(got[b] - oracle[static_cast<Eigen::Index>(b)]), 0.0, 1e-12);
        }
    }
}

TEST(ExpectedCut, Examples) {
    const auto t = build_cost_table(kK2);
    EXPECT_NEAR(expected_cut(StateVector::uniform_superposition(2), t), 0.5, 1e-15);
    EXPECT_NEAR(expected_cut(StateVector::basis_state(2, 1), t), 1.0, 1e-15);
    Rng rng = make_rng(4);
    for (int i = 0; i < 20; ++i) {
        const auto g = random_graph(2 + i % 8, rng);
        EXPECT_NEAR(expected_cut(StateVector::uniform_superposition(g.num_vertices()), build_cost_table(g)),
                    total_weight(g) / 2.0, 1e-12);
    }
    EXPECT_THROW(expected_cut(StateVector(3), t), std::invalid_argument);
}

TEST(CutDistribution, Examples) {
    auto d = cut_distribution(StateVector::basis_state(3, 5));
    for (std::size_t b = 0; b < 8; ++b) {
        EXPECT_EQ(d[b], b == 5 ? 1.0 : 0.0);
    }
    for (const auto &s : {StateVector::uniform_superposition(2), amplitudes(ProductState{{kPlus, kMinus}})}) {
        for (double p : cut_distribution(s)) {
            EXPECT_NEAR(p, 0.25, 1e-15);
        }
    }
}

TEST(Invariants, NormPreservedAtTwelveQubits) {
    Rng rng = make_rng(5);
    const auto g = random_graph(12, rng);
    const auto t = build_cost_table(g);
    QaoaParams q = QaoaParams::zeros(3);
    for (int k = 0; k < 3; ++k) {
        q.gamma[k] = uniform(rng, -kPi, kPi);
        q.beta[k] = uniform(rng, -kPi, kPi);
    }
    const auto s = evolve(StateVector::uniform_superposition(12), t, q);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
    double total = 0.0;
    for (double p : cut_distribution(s)) {
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(Invariants, BetaZeroKeepsDistributionAndBitFlipKeepsExpectation) {
    Rng rng = make_rng(6);
    const auto g = random_graph(5, rng);
    const auto t = build_cost_table(g);
    const auto s0 = random_state(5, rng);
    const auto s = evolve(s0, t, {{0.3, -1.2}, {0.0, 0.0}});
    const auto d0 = cut_distribution(s0), d1 = cut_distribution(s);
    for (std::size_t b = 0; b < d0.size(); ++b) {
        EXPECT_NEAR(d0[b], d1[b], 1e-14);
    }
    StateVector flipped = s0;
    for (std::size_t b = 0; b < s0.dimension(); ++b) {
        flipped[b] = s0[b ^ 0x1f];
    }
    EXPECT_NEAR(expected_cut(flipped, t), expected_cut(s0, t), 1e-12);
}

TEST(Invariants, GammaZeroIsPureMixer) {
    Rng rng = make_rng(7);
    const auto g = random_graph(4, rng);
    const auto s0 = random_state(4, rng);
    auto mixed = s0;
    apply_mixer_layer(mixed, 0.3);
    apply_mixer_layer(mixed, 0.5);
    const auto s = evolve(s0, build_cost_table(g), {{0.0, 0.0}, {0.3, 0.5}});
    for (std::size_t b = 0; b < s0.dimension(); ++b) {
        EXPECT_NEAR(std::abs(s[b] - mixed[b]), 0.0, 1e-14);
    }
}

TEST(Invariants, ComponentDecompositionWithFactoredState) {
    Rng rng = make_rng(8);
    for (int trial = 0; trial < 6; ++trial) {
        const WeightedGraph a = random_graph(3, rng), b = random_graph(3, rng);
        std::vector<Edge> edges = a.edges();
        for (const auto &e : b.edges()) {
            edges.push_back({e.u + 3, e.v + 3, e.w});
        }
        const WeightedGraph g(6, edges);
        ProductState ps;
        for (int i = 0; i < 6; ++i) {
            ps.qubits.push_back({uniform(rng, 0, kPi), uniform(rng, 0, kTwoPi)});
        }
        const ProductState pa{{ps.qubits.begin(), ps.qubits.begin() + 3}};
        const ProductState pb{{ps.qubits.begin() + 3, ps.qubits.end()}};
        for (int p = 1; p <= 3; ++p) {
            QaoaParams q = QaoaParams::zeros(p);
            for (int k = 0; k < p; ++k) {
                q.gamma[k] = uniform(rng, -kPi, kPi);
                q.beta[k] = uniform(rng, -kPi / 4, kPi / 4);
            }
            const double whole = qaoa_expectation(amplitudes(ps), build_cost_table(g), q);
            const double parts = qaoa_expectation(amplitudes(pa), build_cost_table(a), q) +
                                 qaoa_expectation(amplitudes(pb), build_cost_table(b), q);
            EXPECT_NEAR(whole, parts, 1e-9);
        }
    }
}

TEST(Invariants, PlusMinusStuckAtHalf) {
    Rng rng = make_rng(9);
    const auto t = build_cost_table(kK2);
    const auto s0 = amplitudes(ProductState{{kPlus, kMinus}});
    for (int p = 1; p <= 3; ++p) {
        for (int i = 0; i < 50; ++i) {
            QaoaParams q = QaoaParams::zeros(p);
            for (int k = 0; k < p; ++k) {
                q.gamma[k] = uniform(rng, -kPi, kPi);
                q.beta[k] = uniform(rng, -kPi, kPi);
            }
            EXPECT_NEAR(qaoa_expectation(s0, t, q), 0.5, 1e-12);
        }
    }
}

TEST(QaoaParams, FlattenRoundTrip) {
    const QaoaParams q{{1, 2}, {3, 4}};
    EXPECT_EQ(q.flatten(), (std::vector<double>{1, 2, 3, 4}));
    const auto r = QaoaParams::unflatten(q.flatten());
    EXPECT_EQ(r.gamma, q.gamma);
    EXPECT_EQ(r.beta, q.beta);
    EXPECT_THROW(QaoaParams::unflatten({1, 2, 3}), std::invalid_argument);
}

TEST(StateVector, CapacityAndDump) {
    EXPECT_THROW(StateVector(21), std::length_error);
    EXPECT_NO_THROW(StateVector(21, 21));
    EXPECT_THROW(StateVector::basis_state(2, 4), std::out_of_range);
    const auto bytes = StateVector::basis_state(1, 1).to_bytes();
    ASSERT_EQ(bytes.size(), 32u);
    double re1 = 0.0;
    std::memcpy(&re1, bytes.data() + 16, 8);
    EXPECT_EQ(re1, 1.0);
}
