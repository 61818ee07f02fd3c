#include <cmath>

#include <Eigen/Geometry>
#include <gtest/gtest.h>

#include "wsqaoa/bm_solver.hpp"
#include "wsqaoa/rotation.hpp"

using namespace wsqaoa;

namespace {

SphereEmbedding random_embedding(int rank, int n, Rng &rng) {
    SphereEmbedding x{rank, {}};
    for (int i = 0; i < n; ++i) {
        x.points.push_back(random_sphere_point(rank, rng));
    }
    return x;
}

Eigen::MatrixXd gram(const SphereEmbedding &x) {
    Eigen::MatrixXd g(x.size(), x.size());
    for (int i = 0; i < x.size(); ++i) {
        for (int j = 0; j < x.size(); ++j) {
            g(i, j) = to_cartesian(x, i).dot(to_cartesian(x, j));
        }
    }
    return g;
}

}  // namespace

TEST(VertexAtTopMatrix, MatchesElementaryComposition) {
    Rng rng = make_rng(1);
    for (int i = 0; i < 200; ++i) {
        const double t = uniform(rng, 0, kPi), p = uniform(rng, 0, kTwoPi), w = uniform(rng, 0, kTwoPi);
        const Eigen::Matrix3d oracle =
            (Eigen::AngleAxisd(w, Eigen::Vector3d::UnitZ()) * Eigen::AngleAxisd(-t, Eigen::Vector3d::UnitY()) *
             Eigen::AngleAxisd(-p, Eigen::Vector3d::UnitZ()))
                .toRotationMatrix();
        const Eigen::Matrix3d r = vertex_at_top_matrix(t, p, w);
        EXPECT_LT((r - oracle).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
        const Eigen::Vector3d top = r * to_cartesian({t, p}, 3);
        EXPECT_LT((top - Eigen::Vector3d::UnitZ()).norm(), 1e-9);
    }
}

TEST(VertexAtTopMatrix, BottomRowsMatchClosedForm) {
    const double t = 0.7, p = 2.1, w = 4.4;
    const double ct = std::cos(t), st = std::sin(t), cp = std::cos(p), sp = std::sin(p),
                 co = std::cos(w), so = std::sin(w);
    const Eigen::Matrix3d r = vertex_at_top_matrix(t, p, w);
    EXPECT_NEAR(r(1, 0), -co * sp + ct * cp * so, 1e-15);
    EXPECT_NEAR(r(1, 1), cp * co + ct * sp * so, 1e-15);
    EXPECT_NEAR(r(1, 2), -st * so, 1e-15);
    EXPECT_NEAR(r(2, 0), cp * st, 1e-15);
    EXPECT_NEAR(r(2, 1), st * sp, 1e-15);
    EXPECT_NEAR(r(2, 2), ct, 1e-15);
    EXPECT_NEAR(r(0, 0), ct * cp * co + sp * so, 1e-15);
    EXPECT_NEAR(r(0, 1), ct * co * sp - cp * so, 1e-15);
}

TEST(RotationKind, Parsing) {
    EXPECT_EQ(rotation_kind_from_string("vertex-at-top"), RotationKind::VertexAtTop);
    EXPECT_EQ(rotation_kind_from_string("uniform"), RotationKind::Uniform);
    EXPECT_EQ(to_string(RotationKind::Uniform), "uniform");
    EXPECT_THROW(rotation_kind_from_string("spin"), std::invalid_argument);
}

TEST(VertexAtTop, PivotGoesToTop) {
    Rng rng = make_rng(2);
    for (int rank : {2, 3}) {
        for (int i = 0; i < 100; ++i) {
            const auto x = random_embedding(rank, 6, rng);
            const auto rec = rotate_vertex_at_top_detailed(x, rng);
            ASSERT_TRUE(rec.pivot);
            const Eigen::Vector3d top = to_cartesian(rec.embedding, *rec.pivot);
            const Eigen::Vector3d want = rank == 3 ? Eigen::Vector3d::UnitZ() : Eigen::Vector3d::UnitX();
            EXPECT_LT((top - want).norm(), 1e-9);
            EXPECT_LT((gram(rec.embedding) - gram(x)).cwiseAbs().maxCoeff(), 1e-9);
        }
    }
}

TEST(VertexAtTop, Examples) {
    Rng rng = make_rng(3);
    const SphereEmbedding anti{2, {{0.4, 0}, {0.4 + kPi, 0}}};
    for (int i = 0; i < 20; ++i) {
        const auto y = rotate_vertex_at_top(anti, rng);
        const double a = y.points[0].theta, b = y.points[1].theta;
        EXPECT_TRUE((std::abs(a) < 1e-12 && std::abs(b - kPi) < 1e-12) ||
                    (std::abs(b) < 1e-12 && std::abs(a - kPi) < 1e-12));
    }
    const auto single = rotate_vertex_at_top(SphereEmbedding{3, {{2.0, 1.0}}}, rng);
    EXPECT_LT((to_cartesian(single, 0) - Eigen::Vector3d::UnitZ()).norm(), 1e-9);
    EXPECT_THROW(rotate_vertex_at_top(SphereEmbedding{3, {}}, rng), std::invalid_argument);
}

TEST(VertexAtTop, PivotIsUniform) {
    Rng rng = make_rng(4);
    const auto x = random_embedding(3, 4, rng);
    std::array<int, 4> counts{};
    for (int i = 0; i < 40000; ++i) {
        ++counts[static_cast<std::size_t>(*rotate_vertex_at_top_detailed(x, rng).pivot)];
    }
    for (int c : counts) {
        EXPECT_NEAR(c / 40000.0, 0.25, 0.01);
    }
}

TEST(Uniform, PreservesGeometryAndObjective) {
    Rng rng = make_rng(5);
    const auto g = complete_graph(6);
    for (int rank : {2, 3}) {
        for (int i = 0; i < 50; ++i) {
            const auto x = random_embedding(rank, 6, rng);
            const auto y = rotate_uniform(x, rng);
            EXPECT_LT((gram(y) - gram(x)).cwiseAbs().maxCoeff(), 1e-9);
            EXPECT_NEAR(objective_bm(g, y), objective_bm(g, x), 1e-9);
        }
    }
}

TEST(Uniform, MeanCoordinatesVanish) {
    Rng rng = make_rng(6);
    const SphereEmbedding north{3, {{0, 0}}};
    const SphereEmbedding zero{2, {{0, 0}}};
    double z = 0.0, c = 0.0;
    const int samples = 100000;
    for (int i = 0; i < samples; ++i) {
        z += to_cartesian(rotate_uniform(north, rng), 0).z();
        c += std::cos(rotate_uniform(zero, rng).points[0].theta);
    }
    EXPECT_NEAR(z / samples, 0.0, 0.01);
    EXPECT_NEAR(c / samples, 0.0, 0.01);
}

TEST(Uniform, ChiSquareOnZ) {
    // Uniform on the sphere <=> z uniform on [-1, 1] (Archimedes).
    Rng rng = make_rng(7);
    const SphereEmbedding x{3, {{1.1, 0.3}}};
    const int bins = 20, samples = 100000;
    std::vector<int> hist(bins, 0);
    for (int i = 0; i < samples; ++i) {
        const double z = to_cartesian(rotate_uniform(x, rng), 0).z();
        ++hist[static_cast<std::size_t>(std::min(bins - 1, static_cast<int>((z + 1.0) / 2.0 * bins)))];
    }
    const double expected = static_cast<double>(samples) / bins;
    double chi2 = 0.0;
    for (int h : hist) {
        chi2 += (h - expected) * (h - expected) / expected;
    }
    // 0.999 quantile of chi-square with 19 degrees of freedom.
    EXPECT_LT(chi2, 43.82);
}

TEST(ApplyRotation, RequiresRank3) {
    EXPECT_THROW(apply_rotation(SphereEmbedding{2, {{0, 0}}}, Eigen::Matrix3d::Identity()),
                 std::invalid_argument);
}
