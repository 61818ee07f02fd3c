#include "wsqaoa/rotation.hpp"

#include <cmath>
#include <stdexcept>

#include "wsqaoa/bm_solver.hpp"

namespace wsqaoa {

std::string to_string(RotationKind kind) {
    return kind == RotationKind::VertexAtTop ? "vertex-at-top" : "uniform";
}

RotationKind rotation_kind_from_string(const std::string &s) {
    if (s == "vertex-at-top" || s == "vertex") {
        return RotationKind::VertexAtTop;
    }
    if (s == "uniform") {
        return RotationKind::Uniform;
    }
    throw std::invalid_argument("unknown rotation kind: " + s);
}

Eigen::Matrix3d vertex_at_top_matrix(double theta, double phi, double omega) {
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cp = std::cos(phi), sp = std::sin(phi);
    const double co = std::cos(omega), so = std::sin(omega);
    Eigen::Matrix3d r;
    r << ct * cp * co + sp * so, ct * co * sp - cp * so, -st * co,
        -co * sp + ct * cp * so, cp * co + ct * sp * so, -st * so,
        cp * st, st * sp, ct;
    return r;
}

SphereEmbedding apply_rotation(const SphereEmbedding &x, const Eigen::Matrix3d &r) {
    if (x.rank != 3) {
        throw std::invalid_argument("matrix rotation requires a rank-3 embedding");
    }
    SphereEmbedding out;
    out.rank = 3;
    out.points.reserve(x.points.size());
    for (const auto &p : x.points) {
        Eigen::Vector3d v = r * to_cartesian(p, 3);
        // Absorb the last-ulp drift so the unit-norm precondition holds exactly.
        v /= v.norm();
        out.points.push_back(from_cartesian(v));
    }
    return out;
}

namespace {

RotationRecord shift_circle(const SphereEmbedding &x, double shift) {
    RotationRecord rec;
    rec.angle_shift = shift;
    rec.embedding.rank = 2;
    rec.embedding.points.reserve(x.points.size());
    for (const auto &p : x.points) {
        rec.embedding.points.push_back({wrap_two_pi(p.theta + shift), 0.0});
    }
    const double c = std::cos(shift), s = std::sin(shift);
    rec.matrix << c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0;
    return rec;
}

RotationRecord to_top(const SphereEmbedding &x, const SpherePoint &target, Rng &rng) {
    RotationRecord rec;
    const double omega = uniform(rng, 0.0, kTwoPi);
    rec.matrix = vertex_at_top_matrix(target.theta, target.phi, omega);
    rec.embedding = apply_rotation(x, rec.matrix);
    return rec;
}

}  // namespace

RotationRecord rotate_vertex_at_top_detailed(const SphereEmbedding &x, Rng &rng) {
    require_supported_rank(x.rank);
    if (x.points.empty()) {
        throw std::invalid_argument("vertex-at-top rotation needs at least one vertex");
    }
    std::uniform_int_distribution<int> pick(0, x.size() - 1);
    const int pivot = pick(rng);
    const SpherePoint &target = x.points[static_cast<std::size_t>(pivot)];
    RotationRecord rec = x.rank == 2 ? shift_circle(x, -target.theta) : to_top(x, target, rng);
    rec.pivot = pivot;
    return rec;
}

SphereEmbedding rotate_vertex_at_top(const SphereEmbedding &x, Rng &rng) {
    return rotate_vertex_at_top_detailed(x, rng).embedding;
}

RotationRecord rotate_uniform_detailed(const SphereEmbedding &x, Rng &rng) {
    require_supported_rank(x.rank);
    if (x.rank == 2) {
        return shift_circle(x, uniform(rng, 0.0, kTwoPi));
    }
    const SpherePoint target = random_sphere_point(3, rng);
    return to_top(x, target, rng);
}

SphereEmbedding rotate_uniform(const SphereEmbedding &x, Rng &rng) {
    return rotate_uniform_detailed(x, rng).embedding;
}

RotationRecord rotate(const SphereEmbedding &x, RotationKind kind, Rng &rng) {
    return kind == RotationKind::VertexAtTop ? rotate_vertex_at_top_detailed(x, rng)
                                             : rotate_uniform_detailed(x, rng);
}

}  // namespace wsqaoa
