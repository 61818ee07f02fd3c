#pragma once

#include <optional>
#include <string>

#include <Eigen/Core>

#include "wsqaoa/embedding.hpp"
#include "wsqaoa/rng.hpp"

namespace wsqaoa {

enum class RotationKind { VertexAtTop, Uniform };

std::string to_string(RotationKind kind);
RotationKind rotation_kind_from_string(const std::string &s);

/**
 * Rotation taking the point with spherical angles (theta, phi) to (0, 0, 1),
 * followed by a rotation by omega about the z axis:
 *
 *     R = Rz(omega) * Ry(-theta) * Rz(-phi)
 *
 * Rows two and three equal the closed-form matrix usually quoted for this
 * construction; row one has -sin(theta) cos(omega) in its last column.
 */
Eigen::Matrix3d vertex_at_top_matrix(double theta, double phi, double omega);

/// Applies a 3x3 rotation to every point of a rank-3 embedding.
SphereEmbedding apply_rotation(const SphereEmbedding &x, const Eigen::Matrix3d &r);

struct RotationRecord {
    SphereEmbedding embedding;
    /// Vertex sent to the top (vertex-at-top only).
    std::optional<int> pivot;
    /// Rank 3: the applied matrix. Rank 2: rotation by `angle_shift` in the plane.
    Eigen::Matrix3d matrix = Eigen::Matrix3d::Identity();
    double angle_shift = 0.0;
};

/// Picks a vertex uniformly and rotates it to the north pole (rank 3, plus a
/// random twist about z) or to angle 0 (rank 2). Requires a non-empty embedding.
RotationRecord rotate_vertex_at_top_detailed(const SphereEmbedding &x, Rng &rng);
SphereEmbedding rotate_vertex_at_top(const SphereEmbedding &x, Rng &rng);

/// Uniformly random rotation of the circle or the sphere.
RotationRecord rotate_uniform_detailed(const SphereEmbedding &x, Rng &rng);
SphereEmbedding rotate_uniform(const SphereEmbedding &x, Rng &rng);

RotationRecord rotate(const SphereEmbedding &x, RotationKind kind, Rng &rng);

}  // namespace wsqaoa
