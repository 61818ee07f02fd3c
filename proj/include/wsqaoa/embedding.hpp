#pragma once

#include <numbers>
#include <vector>

#include <Eigen/Core>

namespace wsqaoa {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Polar angle `theta` and (rank 3 only) azimuthal angle `phi`, in radians.
struct SpherePoint {
    double theta = 0.0;
    double phi = 0.0;

    friend bool operator==(const SpherePoint &, const SpherePoint &) = default;
};

/**
 * Unit vectors in R^2 or R^3, one per vertex, stored as angles.
 *
 * Rank 2 points live on the circle at (cos theta, sin theta); `phi` is unused
 * and kept at zero. Rank 3 points use (sin theta cos phi, sin theta sin phi,
 * cos theta). Radii are implicitly one.
 */
struct SphereEmbedding {
    int rank = 3;
    std::vector<SpherePoint> points;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(points.size()); }
};

/// Throws std::invalid_argument unless rank is 2 or 3.
void require_supported_rank(int rank);

/// x mod 2*pi in [0, 2*pi).
double wrap_two_pi(double x);

/// Rank 2: (cos theta, sin theta, 0). Rank 3: spherical-to-Cartesian.
Eigen::Vector3d to_cartesian(const SpherePoint &p, int rank);
Eigen::Vector3d to_cartesian(const SphereEmbedding &x, int vertex);

/// Inverse of to_cartesian for rank 3. Requires |v| = 1 within 1e-9; phi is 0
/// at the poles.
SpherePoint from_cartesian(const Eigen::Vector3d &v);

/// Rank 3: theta into [0, pi], phi into [0, 2*pi) without moving the point.
/// Rank 2: theta into [0, 2*pi).
SphereEmbedding normalize_angles(const SphereEmbedding &x);

/// Squared chord length between two points of the same rank.
double squared_distance(const SpherePoint &a, const SpherePoint &b, int rank);

}  // namespace wsqaoa
