#include "wsqaoa/embedding.hpp"

#include <cmath>
#include <stdexcept>

namespace wsqaoa {

void require_supported_rank(int rank) {
    if (rank != 2 && rank != 3) {
        throw std::invalid_argument("embedding rank must be 2 or 3");
    }
}

double wrap_two_pi(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative number can round back up to exactly 2*pi.
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

Eigen::Vector3d to_cartesian(const SpherePoint &p, int rank) {
    if (rank == 2) {
        return {std::cos(p.theta), std::sin(p.theta), 0.0};
    }
    const double s = std::sin(p.theta);
    return {s * std::cos(p.phi), s * std::sin(p.phi), std::cos(p.theta)};
}

Eigen::Vector3d to_cartesian(const SphereEmbedding &x, int vertex) {
    require_supported_rank(x.rank);
    if (vertex < 0 || vertex >= x.size()) {
        throw std::out_of_range("vertex index out of range");
    }
    return to_cartesian(x.points[static_cast<std::size_t>(vertex)], x.rank);
}

SpherePoint from_cartesian(const Eigen::Vector3d &v) {
    if (std::abs(v.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("from_cartesian expects a unit vector");
    }
    // atan2 form of arccos(z): identical for unit vectors, but stays accurate
    // next to the poles where arccos loses half of its digits.
    const double rho = std::hypot(v.x(), v.y());
    SpherePoint p;
    p.theta = std::atan2(rho, v.z());
    p.phi = rho < 1e-15 ? 0.0 : wrap_two_pi(std::atan2(v.y(), v.x()));
    return p;
}

SphereEmbedding normalize_angles(const SphereEmbedding &x) {
    require_supported_rank(x.rank);
    SphereEmbedding out = x;
    for (auto &p : out.points) {
        p.theta = wrap_two_pi(p.theta);
        if (x.rank == 2) {
            p.phi = 0.0;
            continue;
        }
        p.phi = wrap_two_pi(p.phi);
        if (p.theta > kPi) {
            p.theta = kTwoPi - p.theta;
            p.phi = wrap_two_pi(p.phi + kPi);
        }
    }
    return out;
}

double squared_distance(const SpherePoint &a, const SpherePoint &b, int rank) {
    if (rank == 2) {
        return 2.0 - 2.0 * std::cos(a.theta - b.theta);
    }
    const double dot = std::sin(a.theta) * std::sin(b.theta) * std::cos(a.phi - b.phi) +
                       std::cos(a.theta) * std::cos(b.theta);
    return 2.0 - 2.0 * dot;
}

}  // namespace wsqaoa
