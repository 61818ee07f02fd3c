#include "wsqaoa/bloch.hpp"

#include <cmath>
#include <stdexcept>

namespace wsqaoa {

std::array<Complex, 2> qubit_amplitudes(const QubitAngles &q) {
    return {Complex{std::cos(q.theta / 2.0), 0.0},
            std::polar(1.0, q.phi) * std::sin(q.theta / 2.0)};
}

Eigen::Vector3d bloch_vector(const std::array<Complex, 2> &amps) {
    const Complex c = std::conj(amps[0]) * amps[1];
    return {2.0 * c.real(), 2.0 * c.imag(), std::norm(amps[0]) - std::norm(amps[1])};
}

Eigen::Vector3d bloch_vector(const QubitAngles &q) { return bloch_vector(qubit_amplitudes(q)); }

ProductState map_rank3(const SphereEmbedding &x) {
    if (x.rank != 3) {
        throw std::invalid_argument("map_rank3 requires a rank-3 embedding");
    }
    const SphereEmbedding normalized = normalize_angles(x);
    ProductState s;
    s.qubits.reserve(normalized.points.size());
    for (const auto &p : normalized.points) {
        s.qubits.push_back({p.theta, p.phi});
    }
    return s;
}

ProductState map_rank2(const SphereEmbedding &x) {
    if (x.rank != 2) {
        throw std::invalid_argument("map_rank2 requires a rank-2 embedding");
    }
    ProductState s;
    s.qubits.reserve(x.points.size());
    for (const auto &p : x.points) {
        const double t = wrap_two_pi(p.theta);
        if (t < kPi) {
            s.qubits.push_back({t, 3.0 * kPi / 2.0});
        } else {
            s.qubits.push_back({kTwoPi - t, kPi / 2.0});
        }
    }
    return s;
}

ProductState map_to_product_state(const SphereEmbedding &x) {
    require_supported_rank(x.rank);
    return x.rank == 2 ? map_rank2(x) : map_rank3(x);
}

StateVector amplitudes(const ProductState &s, int max_qubits) {
    const int n = s.size();
    StateVector out(n, max_qubits);
    auto amps = out.amplitudes();
    std::size_t filled = 1;
    for (const auto &q : s.qubits) {
        const auto a = qubit_amplitudes(q);
        // Appending a less significant qubit: new[2k + b] = old[k] * a[b].
        for (std::size_t k = filled; k-- > 0;) {
            const Complex old = amps[k];
            amps[2 * k] = old * a[0];
            amps[2 * k + 1] = old * a[1];
        }
        filled *= 2;
    }
    return out;
}

bool gate_decomposition_check(double theta, double phi) {
    using Mat2 = std::array<std::array<Complex, 2>, 2>;
    const Complex i{0.0, 1.0};
    const double h = theta / 2.0;
    const Mat2 rx{{{std::cos(h), -i * std::sin(h)}, {-i * std::sin(h), std::cos(h)}}};
    const double z = (phi + kPi / 2.0) / 2.0;
    const Mat2 rz{{{std::exp(-i * z), 0.0}, {0.0, std::exp(i * z)}}};

    // Rx(theta)|0> is the first column of Rx.
    const std::array<Complex, 2> after_x{rx[0][0], rx[1][0]};
    const std::array<Complex, 2> circuit{rz[0][0] * after_x[0] + rz[0][1] * after_x[1],
                                         rz[1][0] * after_x[0] + rz[1][1] * after_x[1]};
    const auto target = qubit_amplitudes({theta, phi});
    const Complex overlap = std::conj(target[0]) * circuit[0] + std::conj(target[1]) * circuit[1];
    return std::abs(std::abs(overlap) - 1.0) <= 1e-9;
}

}  // namespace wsqaoa
