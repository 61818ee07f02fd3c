#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "wsqaoa/embedding.hpp"
#include "wsqaoa/state_vector.hpp"

namespace wsqaoa {

/// Bloch angles of cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct QubitAngles {
    double theta = 0.0;
    double phi = 0.0;
};

struct ProductState {
    std::vector<QubitAngles> qubits;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(qubits.size()); }
};

/// Two amplitudes (|0>, |1>) of a single qubit.
std::array<Complex, 2> qubit_amplitudes(const QubitAngles &q);

/// (<X>, <Y>, <Z>) of a single-qubit pure state.
Eigen::Vector3d bloch_vector(const std::array<Complex, 2> &amps);
Eigen::Vector3d bloch_vector(const QubitAngles &q);

/// Rank-3 points map to the Bloch sphere unchanged (after angle normalization).
ProductState map_rank3(const SphereEmbedding &x);

/// Rank-2 angles are laid into the yz-plane: Bloch vector (0, -sin t, cos t).
ProductState map_rank2(const SphereEmbedding &x);

/// Dispatches on x.rank.
ProductState map_to_product_state(const SphereEmbedding &x);

/// Tensor product of the qubit states; qubit 0 is the most significant bit.
StateVector amplitudes(const ProductState &s, int max_qubits = kDefaultMaxQubits);

/// Checks Rz(phi + pi/2) Rx(theta) |0> against Q(theta, phi) up to global phase
/// (|<a|b>| = 1 within 1e-9).
bool gate_decomposition_check(double theta, double phi);

// Named single-qubit states.
inline constexpr QubitAngles kZero{0.0, 0.0};
inline constexpr QubitAngles kOne{kPi, 0.0};
inline constexpr QubitAngles kPlus{kPi / 2.0, 0.0};
inline constexpr QubitAngles kMinus{kPi / 2.0, kPi};
inline constexpr QubitAngles kPlusI{kPi / 2.0, kPi / 2.0};
inline constexpr QubitAngles kMinusI{kPi / 2.0, 3.0 * kPi / 2.0};

}  // namespace wsqaoa
