#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace wsqaoa {

using Complex = std::complex<double>;

/// Default simulator capacity in qubits.
inline constexpr int kDefaultMaxQubits = 20;

/**
 * Dense n-qubit state. Basis index b = sum_i b_i * 2^(n-1-i): qubit 0 is the
 * most significant bit, matching the |b_0 b_1 ... b_{n-1}> tensor order.
 */
class StateVector {
  public:
    StateVector() = default;
    /// |0...0>. Throws std::length_error above max_qubits.
    explicit StateVector(int num_qubits, int max_qubits = kDefaultMaxQubits);
    StateVector(int num_qubits, std::vector<Complex> amplitudes,
                int max_qubits = kDefaultMaxQubits);

    static StateVector basis_state(int num_qubits, std::uint64_t index,
                                   int max_qubits = kDefaultMaxQubits);
    /// |+>^n.
    static StateVector uniform_superposition(int num_qubits, int max_qubits = kDefaultMaxQubits);

    [[nodiscard]] int num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amps_[i]; }
    Complex &operator[](std::size_t i) { return amps_[i]; }

    [[nodiscard]] double norm_squared() const noexcept;

    /// Debug dump: interleaved (re, im) little-endian float64 in index order.
    [[nodiscard]] std::vector<std::uint8_t> to_bytes() const;

  private:
    int n_ = 0;
    std::vector<Complex> amps_{Complex{1.0, 0.0}};
};

}  // namespace wsqaoa
