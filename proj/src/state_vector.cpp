#include "wsqaoa/state_vector.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace wsqaoa {

namespace {

std::size_t checked_dimension(int num_qubits, int max_qubits) {
    if (num_qubits < 0) {
        throw std::invalid_argument("qubit count must be non-negative");
    }
    if (num_qubits > max_qubits || num_qubits > 62) {
        throw std::length_error("qubit count exceeds simulator capacity");
    }
    return std::size_t{1} << num_qubits;
}

}  // namespace

StateVector::StateVector(int num_qubits, int max_qubits)
    : n_(num_qubits), amps_(checked_dimension(num_qubits, max_qubits)) {
    amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes, int max_qubits)
    : n_(num_qubits), amps_(std::move(amplitudes)) {
    if (amps_.size() != checked_dimension(num_qubits, max_qubits)) {
        throw std::invalid_argument("amplitude count must be 2^n");
    }
}

StateVector StateVector::basis_state(int num_qubits, std::uint64_t index, int max_qubits) {
    StateVector s(num_qubits, max_qubits);
    if (index >= s.dimension()) {
        throw std::out_of_range("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::uniform_superposition(int num_qubits, int max_qubits) {
    StateVector s(num_qubits, max_qubits);
    const double a = 1.0 / std::sqrt(static_cast<double>(s.dimension()));
    for (auto &x : s.amps_) {
        x = a;
    }
    return s;
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<std::uint8_t> StateVector::to_bytes() const {
    static_assert(std::endian::native == std::endian::little, "dump assumes a little-endian host");
    std::vector<std::uint8_t> out(amps_.size() * 2 * sizeof(double));
    std::size_t off = 0;
    for (const auto &a : amps_) {
        const double parts[2] = {a.real(), a.imag()};
        std::memcpy(out.data() + off, parts, sizeof(parts));
        off += sizeof(parts);
    }
    return out;
}

}  // namespace wsqaoa
