#pragma once

#include <vector>

#include "wsqaoa/graph.hpp"
#include "wsqaoa/state_vector.hpp"

namespace wsqaoa {

/// Variational angles for p layers; gamma[k], beta[k] drive layer k+1.
struct QaoaParams {
    std::vector<double> gamma;
    std::vector<double> beta;

    [[nodiscard]] int depth() const noexcept { return static_cast<int>(gamma.size()); }
    static QaoaParams zeros(int p);
    /// (gamma_1..gamma_p, beta_1..beta_p).
    [[nodiscard]] std::vector<double> flatten() const;
    static QaoaParams unflatten(const std::vector<double> &flat);
};

/// Diagonal of the cost Hamiltonian: cut[b] is the cut value of bitstring b.
struct CostTable {
    int num_qubits = 0;
    std::vector<double> cut;
};

/// Maximum drift of the squared norm tolerated per layer.
inline constexpr double kNormDriftTolerance = 1e-9;

CostTable build_cost_table(const WeightedGraph &g, int max_qubits = kDefaultMaxQubits);

/// amp[b] *= exp(-i gamma cut[b]).
void apply_cost_layer(StateVector &s, const CostTable &t, double gamma);

/// Applies exp(-i beta X) = cos(beta) I - i sin(beta) X to every qubit.
void apply_mixer_layer(StateVector &s, double beta);

/// Cost then mixer for layers 1..p. Throws std::logic_error if the norm drifts
/// by more than kNormDriftTolerance; the state is never renormalized.
StateVector evolve(const StateVector &s0, const CostTable &t, const QaoaParams &params);

/// sum_b |amp[b]|^2 cut[b].
double expected_cut(const StateVector &s, const CostTable &t);

/// |amp[b]|^2 for every basis state.
std::vector<double> cut_distribution(const StateVector &s);

/// F_p(gamma, beta) = <psi_p| H_C |psi_p>.
double qaoa_expectation(const StateVector &s0, const CostTable &t, const QaoaParams &params);

}  // namespace wsqaoa
