#include "wsqaoa/qaoa.hpp"

#include <cmath>
#include <stdexcept>

namespace wsqaoa {

QaoaParams QaoaParams::zeros(int p) {
    if (p < 0) {
        throw std::invalid_argument("depth must be non-negative");
    }
    return {std::vector<double>(static_cast<std::size_t>(p), 0.0),
            std::vector<double>(static_cast<std::size_t>(p), 0.0)};
}

std::vector<double> QaoaParams::flatten() const {
    std::vector<double> flat = gamma;
    flat.insert(flat.end(), beta.begin(), beta.end());
    return flat;
}

QaoaParams QaoaParams::unflatten(const std::vector<double> &flat) {
    if (flat.size() % 2 != 0) {
        throw std::invalid_argument("flattened parameters must have even length");
    }
    const auto p = static_cast<std::ptrdiff_t>(flat.size() / 2);
    return {std::vector<double>(flat.begin(), flat.begin() + p),
            std::vector<double>(flat.begin() + p, flat.end())};
}

CostTable build_cost_table(const WeightedGraph &g, int max_qubits) {
    const int n = g.num_vertices();
    if (n > max_qubits) {
        throw std::length_error("graph exceeds simulator capacity");
    }
    CostTable t;
    t.num_qubits = n;
    t.cut.assign(std::size_t{1} << n, 0.0);
    for (std::size_t b = 0; b < t.cut.size(); ++b) {
        double total = 0.0;
        for (const auto &e : g.edges()) {
            const auto bu = (b >> (n - 1 - e.u)) & 1U;
            const auto bv = (b >> (n - 1 - e.v)) & 1U;
            if (bu != bv) {
                total += e.w;
            }
        }
        t.cut[b] = total;
    }
    return t;
}

void apply_cost_layer(StateVector &s, const CostTable &t, double gamma) {
    if (s.dimension() != t.cut.size()) {
        throw std::invalid_argument("state and cost table sizes differ");
    }
    auto amps = s.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        amps[b] *= std::polar(1.0, -gamma * t.cut[b]);
    }
}

void apply_mixer_layer(StateVector &s, double beta) {
    const double c = std::cos(beta);
    const Complex mis{0.0, -std::sin(beta)};
    const int n = s.num_qubits();
    auto amps = s.amplitudes();
    const std::size_t dim = amps.size();
    for (int q = 0; q < n; ++q) {
        const std::size_t stride = std::size_t{1} << (n - 1 - q);
        for (std::size_t block = 0; block < dim; block += 2 * stride) {
            for (std::size_t j = block; j < block + stride; ++j) {
                const Complex a0 = amps[j];
                const Complex a1 = amps[j + stride];
                amps[j] = c * a0 + mis * a1;
                amps[j + stride] = mis * a0 + c * a1;
            }
        }
    }
}

StateVector evolve(const StateVector &s0, const CostTable &t, const QaoaParams &params) {
    if (params.gamma.size() != params.beta.size()) {
        throw std::invalid_argument("gamma and beta must have the same length");
    }
    if (s0.dimension() != t.cut.size()) {
        throw std::invalid_argument("state and cost table sizes differ");
    }
    StateVector s = s0;
    const double reference = s0.norm_squared();
    for (std::size_t k = 0; k < params.gamma.size(); ++k) {
        apply_cost_layer(s, t, params.gamma[k]);
        apply_mixer_layer(s, params.beta[k]);
        if (std::abs(s.norm_squared() - reference) > kNormDriftTolerance) {
            throw std::logic_error("state norm drifted during evolution");
        }
    }
    return s;
}

double expected_cut(const StateVector &s, const CostTable &t) {
    if (s.dimension() != t.cut.size()) {
        throw std::invalid_argument("state and cost table sizes differ");
    }
    const auto amps = s.amplitudes();
    double total = 0.0;
    for (std::size_t b = 0; b < amps.size(); ++b) {
        total += std::norm(amps[b]) * t.cut[b];
    }
    return total;
}

std::vector<double> cut_distribution(const StateVector &s) {
    const auto amps = s.amplitudes();
    std::vector<double> probs(amps.size());
    for (std::size_t b = 0; b < amps.size(); ++b) {
        probs[b] = std::norm(amps[b]);
    }
    return probs;
}

double qaoa_expectation(const StateVector &s0, const CostTable &t, const QaoaParams &params) {
    return expected_cut(evolve(s0, t, params), t);
}

}  // namespace wsqaoa
