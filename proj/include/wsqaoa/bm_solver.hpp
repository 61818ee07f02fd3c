#pragma once

#include <cstdint>
#include <vector>

#include "wsqaoa/embedding.hpp"
#include "wsqaoa/graph.hpp"
#include "wsqaoa/rng.hpp"

namespace wsqaoa {

struct BmSolverConfig {
    /// Half-width of the uniform angle perturbation (radians).
    double delta = 1.0 / 20.0;
    /// Stop once the objective has not risen by more than
    /// stall_tolerance_factor * sum|w_e| within stall_window evaluations.
    double stall_tolerance_factor = 1e-5;
    int stall_window = 100;
    int restarts = 10;
    std::uint64_t seed = 0;
};

/// Per-restart diagnostics.
struct BmRestartStats {
    double objective = 0.0;
    std::uint64_t evaluations = 0;
    std::uint64_t accepted = 0;
};

struct BmSolution {
    SphereEmbedding embedding;
    double objective = 0.0;
    std::vector<BmRestartStats> restarts;
};

/// (1/4) * sum over edges of w_ij * |a_i - a_j|^2.
double objective_bm(const WeightedGraph &g, const SphereEmbedding &x);

/// Uniform sample on the circle (rank 2) or the sphere (rank 3).
SpherePoint random_sphere_point(int rank, Rng &rng);

/**
 * Stochastic coordinate ascent on the rank-k Burer-Monteiro relaxation.
 *
 * Each sweep visits vertices in order and perturbs the vertex's angles by
 * independent U(-delta, delta) draws (one angle for rank 2, both for rank 3).
 * A perturbation is undone only if the objective strictly decreases. Every
 * trial counts as one objective evaluation for the stall rule, which is
 * checked at the end of each sweep. The best of `restarts` independent runs is
 * returned with normalized angles.
 *
 * `trajectory`, when non-null, receives the objective after every evaluation of
 * the best restart (for monotonicity checks).
 */
BmSolution solve_bm_detailed(const WeightedGraph &g, int rank, const BmSolverConfig &cfg,
                             std::vector<double> *trajectory = nullptr);

SphereEmbedding solve_bm(const WeightedGraph &g, int rank, const BmSolverConfig &cfg);

/// Random-hyperplane rounding: bit i = 1 iff <a_i, r> < 0 for uniform r.
CutAssignment hyperplane_round(const SphereEmbedding &x, Rng &rng);

/// objective_bm / Max-Cut. Throws std::domain_error when Max-Cut is zero.
double approximation_kappa(const WeightedGraph &g, const SphereEmbedding &x);

}  // namespace wsqaoa
