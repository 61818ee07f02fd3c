#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsqaoa/graph.hpp"
#include "wsqaoa/rng.hpp"
#include "wsqaoa/state_vector.hpp"
#include "wsqaoa/trainer.hpp"

namespace wsqaoa {

/// F_1 over gamma in [-pi, pi] x beta in [-pi/4, pi/4].
struct Landscape {
    std::vector<double> gamma_grid;
    std::vector<double> beta_grid;
    /// values[i][j] = F_1(gamma_grid[j], beta_grid[i]) (one row per beta).
    std::vector<std::vector<double>> values;

    [[nodiscard]] double max_value() const;
};

struct LandscapeResolution {
    int gamma_points = 129;
    int beta_points = 65;
};

/// `count` evenly spaced points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int count);

Landscape scan_landscape(const WeightedGraph &g, const StateVector &s0,
                         LandscapeResolution resolution = {}, int threads = 1);

/**
 * r-th percentile with linear interpolation over the 1-indexed sorted values:
 * n = r * N; s_n when n is integral, otherwise s_i + (n - i)(s_{i+1} - s_i)
 * with i = floor(n). Returns the minimum for n < 1. Throws on empty input.
 */
double percentile_rho(std::vector<double> values, double r);

/// Runs of one (graph, variant, depth) cell plus the graph's Max-Cut.
struct GraphRuns {
    std::vector<TrainingTrace> runs;
    double max_cut = 0.0;
};

struct AggregateCurve {
    double r = 0.5;
    /// values[t] for epochs t = 0..T.
    std::vector<double> values;
};

/// alpha(G, t) = best_of_runs(G, t) / MaxCut(G); curve(r, t) = rho_r over graphs.
std::vector<AggregateCurve> aggregate_curves(const std::vector<GraphRuns> &graphs,
                                             const std::vector<double> &rs = {0.05, 0.5, 0.95});

/// alpha(G, t) for every graph and epoch 0..T (rows = graphs).
std::vector<std::vector<double>> approximation_ratios(const std::vector<GraphRuns> &graphs);

struct P0BoundRow {
    double alpha = 0.0;
    double ratio = 0.0;
    double std_error = 0.0;
};

struct P0BoundTable {
    int rank = 3;
    /// 2/3 for rank 3, 3/4 for rank 2.
    double bound = 0.0;
    std::vector<P0BoundRow> rows;
};

/// Edge angles probed by verify_p0_bound.
std::vector<double> p0_bound_angles();

/**
 * Monte Carlo over uniform rotations of a single edge embedded at angle alpha:
 * mean p=0 probability that the edge is cut (through the Bloch mapping and
 * the exact cut distribution), divided by the edge's relaxation value
 * (1 - cos alpha) / 2.
 */
P0BoundTable verify_p0_bound(int rank, int samples, std::uint64_t seed);

}  // namespace wsqaoa
