#include "wsqaoa/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wsqaoa/bloch.hpp"
#include "wsqaoa/embedding.hpp"
#include "wsqaoa/parallel.hpp"
#include "wsqaoa/qaoa.hpp"
#include "wsqaoa/rotation.hpp"

namespace wsqaoa {

double Landscape::max_value() const {
    double best = -INFINITY;
    for (const auto &row : values) {
        for (double v : row) {
            best = std::max(best, v);
        }
    }
    return best;
}

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1) {
        throw std::invalid_argument("grid needs at least one point");
    }
    std::vector<double> out(static_cast<std::size_t>(count));
    if (count == 1) {
        out[0] = 0.5 * (lo + hi);
        return out;
    }
    const int mid2 = count - 1;
    for (int i = 0; i < count; ++i) {
        // Symmetric form keeps the midpoint of an odd grid exactly zero for
        // symmetric ranges.
        out[static_cast<std::size_t>(i)] =
            (lo * static_cast<double>(mid2 - i) + hi * static_cast<double>(i)) / mid2;
    }
    return out;
}

Landscape scan_landscape(const WeightedGraph &g, const StateVector &s0,
                         LandscapeResolution resolution, int threads) {
    const CostTable table = build_cost_table(g);
    if (table.cut.size() != s0.dimension()) {
        throw std::invalid_argument("initial state does not match the graph");
    }
    Landscape land;
    land.gamma_grid = linspace(-kPi, kPi, resolution.gamma_points);
    land.beta_grid = linspace(-kPi / 4.0, kPi / 4.0, resolution.beta_points);
    land.values.assign(land.beta_grid.size(), std::vector<double>(land.gamma_grid.size()));
    parallel_for(land.beta_grid.size(), threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < land.gamma_grid.size(); ++j) {
            const QaoaParams params{{land.gamma_grid[j]}, {land.beta_grid[i]}};
            land.values[i][j] = qaoa_expectation(s0, table, params);
        }
    });
    return land;
}

double percentile_rho(std::vector<double> values, double r) {
    if (values.empty()) {
        throw std::invalid_argument("percentile of an empty set");
    }
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::invalid_argument("percentile rank must lie in [0, 1]");
    }
    std::sort(values.begin(), values.end());
    const double count = static_cast<double>(values.size());
    const double pos = r * count;
    if (pos < 1.0) {
        return values.front();
    }
    const double rounded = std::round(pos);
    if (std::abs(pos - rounded) <= 1e-12 * count) {
        return values[static_cast<std::size_t>(rounded) - 1];
    }
    const auto i = static_cast<std::size_t>(std::floor(pos));
    if (i >= values.size()) {
        return values.back();
    }
    // 1-indexed s_i and s_{i+1} are values[i-1] and values[i].
    return values[i - 1] + (pos - std::floor(pos)) * (values[i] - values[i - 1]);
}

std::vector<std::vector<double>> approximation_ratios(const std::vector<GraphRuns> &graphs) {
    if (graphs.empty()) {
        throw std::invalid_argument("aggregation needs at least one graph");
    }
    int horizon = 0;
    for (const auto &gr : graphs) {
        if (gr.runs.empty()) {
            throw std::invalid_argument("graph has no training traces");
        }
        if (!(gr.max_cut > 0.0)) {
            throw std::invalid_argument("graph has no positive max-cut");
        }
        for (const auto &tr : gr.runs) {
            horizon = std::max(horizon, tr.last_epoch());
        }
    }
    std::vector<std::vector<double>> alpha(graphs.size(),
                                           std::vector<double>(static_cast<std::size_t>(horizon) + 1));
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        for (int t = 0; t <= horizon; ++t) {
            alpha[gi][static_cast<std::size_t>(t)] =
                best_of_runs(graphs[gi].runs, t) / graphs[gi].max_cut;
        }
    }
    return alpha;
}

std::vector<AggregateCurve> aggregate_curves(const std::vector<GraphRuns> &graphs,
                                             const std::vector<double> &rs) {
    const auto alpha = approximation_ratios(graphs);
    const std::size_t horizon = alpha.front().size();
    std::vector<AggregateCurve> curves;
    std::vector<double> column(alpha.size());
    for (double r : rs) {
        AggregateCurve curve{r, std::vector<double>(horizon)};
        for (std::size_t t = 0; t < horizon; ++t) {
            for (std::size_t gi = 0; gi < alpha.size(); ++gi) {
                column[gi] = alpha[gi][t];
            }
            curve.values[t] = percentile_rho(column, r);
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

std::vector<double> p0_bound_angles() {
    return {kPi / 6.0, kPi / 3.0, kPi / 2.0, 2.0 * kPi / 3.0, 5.0 * kPi / 6.0, kPi};
}

P0BoundTable verify_p0_bound(int rank, int samples, std::uint64_t seed) {
    require_supported_rank(rank);
    if (samples < 2) {
        throw std::invalid_argument("need at least two samples");
    }
    P0BoundTable table;
    table.rank = rank;
    table.bound = rank == 3 ? 2.0 / 3.0 : 3.0 / 4.0;

    const CostTable edge = build_cost_table(WeightedGraph(2, {{0, 1, 1.0}}));
    const auto angles = p0_bound_angles();
    for (std::size_t k = 0; k < angles.size(); ++k) {
        const double alpha = angles[k];
        SphereEmbedding x;
        x.rank = rank;
        if (rank == 3) {
            x.points = {{kPi / 2.0, 0.0}, {kPi / 2.0, alpha}};
        } else {
            x.points = {{0.0, 0.0}, {alpha, 0.0}};
        }
        Rng rng = make_rng(derive_seed(seed, {static_cast<std::uint64_t>(rank), k}));
        double sum = 0.0;
        double sum_sq = 0.0;
        for (int s = 0; s < samples; ++s) {
            const StateVector state = amplitudes(map_to_product_state(rotate_uniform(x, rng)));
            const double cut_prob = expected_cut(state, edge);
            sum += cut_prob;
            sum_sq += cut_prob * cut_prob;
        }
        const double count = static_cast<double>(samples);
        const double mean = sum / count;
        const double var = std::max(0.0, (sum_sq - count * mean * mean) / (count - 1.0));
        const double relaxed = (1.0 - std::cos(alpha)) / 2.0;
        table.rows.push_back({alpha, mean / relaxed, std::sqrt(var / count) / relaxed});
    }
    return table;
}

}  // namespace wsqaoa
