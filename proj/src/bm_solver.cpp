#include "wsqaoa/bm_solver.hpp"

#include <cmath>
#include <stdexcept>

namespace wsqaoa {

namespace {

struct Neighbor {
    int vertex;
    double weight;
};

std::vector<std::vector<Neighbor>> adjacency(const WeightedGraph &g) {
    std::vector<std::vector<Neighbor>> adj(static_cast<std::size_t>(g.num_vertices()));
    for (const auto &e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.w});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.w});
    }
    return adj;
}

double local_objective(const std::vector<Neighbor> &nbrs, const SphereEmbedding &x, int i) {
    double sum = 0.0;
    const auto &pi = x.points[static_cast<std::size_t>(i)];
    for (const auto &nb : nbrs) {
        sum += nb.weight * squared_distance(pi, x.points[static_cast<std::size_t>(nb.vertex)], x.rank);
    }
    return 0.25 * sum;
}

struct RestartResult {
    SphereEmbedding embedding;
    BmRestartStats stats;
    std::vector<double> trajectory;
};

RestartResult coordinate_ascent(const WeightedGraph &g,
                                const std::vector<std::vector<Neighbor>> &adj, int rank,
                                const BmSolverConfig &cfg, Rng &rng, bool record) {
    const int n = g.num_vertices();
    RestartResult r;
    r.embedding.rank = rank;
    r.embedding.points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        r.embedding.points.push_back(random_sphere_point(rank, rng));
    }

    double objective = objective_bm(g, r.embedding);
    const double tolerance = cfg.stall_tolerance_factor * total_abs_weight(g);
    double marker = objective;
    int since_improvement = 0;

    std::uniform_real_distribution<double> step(-cfg.delta, cfg.delta);
    while (n > 0) {
        for (int i = 0; i < n; ++i) {
            auto &p = r.embedding.points[static_cast<std::size_t>(i)];
            const SpherePoint saved = p;
            const double before = local_objective(adj[static_cast<std::size_t>(i)], r.embedding, i);
            if (rank == 2) {
                p.theta += step(rng);
            } else {
                p.phi += step(rng);
                p.theta += step(rng);
            }
            const double after = local_objective(adj[static_cast<std::size_t>(i)], r.embedding, i);
            ++r.stats.evaluations;
            if (after - before < 0.0) {
                p = saved;
            } else {
                objective += after - before;
                ++r.stats.accepted;
            }
            if (record) {
                r.trajectory.push_back(objective);
            }
            if (objective > marker + tolerance) {
                marker = objective;
                since_improvement = 0;
            } else {
                ++since_improvement;
            }
        }
        if (since_improvement >= cfg.stall_window) {
            break;
        }
    }

    r.embedding = normalize_angles(r.embedding);
    r.stats.objective = objective_bm(g, r.embedding);
    return r;
}

}  // namespace

double objective_bm(const WeightedGraph &g, const SphereEmbedding &x) {
    require_supported_rank(x.rank);
    if (x.size() != g.num_vertices()) {
        throw std::invalid_argument("embedding size does not match vertex count");
    }
    double sum = 0.0;
    for (const auto &e : g.edges()) {
        sum += e.w * squared_distance(x.points[static_cast<std::size_t>(e.u)],
                                      x.points[static_cast<std::size_t>(e.v)], x.rank);
    }
    return 0.25 * sum;
}

SpherePoint random_sphere_point(int rank, Rng &rng) {
    require_supported_rank(rank);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    SpherePoint p;
    if (rank == 2) {
        p.theta = kTwoPi * unit(rng);
        return p;
    }
    const double a = unit(rng);
    const double b = unit(rng);
    p.phi = kTwoPi * a;
    p.theta = std::acos(2.0 * b - 1.0);
    return p;
}

BmSolution solve_bm_detailed(const WeightedGraph &g, int rank, const BmSolverConfig &cfg,
                             std::vector<double> *trajectory) {
    require_supported_rank(rank);
    if (!(cfg.delta > 0.0)) {
        throw std::invalid_argument("perturbation width must be positive");
    }
    if (cfg.restarts < 1 || cfg.stall_window < 1) {
        throw std::invalid_argument("restarts and stall window must be at least one");
    }
    const auto adj = adjacency(g);
    BmSolution best;
    bool have_best = false;
    for (int k = 0; k < cfg.restarts; ++k) {
        Rng rng = make_rng(derive_seed(cfg.seed, {static_cast<std::uint64_t>(k)}));
        RestartResult r = coordinate_ascent(g, adj, rank, cfg, rng, trajectory != nullptr);
        best.restarts.push_back(r.stats);
        if (!have_best || r.stats.objective > best.objective) {
            best.embedding = std::move(r.embedding);
            best.objective = r.stats.objective;
            if (trajectory != nullptr) {
                *trajectory = std::move(r.trajectory);
            }
            have_best = true;
        }
    }
    return best;
}

SphereEmbedding solve_bm(const WeightedGraph &g, int rank, const BmSolverConfig &cfg) {
    return solve_bm_detailed(g, rank, cfg).embedding;
}

CutAssignment hyperplane_round(const SphereEmbedding &x, Rng &rng) {
    require_supported_rank(x.rank);
    const Eigen::Vector3d r = to_cartesian(random_sphere_point(x.rank, rng), x.rank);
    CutAssignment c;
    c.bits.reserve(x.points.size());
    for (const auto &p : x.points) {
        c.bits.push_back(to_cartesian(p, x.rank).dot(r) < 0.0 ? 1 : 0);
    }
    return c;
}

double approximation_kappa(const WeightedGraph &g, const SphereEmbedding &x) {
    const double maxcut = max_cut_brute_force(g).value;
    if (maxcut == 0.0) {
        throw std::domain_error("approximation ratio undefined for zero max-cut");
    }
    return objective_bm(g, x) / maxcut;
}

}  // namespace wsqaoa
