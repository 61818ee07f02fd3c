#include "wsqaoa/theory.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wsqaoa/analysis.hpp"
#include "wsqaoa/bloch.hpp"
#include "wsqaoa/bm_solver.hpp"
#include "wsqaoa/graph.hpp"
#include "wsqaoa/qaoa.hpp"
#include "wsqaoa/rotation.hpp"

namespace wsqaoa {

namespace {

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << x;
    return out.str();
}

WeightedGraph random_weighted(int n, Rng &rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (uniform(rng, 0.0, 1.0) < 0.6) {
                edges.push_back({u, v, uniform(rng, 0.1, 2.0)});
            }
        }
    }
    return WeightedGraph(n, std::move(edges));
}

QaoaParams random_params(int p, Rng &rng) {
    QaoaParams q = QaoaParams::zeros(p);
    for (int k = 0; k < p; ++k) {
        q.gamma[static_cast<std::size_t>(k)] = uniform(rng, -kPi, kPi);
        q.beta[static_cast<std::size_t>(k)] = uniform(rng, -kPi / 4.0, kPi / 4.0);
    }
    return q;
}

TheoryCheck check_plus_minus(Rng &rng) {
    const WeightedGraph g(2, {{0, 1, 1.0}});
    const CostTable t = build_cost_table(g);
    const StateVector s0 = amplitudes(ProductState{{kPlus, kMinus}});
    double worst = 0.0;
    for (int p = 1; p <= 3; ++p) {
        for (int i = 0; i < 50; ++i) {
            worst = std::max(worst, std::abs(qaoa_expectation(s0, t, random_params(p, rng)) - 0.5));
        }
    }
    return {"single edge |+->: F_p = MaxCut/2 for p=1..3", worst <= 1e-12,
            "max deviation " + fmt(worst)};
}

TheoryCheck check_two_edges() {
    const WeightedGraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    const CostTable t = build_cost_table(g);
    const StateVector s0 = amplitudes(ProductState{{kZero, kOne, kPlusI, kMinusI}});
    const double mc = max_cut_brute_force(g).value;
    double worst = 0.0;
    for (double gamma : linspace(-kPi, kPi, 21)) {
        for (double beta : linspace(-kPi / 4.0, kPi / 4.0, 21)) {
            const double f = qaoa_expectation(s0, t, {{gamma}, {beta}});
            worst = std::max(worst, std::abs(f / mc - 0.75));
        }
    }
    return {"two edges |0>|1>|i>|-i>: F_1/MaxCut = 3/4", worst <= 1e-9,
            "max deviation " + fmt(worst)};
}

TheoryCheck check_antipodal_landscape(Rng &rng) {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const WeightedGraph g = random_weighted(5, rng);
        const CostTable t = build_cost_table(g);
        const MaxCutResult best = max_cut_brute_force(g);
        const StateVector s0 = StateVector::basis_state(5, best.assignment.to_index());
        const double m = best.value;
        const double w = total_weight(g);
        for (int k = 0; k < 20; ++k) {
            const double gamma = uniform(rng, -kPi, kPi);
            const double beta = uniform(rng, -kPi / 4.0, kPi / 4.0);
            const double closed = 0.25 * ((2.0 * m - w) * std::cos(4.0 * beta) + 2.0 * m + w);
            worst = std::max(worst, std::abs(qaoa_expectation(s0, t, {{gamma}, {beta}}) - closed));
        }
    }
    return {"max-cut basis start: F_1 = ((2M-W)cos4b + 2M + W)/4", worst <= 1e-9,
            "max deviation " + fmt(worst)};
}

TheoryCheck check_half_weight(Rng &rng) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const WeightedGraph g = random_weighted(2 + i % 7, rng);
        const StateVector s0 = StateVector::uniform_superposition(g.num_vertices());
        worst = std::max(worst,
                         std::abs(expected_cut(s0, build_cost_table(g)) - total_weight(g) / 2.0));
    }
    return {"|+>^n at p=0: expected cut = W/2", worst <= 1e-12, "max deviation " + fmt(worst)};
}

TheoryCheck check_components(Rng &rng) {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const WeightedGraph a = random_weighted(3 + i % 3, rng);
        const WeightedGraph b = random_weighted(2 + i % 4, rng);
        std::vector<Edge> edges = a.edges();
        for (const auto &e : b.edges()) {
            edges.push_back({e.u + a.num_vertices(), e.v + a.num_vertices(), e.w});
        }
        const WeightedGraph g(a.num_vertices() + b.num_vertices(), std::move(edges));
        for (int p = 1; p <= 2; ++p) {
            const QaoaParams params = random_params(p, rng);
            const double whole = qaoa_expectation(
                StateVector::uniform_superposition(g.num_vertices()), build_cost_table(g), params);
            double parts = 0.0;
            for (const auto &comp : connected_components(g)) {
                parts += qaoa_expectation(
                    StateVector::uniform_superposition(comp.graph.num_vertices()),
                    build_cost_table(comp.graph), params);
            }
            worst = std::max(worst, std::abs(whole - parts));
        }
    }
    return {"component additivity of F_p", worst <= 1e-9, "max deviation " + fmt(worst)};
}

TheoryCheck check_p0_bound(int rank, const TheoryOptions &opts) {
    const P0BoundTable table = verify_p0_bound(rank, opts.p0_samples, opts.seed);
    bool ok = true;
    std::ostringstream detail;
    for (const auto &row : table.rows) {
        ok = ok && row.ratio >= table.bound - 3.0 * row.std_error;
    }
    const auto &last = table.rows.back();
    ok = ok && std::abs(last.ratio - table.bound) <= 0.01;
    detail << "ratio at alpha=pi " << last.ratio << " (bound " << table.bound << ")";
    return {"rank-" + std::to_string(rank) + " uniform rotation p=0 bound", ok, detail.str()};
}

TheoryCheck check_even_cycles(const TheoryOptions &opts) {
    std::ostringstream detail;
    bool ok = true;
    for (int n : {4, 6, 8}) {
        const WeightedGraph g = cycle_graph(n);
        const CostTable t = build_cost_table(g);
        int hits = 0;
        for (int b = 0; b < opts.cycle_bundles; ++b) {
            BmSolverConfig cfg;
            cfg.seed = derive_seed(opts.seed, {static_cast<std::uint64_t>(n),
                                               static_cast<std::uint64_t>(b)});
            const SphereEmbedding x = solve_bm(g, 3, cfg);
            Rng rng = make_rng(cfg.seed);
            const StateVector s0 =
                amplitudes(map_to_product_state(rotate_vertex_at_top(x, rng)));
            if (std::abs(objective_bm(g, x) - n) <= 1e-2 && std::abs(expected_cut(s0, t) - n) <= 1e-2) {
                ++hits;
            }
        }
        ok = ok && 10 * hits >= 9 * opts.cycle_bundles;
        detail << "C" << n << " " << hits << "/" << opts.cycle_bundles << " ";
    }
    return {"even cycles: rank-3 optimum and vertex-at-top p=0 cut = n", ok, detail.str()};
}

}  // namespace

std::vector<TheoryCheck> run_theory_battery(const TheoryOptions &opts) {
    Rng rng = make_rng(opts.seed);
    std::vector<TheoryCheck> out;
    out.push_back(check_plus_minus(rng));
    out.push_back(check_two_edges());
    out.push_back(check_antipodal_landscape(rng));
    out.push_back(check_half_weight(rng));
    out.push_back(check_components(rng));
    out.push_back(check_p0_bound(3, opts));
    out.push_back(check_p0_bound(2, opts));
    out.push_back(check_even_cycles(opts));
    return out;
}

}  // namespace wsqaoa
