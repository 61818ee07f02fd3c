#include "wsqaoa/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wsqaoa {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) {
        throw std::invalid_argument("vertex count must be non-negative");
    }
    std::set<std::pair<int, int>> seen;
    for (auto &e : edges_) {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (e.u < 0 || e.v >= n_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loops are not allowed");
        }
        if (!std::isfinite(e.w)) {
            throw std::invalid_argument("edge weight must be finite");
        }
        if (!seen.emplace(e.u, e.v).second) {
            throw std::invalid_argument("duplicate edge");
        }
    }
}

CutAssignment CutAssignment::complement() const {
    CutAssignment out = *this;
    for (auto &b : out.bits) {
        b = b ? 0 : 1;
    }
    return out;
}

std::uint64_t CutAssignment::to_index() const {
    std::uint64_t index = 0;
    for (auto b : bits) {
        index = (index << 1) | (b ? 1U : 0U);
    }
    return index;
}

CutAssignment CutAssignment::from_index(std::uint64_t index, int n) {
    CutAssignment c;
    c.bits.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        c.bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1U);
    }
    return c;
}

CutAssignment CutAssignment::from_string(const std::string &s) {
    CutAssignment c;
    for (char ch : s) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("cut string must contain only 0 and 1");
        }
        c.bits.push_back(ch == '1' ? 1 : 0);
    }
    return c;
}

std::string CutAssignment::to_string() const {
    std::string s;
    for (auto b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

double cut_value(const WeightedGraph &g, const CutAssignment &c) {
    if (c.size() != static_cast<std::size_t>(g.num_vertices())) {
        throw std::invalid_argument("cut assignment length does not match vertex count");
    }
    double total = 0.0;
    for (const auto &e : g.edges()) {
        if (c.bits[static_cast<std::size_t>(e.u)] != c.bits[static_cast<std::size_t>(e.v)]) {
            total += e.w;
        }
    }
    return total;
}

double total_weight(const WeightedGraph &g) {
    double total = 0.0;
    for (const auto &e : g.edges()) {
        total += e.w;
    }
    return total;
}

double total_abs_weight(const WeightedGraph &g) {
    double total = 0.0;
    for (const auto &e : g.edges()) {
        total += std::abs(e.w);
    }
    return total;
}

MaxCutResult max_cut_brute_force(const WeightedGraph &g) {
    const int n = g.num_vertices();
    if (n > kBruteForceMaxVertices) {
        throw std::length_error("graph too large for brute-force max-cut");
    }
    MaxCutResult result;
    result.assignment.bits.assign(static_cast<std::size_t>(n), 0);
    if (n <= 1) {
        return result;
    }

    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(n));
    for (const auto &e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.w);
        adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.w);
    }

    // Gray-code walk over vertices 1..n-1; each step flips exactly one vertex.
    std::uint32_t side = 0;
    std::uint32_t best_side = 0;
    double cut = 0.0;
    double best = 0.0;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 1; k < steps; ++k) {
        const int v = 1 + std::countr_zero(k);
        const std::uint32_t vbit = (side >> v) & 1U;
        for (const auto &[u, w] : adj[static_cast<std::size_t>(v)]) {
            cut += (((side >> u) & 1U) == vbit) ? w : -w;
        }
        side ^= (std::uint32_t{1} << v);
        if (cut > best) {
            best = cut;
            best_side = side;
        }
    }
    // Recompute exactly; the running sum accumulates rounding for weighted graphs.
    for (int v = 0; v < n; ++v) {
        result.assignment.bits[static_cast<std::size_t>(v)] =
            static_cast<std::uint8_t>((best_side >> v) & 1U);
    }
    result.value = cut_value(g, result.assignment);
    return result;
}

bool is_connected(const WeightedGraph &g) {
    const int n = g.num_vertices();
    if (n <= 1) {
        return true;
    }
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = n;
    for (const auto &e : g.edges()) {
        const int a = find(e.u);
        const int b = find(e.v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components == 1;
}

GraphCollection erdos_renyi_connected(int n, double delta, int count, std::uint64_t seed,
                                      const ErdosRenyiOptions &opts) {
    if (n < 1) {
        throw std::invalid_argument("n must be positive");
    }
    if (!(delta > 0.0 && delta <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in (0, 1]");
    }
    if (count < 1) {
        throw std::invalid_argument("count must be positive");
    }
    Rng rng = make_rng(seed);
    std::bernoulli_distribution coin(delta);

    GraphCollection out;
    out.id = "G(" + std::to_string(n) + "," + std::to_string(delta) + ")";
    while (static_cast<int>(out.graphs.size()) < count) {
        bool accepted = false;
        for (std::uint64_t attempt = 0; attempt < opts.max_attempts_per_graph; ++attempt) {
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (coin(rng)) {
                        edges.push_back({u, v, 1.0});
                    }
                }
            }
            WeightedGraph g(n, std::move(edges));
            if (is_connected(g)) {
                out.graphs.push_back(std::move(g));
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            throw std::runtime_error("rejection sampling exceeded the attempt cap");
        }
    }
    return out;
}

std::vector<std::pair<int, int>> canonical_edge_list(const WeightedGraph &g) {
    const int n = g.num_vertices();
    if (n > 8) {
        throw std::length_error("canonical form by permutation is limited to n <= 8");
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> best;
    bool first = true;
    std::vector<std::pair<int, int>> relabeled;
    do {
        relabeled.clear();
        for (const auto &e : g.edges()) {
            int a = perm[static_cast<std::size_t>(e.u)];
            int b = perm[static_cast<std::size_t>(e.v)];
            if (a > b) {
                std::swap(a, b);
            }
            relabeled.emplace_back(a, b);
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (first || relabeled < best) {
            best = relabeled;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

GraphCollection enumerate_connected_5node() {
    constexpr int n = 5;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    std::set<std::vector<std::pair<int, int>>> classes;
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (mask & (1U << k)) {
                edges.push_back({pairs[k].first, pairs[k].second, 1.0});
            }
        }
        WeightedGraph g(n, std::move(edges));
        if (is_connected(g)) {
            classes.insert(canonical_edge_list(g));
        }
    }

    std::vector<std::vector<std::pair<int, int>>> ordered(classes.begin(), classes.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto &a, const auto &b) { return a.size() < b.size(); });

    GraphCollection out;
    out.id = "connected-5node";
    for (const auto &edge_list : ordered) {
        std::vector<Edge> edges;
        for (const auto &[u, v] : edge_list) {
            edges.push_back({u, v, 1.0});
        }
        out.graphs.emplace_back(n, std::move(edges));
    }
    return out;
}

std::vector<Component> connected_components(const WeightedGraph &g) {
    const int n = g.num_vertices();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto &e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        std::vector<int> stack{s};
        label[static_cast<std::size_t>(s)] = count;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : adj[static_cast<std::size_t>(x)]) {
                if (label[static_cast<std::size_t>(y)] < 0) {
                    label[static_cast<std::size_t>(y)] = count;
                    stack.push_back(y);
                }
            }
        }
        ++count;
    }

    std::vector<Component> comps(static_cast<std::size_t>(count));
    std::vector<int> local(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto &c = comps[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
        local[static_cast<std::size_t>(v)] = static_cast<int>(c.global_vertex.size());
        c.global_vertex.push_back(v);
    }
    std::vector<std::vector<Edge>> comp_edges(static_cast<std::size_t>(count));
    for (const auto &e : g.edges()) {
        comp_edges[static_cast<std::size_t>(label[static_cast<std::size_t>(e.u)])].push_back(
            {local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)], e.w});
    }
    for (std::size_t k = 0; k < comps.size(); ++k) {
        comps[k].graph = WeightedGraph(static_cast<int>(comps[k].global_vertex.size()),
                                       std::move(comp_edges[k]));
    }
    return comps;
}

CutAssignment restrict_to(const CutAssignment &c, const Component &comp) {
    CutAssignment out;
    out.bits.reserve(comp.global_vertex.size());
    for (int v : comp.global_vertex) {
        out.bits.push_back(c.bits.at(static_cast<std::size_t>(v)));
    }
    return out;
}

WeightedGraph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n, 1.0});
    }
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.push_back({u, v, 1.0});
        }
    }
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1, 1.0});
    }
    return WeightedGraph(n, std::move(edges));
}

}  // namespace wsqaoa
