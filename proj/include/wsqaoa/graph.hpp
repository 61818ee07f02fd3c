#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wsqaoa/rng.hpp"

namespace wsqaoa {

struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/**
 * Simple undirected weighted graph on vertices 0..n-1.
 *
 * Edges are stored with u < v. Construction rejects self-loops, duplicate
 * vertex pairs, out-of-range endpoints and non-finite weights.
 */
class WeightedGraph {
  public:
    WeightedGraph() = default;
    explicit WeightedGraph(int n, std::vector<Edge> edges = {});

    [[nodiscard]] int num_vertices() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Edge> &edges() const noexcept { return edges_; }
    [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }

    friend bool operator==(const WeightedGraph &, const WeightedGraph &) = default;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// One side label per vertex; bit i = 1 puts vertex i in S.
struct CutAssignment {
    std::vector<std::uint8_t> bits;

    [[nodiscard]] std::size_t size() const noexcept { return bits.size(); }
    [[nodiscard]] CutAssignment complement() const;
    /// Basis-state index with vertex 0 as the most significant bit.
    [[nodiscard]] std::uint64_t to_index() const;
    static CutAssignment from_index(std::uint64_t index, int n);
    /// Parses a string such as "0101".
    static CutAssignment from_string(const std::string &s);
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const CutAssignment &, const CutAssignment &) = default;
};

struct GraphCollection {
    std::string id;
    std::vector<WeightedGraph> graphs;
};

struct MaxCutResult {
    double value = 0.0;
    CutAssignment assignment;
};

/// Largest graph accepted by max_cut_brute_force.
inline constexpr int kBruteForceMaxVertices = 30;

double cut_value(const WeightedGraph &g, const CutAssignment &c);
double total_weight(const WeightedGraph &g);
double total_abs_weight(const WeightedGraph &g);

/// Exhaustive search over 2^(n-1) assignments with vertex 0 pinned to side 0.
/// Throws std::length_error when n exceeds kBruteForceMaxVertices.
MaxCutResult max_cut_brute_force(const WeightedGraph &g);

bool is_connected(const WeightedGraph &g);

struct ErdosRenyiOptions {
    std::uint64_t max_attempts_per_graph = 1'000'000;
};

/// `count` connected G(n, delta) samples with unit weights; disconnected draws
/// are discarded. Throws std::runtime_error if one graph needs more than
/// `max_attempts_per_graph` draws.
GraphCollection erdos_renyi_connected(int n, double delta, int count, std::uint64_t seed,
                                      const ErdosRenyiOptions &opts = {});

/// Lexicographically smallest sorted edge list over all vertex relabelings.
/// Only for tiny graphs (n <= 8); weights are ignored.
std::vector<std::pair<int, int>> canonical_edge_list(const WeightedGraph &g);

/// All connected, pairwise non-isomorphic, unweighted graphs on five vertices.
GraphCollection enumerate_connected_5node();

struct Component {
    WeightedGraph graph;
    /// global_vertex[local] for local in 0..graph.num_vertices()-1, increasing.
    std::vector<int> global_vertex;
};

/// Components ordered by their smallest vertex; local labels keep the global
/// vertex order, so concatenating components reproduces the original order
/// whenever the graph's vertices are already grouped by component.
std::vector<Component> connected_components(const WeightedGraph &g);

CutAssignment restrict_to(const CutAssignment &c, const Component &comp);

// Reference graphs used throughout tests and tools.
WeightedGraph cycle_graph(int n);
WeightedGraph complete_graph(int n);
WeightedGraph path_graph(int n);

}  // namespace wsqaoa
