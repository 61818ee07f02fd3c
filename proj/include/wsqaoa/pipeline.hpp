#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wsqaoa/analysis.hpp"
#include "wsqaoa/bloch.hpp"
#include "wsqaoa/bm_solver.hpp"
#include "wsqaoa/graph.hpp"
#include "wsqaoa/io.hpp"
#include "wsqaoa/rotation.hpp"
#include "wsqaoa/trainer.hpp"

namespace wsqaoa {

/// Standard QAOA (|+>^n start) or a warm start from a rank-k solution.
struct Variant {
    bool warm = false;
    int rank = 3;
    RotationKind rotation = RotationKind::VertexAtTop;

    static Variant standard() { return {}; }
    static Variant warm_start(int rank, RotationKind rotation) { return {true, rank, rotation}; }

    /// "standard" or "warm-r<k>-<rotation>", e.g. "warm-r3-vertex-at-top".
    [[nodiscard]] std::string label() const;
    /// Accepts label() output and the short form "warm:<k>:<rotation>".
    static Variant parse(const std::string &s);
    friend bool operator==(const Variant &a, const Variant &b) { return a.label() == b.label(); }
};

struct PipelineOptions {
    BmSolverConfig bm;
    TrainerConfig trainer;
};

struct PipelineProvenance {
    /// False when the initial state was injected directly.
    bool solved = false;
    double sdp_objective = 0.0;
    std::optional<double> kappa;
    SphereEmbedding embedding;
    SphereEmbedding rotated;
    std::optional<int> pivot;
    ProductState s0;
};

struct PipelineResult {
    TrainingTrace trace;
    PipelineProvenance provenance;
    TrainerConfig trainer;
};

/// Sub-seeds of one pipeline run.
struct PipelineSeeds {
    std::uint64_t solver;
    std::uint64_t rotation;
    std::uint64_t trainer;
    static PipelineSeeds from(std::uint64_t seed);
};

/// Solve BM-MC_k, rotate, map to a product state, train at depth p.
PipelineResult run_pipeline(const WeightedGraph &g, int rank, RotationKind rotation, int p,
                            std::uint64_t seed, const PipelineOptions &opts = {});

/// Trains from an injected product state, skipping solve and rotate.
PipelineResult run_pipeline_from_state(const WeightedGraph &g, const ProductState &s0, int p,
                                       std::uint64_t seed, const PipelineOptions &opts = {});

/// Standard QAOA with the saddle retry.
PipelineResult run_standard(const WeightedGraph &g, int p, std::uint64_t seed,
                            const PipelineOptions &opts = {});

PipelineResult run_variant(const WeightedGraph &g, const Variant &v, int p, std::uint64_t seed,
                           const PipelineOptions &opts = {});

Json provenance_to_json(const PipelineProvenance &prov);

enum class CollectionSource { Enumerate5Node, ErdosRenyi, Files };

struct ExperimentSpec {
    CollectionSource source = CollectionSource::Enumerate5Node;
    int er_n = 12;
    double er_delta = 0.4;
    int er_count = 20;
    std::vector<std::filesystem::path> files;

    std::vector<int> depths{1};
    std::vector<Variant> variants{Variant::standard()};
    int runs_per_config = 5;
    std::uint64_t seed = 0;
    /// Empty: keep results in memory only.
    std::filesystem::path output_dir;
    int threads = 1;
    PipelineOptions options;
    std::vector<double> percentiles{0.05, 0.5, 0.95};
};

void validate(const ExperimentSpec &spec);
GraphCollection load_collection(const ExperimentSpec &spec);

/// Seed of one experiment cell; independent of the order of graphs, variants
/// and depths in the spec.
std::uint64_t cell_seed(std::uint64_t master, std::size_t graph, const Variant &v, int depth,
                        int run);

struct CellResult {
    std::size_t graph = 0;
    Variant variant;
    int depth = 1;
    int run = 0;
    std::uint64_t seed = 0;
    std::optional<PipelineResult> result;
    std::string error;
};

struct AggregateResult {
    Variant variant;
    int depth = 1;
    /// Graph indices contributing to the curves.
    std::vector<std::size_t> graphs;
    /// alpha(G, t) rows for the graphs above.
    std::vector<std::vector<double>> ratios;
    std::vector<AggregateCurve> curves;
};

struct ExperimentResult {
    GraphCollection collection;
    std::vector<double> max_cuts;
    /// Ordered by graph, variant, depth, run as listed in the spec.
    std::vector<CellResult> cells;
    std::vector<AggregateResult> aggregates;
    Json manifest;

    [[nodiscard]] std::vector<GraphRuns> graph_runs(const Variant &v, int depth) const;
    [[nodiscard]] const AggregateResult &aggregate(const Variant &v, int depth) const;
    [[nodiscard]] std::size_t failures() const;
};

/// Full matrix graphs x variants x depths x runs on a bounded worker pool.
/// A failing cell records its error and the remaining cells still run.
ExperimentResult run_experiment(const ExperimentSpec &spec);

}  // namespace wsqaoa
