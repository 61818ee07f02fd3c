#include "wsqaoa/pipeline.hpp"

#include <cstdio>
#include <stdexcept>

#include "wsqaoa/parallel.hpp"

namespace wsqaoa {

namespace {

// FNV-1a, used to key cell seeds on variant labels.
std::uint64_t hash_label(const std::string &s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string cell_stem(std::size_t graph, const Variant &v, int depth, int run) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "g%03zu_", graph);
    return std::string(buf) + v.label() + "_p" + std::to_string(depth) + "_run" +
           std::to_string(run);
}

std::string graph_file_name(std::size_t graph) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "graphs/g%03zu.json", graph);
    return buf;
}

std::string aggregate_stem(const Variant &v, int depth) {
    return v.label() + "_p" + std::to_string(depth);
}

TrainerConfig with_seed(TrainerConfig cfg, std::uint64_t seed) {
    cfg.seed = seed;
    return cfg;
}

}  // namespace

std::string Variant::label() const {
    if (!warm) {
        return "standard";
    }
    return "warm-r" + std::to_string(rank) + "-" + to_string(rotation);
}

Variant Variant::parse(const std::string &s) {
    if (s == "standard") {
        return standard();
    }
    std::string rest;
    if (s.rfind("warm-r", 0) == 0 && s.size() > 8 && s[7] == '-') {
        rest = s.substr(8);
    } else if (s.rfind("warm:", 0) == 0 && s.size() > 7 && s[6] == ':') {
        rest = s.substr(7);
    } else {
        throw std::invalid_argument("unknown variant: " + s);
    }
    const int rank = s[s[4] == ':' ? 5 : 6] - '0';
    require_supported_rank(rank);
    return warm_start(rank, rotation_kind_from_string(rest));
}

PipelineSeeds PipelineSeeds::from(std::uint64_t seed) {
    return {derive_seed(seed, {0}), derive_seed(seed, {1}), derive_seed(seed, {2})};
}

PipelineResult run_pipeline(const WeightedGraph &g, int rank, RotationKind rotation, int p,
                            std::uint64_t seed, const PipelineOptions &opts) {
    require_supported_rank(rank);
    const auto seeds = PipelineSeeds::from(seed);

    PipelineResult out;
    auto &prov = out.provenance;
    prov.solved = true;

    BmSolverConfig bm = opts.bm;
    bm.seed = seeds.solver;
    const BmSolution sol = solve_bm_detailed(g, rank, bm);
    prov.sdp_objective = sol.objective;
    prov.embedding = sol.embedding;
    if (g.num_vertices() <= kBruteForceMaxVertices) {
        const double mc = max_cut_brute_force(g).value;
        if (mc > 0.0) {
            prov.kappa = sol.objective / mc;
        }
    }

    Rng rng = make_rng(seeds.rotation);
    RotationRecord rec = rotate(sol.embedding, rotation, rng);
    prov.rotated = std::move(rec.embedding);
    prov.pivot = rec.pivot;
    prov.s0 = map_to_product_state(prov.rotated);

    out.trainer = with_seed(opts.trainer, seeds.trainer);
    out.trace = train(g, prov.s0, p, out.trainer);
    return out;
}

PipelineResult run_pipeline_from_state(const WeightedGraph &g, const ProductState &s0, int p,
                                       std::uint64_t seed, const PipelineOptions &opts) {
    PipelineResult out;
    out.provenance.s0 = s0;
    out.trainer = with_seed(opts.trainer, PipelineSeeds::from(seed).trainer);
    out.trace = train(g, s0, p, out.trainer);
    return out;
}

PipelineResult run_standard(const WeightedGraph &g, int p, std::uint64_t seed,
                            const PipelineOptions &opts) {
    PipelineResult out;
    out.provenance.s0.qubits.assign(static_cast<std::size_t>(g.num_vertices()), kPlus);
    out.trainer = with_seed(opts.trainer, PipelineSeeds::from(seed).trainer);
    out.trace = train_standard_with_retry(g, p, out.trainer);
    return out;
}

PipelineResult run_variant(const WeightedGraph &g, const Variant &v, int p, std::uint64_t seed,
                           const PipelineOptions &opts) {
    if (!v.warm) {
        return run_standard(g, p, seed, opts);
    }
    return run_pipeline(g, v.rank, v.rotation, p, seed, opts);
}

Json provenance_to_json(const PipelineProvenance &prov) {
    Json j = {{"solved", prov.solved}, {"s0", product_state_to_json(prov.s0)}};
    if (prov.solved) {
        j["sdp_objective"] = prov.sdp_objective;
        j["kappa"] = prov.kappa ? Json(*prov.kappa) : Json(nullptr);
        j["embedding"] = embedding_to_json(prov.embedding);
        j["rotated"] = embedding_to_json(prov.rotated);
        j["pivot"] = prov.pivot ? Json(*prov.pivot) : Json(nullptr);
    }
    return j;
}

void validate(const ExperimentSpec &spec) {
    if (spec.runs_per_config < 1) {
        throw std::invalid_argument("runs_per_config must be at least 1");
    }
    if (spec.depths.empty() || spec.variants.empty()) {
        throw std::invalid_argument("experiment needs at least one depth and one variant");
    }
    for (int p : spec.depths) {
        if (p < 1) {
            throw std::invalid_argument("depths must be >= 1");
        }
    }
    for (const auto &v : spec.variants) {
        if (v.warm) {
            require_supported_rank(v.rank);
        }
    }
    if (spec.source == CollectionSource::Files && spec.files.empty()) {
        throw std::invalid_argument("file collection needs at least one graph file");
    }
}

GraphCollection load_collection(const ExperimentSpec &spec) {
    switch (spec.source) {
    case CollectionSource::Enumerate5Node:
        return enumerate_connected_5node();
    case CollectionSource::ErdosRenyi:
        return erdos_renyi_connected(spec.er_n, spec.er_delta, spec.er_count,
                                     derive_seed(spec.seed, {hash_label("collection")}));
    case CollectionSource::Files: {
        GraphCollection c{"files", {}};
        for (const auto &f : spec.files) {
            c.graphs.push_back(graph_from_json(read_json_file(f)));
        }
        return c;
    }
    }
    throw std::logic_error("unhandled collection source");
}

std::uint64_t cell_seed(std::uint64_t master, std::size_t graph, const Variant &v, int depth,
                        int run) {
    return derive_seed(master, {graph, hash_label(v.label()), static_cast<std::uint64_t>(depth),
                                static_cast<std::uint64_t>(run)});
}

std::vector<GraphRuns> ExperimentResult::graph_runs(const Variant &v, int depth) const {
    std::vector<GraphRuns> out(collection.graphs.size());
    for (std::size_t gi = 0; gi < out.size(); ++gi) {
        out[gi].max_cut = max_cuts[gi];
    }
    for (const auto &c : cells) {
        if (c.result && c.variant == v && c.depth == depth) {
            out[c.graph].runs.push_back(c.result->trace);
        }
    }
    return out;
}

const AggregateResult &ExperimentResult::aggregate(const Variant &v, int depth) const {
    for (const auto &a : aggregates) {
        if (a.variant == v && a.depth == depth) {
            return a;
        }
    }
    throw std::out_of_range("no aggregate for " + v.label() + " at p=" + std::to_string(depth));
}

std::size_t ExperimentResult::failures() const {
    std::size_t n = 0;
    for (const auto &c : cells) {
        n += c.result ? 0 : 1;
    }
    return n;
}

ExperimentResult run_experiment(const ExperimentSpec &spec) {
    validate(spec);
    ExperimentResult res;
    res.collection = load_collection(spec);
    if (res.collection.graphs.empty()) {
        throw std::invalid_argument("graph collection is empty");
    }
    for (const auto &g : res.collection.graphs) {
        res.max_cuts.push_back(max_cut_brute_force(g).value);
    }

    for (std::size_t gi = 0; gi < res.collection.graphs.size(); ++gi) {
        for (const auto &v : spec.variants) {
            for (int p : spec.depths) {
                for (int r = 0; r < spec.runs_per_config; ++r) {
                    res.cells.push_back({gi, v, p, r, cell_seed(spec.seed, gi, v, p, r), {}, {}});
                }
            }
        }
    }

    const bool write = !spec.output_dir.empty();
    const auto &out_dir = spec.output_dir;
    parallel_for(res.cells.size(), spec.threads, [&](std::size_t i) {
        auto &cell = res.cells[i];
        try {
            cell.result = run_variant(res.collection.graphs[cell.graph], cell.variant, cell.depth,
                                      cell.seed, spec.options);
            if (write) {
                const std::string stem = cell_stem(cell.graph, cell.variant, cell.depth, cell.run);
                write_text_file(out_dir / "traces" / (stem + ".csv"),
                                trace_to_csv(cell.result->trace));
                write_json_file(out_dir / "traces" / (stem + ".json"),
                                trace_sidecar(cell.result->trace, cell.result->trainer));
                write_json_file(out_dir / "embeddings" / (stem + ".json"),
                                provenance_to_json(cell.result->provenance));
            }
        } catch (const std::exception &e) {
            cell.result.reset();
            cell.error = e.what();
        }
    });

    Json manifest;
    manifest["collection"] = {{"id", res.collection.id},
                              {"size", res.collection.graphs.size()}};
    manifest["seed"] = spec.seed;
    manifest["depths"] = spec.depths;
    manifest["runs_per_config"] = spec.runs_per_config;
    manifest["percentiles"] = spec.percentiles;
    manifest["trainer"] = trainer_config_to_json(spec.options.trainer);
    manifest["solver"] = {{"delta", spec.options.bm.delta},
                          {"stall_tolerance_factor", spec.options.bm.stall_tolerance_factor},
                          {"stall_window", spec.options.bm.stall_window},
                          {"restarts", spec.options.bm.restarts}};
    Json variants = Json::array();
    for (const auto &v : spec.variants) {
        variants.push_back(v.label());
    }
    manifest["variants"] = variants;

    Json graphs = Json::array();
    for (std::size_t gi = 0; gi < res.collection.graphs.size(); ++gi) {
        Json entry = {{"index", gi}, {"max_cut", res.max_cuts[gi]}};
        if (write) {
            write_json_file(out_dir / graph_file_name(gi), graph_to_json(res.collection.graphs[gi]));
            entry["file"] = graph_file_name(gi);
        } else {
            entry["graph"] = graph_to_json(res.collection.graphs[gi]);
        }
        graphs.push_back(entry);
    }
    manifest["graphs"] = graphs;

    Json cells = Json::array();
    for (const auto &c : res.cells) {
        Json entry = {{"graph", c.graph},   {"variant", c.variant.label()}, {"depth", c.depth},
                      {"run", c.run},       {"seed", c.seed}};
        if (c.result) {
            const std::string stem = cell_stem(c.graph, c.variant, c.depth, c.run);
            entry["status"] = "ok";
            entry["stopped_reason"] = to_string(c.result->trace.stopped_reason);
            entry["epochs"] = c.result->trace.last_epoch();
            entry["retries"] = c.result->trace.retries;
            entry["final_value"] = c.result->trace.final_value();
            if (write) {
                entry["trace"] = "traces/" + stem + ".csv";
                entry["sidecar"] = "traces/" + stem + ".json";
                entry["embedding"] = "embeddings/" + stem + ".json";
            }
        } else {
            entry["status"] = "error";
            entry["error"] = c.error;
        }
        cells.push_back(entry);
    }
    manifest["cells"] = cells;

    Json aggregates = Json::array();
    for (const auto &v : spec.variants) {
        for (int p : spec.depths) {
            AggregateResult agg{v, p, {}, {}, {}};
            std::vector<GraphRuns> usable;
            Json skipped = Json::array();
            auto runs = res.graph_runs(v, p);
            for (std::size_t gi = 0; gi < runs.size(); ++gi) {
                if (runs[gi].runs.empty() || !(runs[gi].max_cut > 0.0)) {
                    skipped.push_back(gi);
                    continue;
                }
                agg.graphs.push_back(gi);
                usable.push_back(std::move(runs[gi]));
            }
            Json entry = {{"variant", v.label()}, {"depth", p}, {"skipped_graphs", skipped}};
            if (!usable.empty()) {
                agg.ratios = approximation_ratios(usable);
                agg.curves = aggregate_curves(usable, spec.percentiles);
                if (write) {
                    const std::string stem = aggregate_stem(v, p);
                    write_text_file(out_dir / "aggregates" / (stem + ".csv"),
                                    aggregates_to_csv(agg.curves));
                    std::string best = "epoch";
                    for (std::size_t gi : agg.graphs) {
                        char buf[16];
                        std::snprintf(buf, sizeof buf, ",g%03zu", gi);
                        best += buf;
                    }
                    best += '\n';
                    for (std::size_t t = 0; t < agg.ratios.front().size(); ++t) {
                        best += std::to_string(t);
                        for (const auto &row : agg.ratios) {
                            best += ',' + format_double(row[t]);
                        }
                        best += '\n';
                    }
                    write_text_file(out_dir / "aggregates" / (stem + "_best.csv"), best);
                    entry["curves"] = "aggregates/" + stem + ".csv";
                    entry["best_of_runs"] = "aggregates/" + stem + "_best.csv";
                }
                Json finals = Json::object();
                for (const auto &c : agg.curves) {
                    finals["r_" + format_double(c.r)] = c.values.back();
                }
                entry["final"] = finals;
            }
            aggregates.push_back(entry);
            res.aggregates.push_back(std::move(agg));
        }
    }
    manifest["aggregates"] = aggregates;
    manifest["failures"] = res.failures();
    res.manifest = std::move(manifest);
    if (write) {
        write_json_file(out_dir / "manifest.json", res.manifest);
    }
    return res;
}

}  // namespace wsqaoa
