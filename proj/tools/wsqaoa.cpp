// Command-line driver: instance generation, solver, pipeline runs, landscapes,
// experiment matrices and the theory battery.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsqaoa/analysis.hpp"
#include "wsqaoa/bm_solver.hpp"
#include "wsqaoa/io.hpp"
#include "wsqaoa/pipeline.hpp"
#include "wsqaoa/theory.hpp"

namespace fs = std::filesystem;
using namespace wsqaoa;

namespace {

fs::path default_output(const std::string &fallback) {
    if (const char *env = std::getenv("WSQAOA_OUTPUT_DIR"); env && *env) {
        return env;
    }
    return fallback;
}

int default_threads() {
    if (const char *env = std::getenv("WSQAOA_THREADS"); env && *env) {
        return std::max(1, std::atoi(env));
    }
    return 1;
}

void add_trainer_flags(CLI::App *cmd, TrainerConfig &cfg) {
    cmd->add_option("--step-size", cfg.step_size, "Adam step size")->capture_default_str();
    cmd->add_option("--grad-spacing", cfg.grad_spacing, "forward-difference spacing")
        ->capture_default_str();
    cmd->add_option("--stall-epochs", cfg.stall_epochs, "stall window in epochs")
        ->capture_default_str();
    cmd->add_option("--stall-factor", cfg.stall_improvement_factor,
                    "stall threshold as a multiple of sum|w|")
        ->capture_default_str();
    cmd->add_option("--init-halfwidth", cfg.init_halfwidth, "initial angle half-width")
        ->capture_default_str();
    cmd->add_option("--max-epochs", cfg.max_epochs, "epoch cap")->capture_default_str();
    cmd->add_option("--min-epochs", cfg.min_epochs, "saddle retry threshold")
        ->capture_default_str();
    cmd->add_option("--saddle-retries", cfg.saddle_retry_limit, "saddle retry limit")
        ->capture_default_str();
}

void add_solver_flags(CLI::App *cmd, BmSolverConfig &cfg) {
    cmd->add_option("--bm-delta", cfg.delta, "angle perturbation half-width")->capture_default_str();
    cmd->add_option("--restarts", cfg.restarts, "solver restarts")->capture_default_str();
    cmd->add_option("--stall-window", cfg.stall_window, "solver stall window (evaluations)")
        ->capture_default_str();
}

WeightedGraph load_graph(const std::string &path) { return graph_from_json(read_json_file(path)); }

void write_collection(const GraphCollection &c, const fs::path &out) {
    Json files = Json::array();
    for (std::size_t i = 0; i < c.graphs.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "g%03zu.json", i);
        write_json_file(out / name, graph_to_json(c.graphs[i]));
        files.push_back({{"file", name},
                         {"n", c.graphs[i].num_vertices()},
                         {"edges", c.graphs[i].num_edges()},
                         {"max_cut", max_cut_brute_force(c.graphs[i]).value}});
    }
    write_json_file(out / "manifest.json", {{"id", c.id}, {"count", c.graphs.size()}, {"graphs", files}});
    std::cout << "wrote " << c.graphs.size() << " graphs to " << out.string() << "\n";
}

std::vector<int> parse_int_list(const std::string &s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(std::stoi(item));
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Warm-started QAOA for Max-Cut"};
    app.require_subcommand(1);

    // enumerate
    std::string enum_out = default_output("graphs-5node").string();
    auto *enumerate = app.add_subcommand("enumerate", "connected non-isomorphic 5-vertex graphs");
    enumerate->add_option("--out", enum_out, "output directory")->capture_default_str();

    // gen-er
    int er_n = 12;
    double er_delta = 0.4;
    int er_count = 20;
    std::uint64_t er_seed = 0;
    std::string er_out = default_output("graphs-er").string();
    auto *gen_er = app.add_subcommand("gen-er", "connected Erdos-Renyi samples");
    gen_er->add_option("--n", er_n, "vertices")->capture_default_str();
    gen_er->add_option("--delta", er_delta, "edge probability")->capture_default_str();
    gen_er->add_option("--count", er_count, "number of graphs")->capture_default_str();
    gen_er->add_option("--seed", er_seed, "seed")->capture_default_str();
    gen_er->add_option("--out", er_out, "output directory")->capture_default_str();

    // solve-sdp
    std::string sdp_graph;
    int sdp_rank = 3;
    BmSolverConfig sdp_cfg;
    std::string sdp_out;
    auto *solve = app.add_subcommand("solve-sdp", "rank-2/3 Burer-Monteiro relaxation");
    solve->add_option("--graph", sdp_graph, "graph JSON")->required();
    solve->add_option("--rank", sdp_rank, "2 or 3")->check(CLI::IsMember({2, 3}))->capture_default_str();
    solve->add_option("--seed", sdp_cfg.seed, "seed")->capture_default_str();
    solve->add_option("--out", sdp_out, "embedding JSON (stdout when omitted)");
    add_solver_flags(solve, sdp_cfg);

    // run
    std::string run_graph;
    std::string run_variant = "warm-r3-vertex-at-top";
    std::string run_init;
    int run_p = 1;
    std::uint64_t run_seed = 0;
    PipelineOptions run_opts;
    std::string run_out = default_output("run").string();
    auto *run = app.add_subcommand("run", "one solve-rotate-map-train pipeline run");
    run->add_option("--graph", run_graph, "graph JSON")->required();
    run->add_option("--variant", run_variant, "standard | warm-r<k>-<vertex-at-top|uniform>")
        ->capture_default_str();
    run->add_option("--init-state", run_init, "product state JSON; bypasses solve and rotate");
    run->add_option("--p", run_p, "depth")->capture_default_str();
    run->add_option("--seed", run_seed, "seed")->capture_default_str();
    run->add_option("--out", run_out, "output directory")->capture_default_str();
    add_trainer_flags(run, run_opts.trainer);
    add_solver_flags(run, run_opts.bm);

    // landscape
    std::string land_graph;
    std::string land_variant = "standard";
    std::string land_init;
    std::uint64_t land_seed = 0;
    LandscapeResolution land_res;
    int land_threads = default_threads();
    std::string land_out;
    auto *landscape = app.add_subcommand("landscape", "p=1 landscape over gamma x beta");
    landscape->add_option("--graph", land_graph, "graph JSON")->required();
    landscape->add_option("--variant", land_variant, "initial state source")->capture_default_str();
    landscape->add_option("--init-state", land_init, "product state JSON");
    landscape->add_option("--seed", land_seed, "seed for solve and rotate")->capture_default_str();
    landscape->add_option("--gamma-points", land_res.gamma_points, "gamma grid size")
        ->capture_default_str();
    landscape->add_option("--beta-points", land_res.beta_points, "beta grid size")
        ->capture_default_str();
    landscape->add_option("--threads", land_threads, "worker threads")->capture_default_str();
    landscape->add_option("--out", land_out, "CSV path (default <out>/landscapes/landscape.csv)");

    // experiment
    ExperimentSpec spec;
    std::string exp_source = "enumerate";
    std::vector<std::string> exp_files;
    std::string exp_depths = "1";
    std::vector<std::string> exp_variants{"standard", "warm-r3-vertex-at-top", "warm-r3-uniform"};
    std::string exp_out = default_output("experiment").string();
    spec.threads = default_threads();
    auto *experiment = app.add_subcommand("experiment", "graphs x variants x depths x runs");
    experiment->add_option("--source", exp_source, "enumerate | er | files")
        ->check(CLI::IsMember({"enumerate", "er", "files"}))
        ->capture_default_str();
    experiment->add_option("--n", spec.er_n, "Erdos-Renyi vertices")->capture_default_str();
    experiment->add_option("--delta", spec.er_delta, "Erdos-Renyi edge probability")
        ->capture_default_str();
    experiment->add_option("--count", spec.er_count, "Erdos-Renyi graphs")->capture_default_str();
    experiment->add_option("--graphs", exp_files, "graph JSON files (source=files)");
    experiment->add_option("--depths", exp_depths, "comma-separated depths")->capture_default_str();
    experiment->add_option("--variants", exp_variants, "variants")->capture_default_str();
    experiment->add_option("--runs", spec.runs_per_config, "runs per configuration")
        ->capture_default_str();
    experiment->add_option("--seed", spec.seed, "master seed")->capture_default_str();
    experiment->add_option("--threads", spec.threads, "worker threads")->capture_default_str();
    experiment->add_option("--out", exp_out, "output directory")->capture_default_str();
    add_trainer_flags(experiment, spec.options.trainer);
    add_solver_flags(experiment, spec.options.bm);

    // verify-theory
    TheoryOptions theory;
    auto *verify = app.add_subcommand("verify-theory", "closed-form and Monte Carlo checks");
    verify->add_option("--seed", theory.seed, "seed")->capture_default_str();
    verify->add_option("--samples", theory.p0_samples, "Monte Carlo samples per angle")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate) {
            write_collection(enumerate_connected_5node(), enum_out);
        } else if (*gen_er) {
            write_collection(erdos_renyi_connected(er_n, er_delta, er_count, er_seed), er_out);
        } else if (*solve) {
            const WeightedGraph g = load_graph(sdp_graph);
            const BmSolution sol = solve_bm_detailed(g, sdp_rank, sdp_cfg);
            Json j = embedding_to_json(sol.embedding);
            if (sdp_out.empty()) {
                std::cout << j.dump(2) << "\n";
            } else {
                write_json_file(sdp_out, j);
            }
            std::cerr << "objective " << sol.objective;
            if (g.num_vertices() <= kBruteForceMaxVertices) {
                const double mc = max_cut_brute_force(g).value;
                std::cerr << " max-cut " << mc;
                if (mc > 0.0) {
                    std::cerr << " kappa " << sol.objective / mc;
                }
            }
            std::cerr << "\n";
        } else if (*run) {
            const WeightedGraph g = load_graph(run_graph);
            PipelineResult res;
            if (!run_init.empty()) {
                res = run_pipeline_from_state(g, product_state_from_json(read_json_file(run_init)),
                                              run_p, run_seed, run_opts);
            } else {
                res = wsqaoa::run_variant(g, Variant::parse(run_variant), run_p, run_seed, run_opts);
            }
            const fs::path out = run_out;
            write_text_file(out / "trace.csv", trace_to_csv(res.trace));
            write_json_file(out / "trace.json", trace_sidecar(res.trace, res.trainer));
            write_json_file(out / "provenance.json", provenance_to_json(res.provenance));
            const double mc = max_cut_brute_force(g).value;
            std::cout << "epochs " << res.trace.last_epoch() << " stopped "
                      << to_string(res.trace.stopped_reason) << " F " << res.trace.final_value();
            if (mc > 0.0) {
                std::cout << " ratio " << res.trace.final_value() / mc;
            }
            std::cout << "\n";
        } else if (*landscape) {
            const WeightedGraph g = load_graph(land_graph);
            StateVector s0;
            if (!land_init.empty()) {
                s0 = amplitudes(product_state_from_json(read_json_file(land_init)));
            } else {
                const Variant v = Variant::parse(land_variant);
                if (v.warm) {
                    PipelineOptions opts;
                    opts.trainer.max_epochs = 0;
                    s0 = amplitudes(run_pipeline(g, v.rank, v.rotation, 1, land_seed, opts).provenance.s0);
                } else {
                    s0 = StateVector::uniform_superposition(g.num_vertices());
                }
            }
            const Landscape land = scan_landscape(g, s0, land_res, land_threads);
            const fs::path out = land_out.empty()
                                     ? default_output("landscape") / "landscapes" / "landscape.csv"
                                     : fs::path(land_out);
            write_text_file(out, landscape_to_csv(land));
            std::cout << "max F_1 " << land.max_value() << " written to " << out.string() << "\n";
        } else if (*experiment) {
            spec.source = exp_source == "enumerate" ? CollectionSource::Enumerate5Node
                          : exp_source == "er"      ? CollectionSource::ErdosRenyi
                                                    : CollectionSource::Files;
            spec.files.assign(exp_files.begin(), exp_files.end());
            spec.depths = parse_int_list(exp_depths);
            spec.variants.clear();
            for (const auto &v : exp_variants) {
                spec.variants.push_back(Variant::parse(v));
            }
            spec.output_dir = exp_out;
            const ExperimentResult res = run_experiment(spec);
            for (const auto &agg : res.aggregates) {
                std::cout << agg.variant.label() << " p=" << agg.depth;
                for (const auto &c : agg.curves) {
                    std::cout << "  r=" << c.r << ": " << c.values.back();
                }
                std::cout << "\n";
            }
            std::cout << res.cells.size() << " cells, " << res.failures() << " failed; manifest in "
                      << exp_out << "\n";
            return res.failures() == 0 ? 0 : 3;
        } else if (*verify) {
            bool all = true;
            for (const auto &c : run_theory_battery(theory)) {
                std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
                all = all && c.passed;
            }
            return all ? 0 : 1;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
