#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsqaoa/analysis.hpp"
#include "wsqaoa/bloch.hpp"
#include "wsqaoa/embedding.hpp"
#include "wsqaoa/graph.hpp"
#include "wsqaoa/trainer.hpp"

namespace wsqaoa {

using Json = nlohmann::json;

// Graphs: {"n": int, "edges": [[u, v, w], ...]}; [u, v] means weight 1.
Json graph_to_json(const WeightedGraph &g);
WeightedGraph graph_from_json(const Json &j);

// Embeddings: {"rank": k, "angles": [[theta, phi], ...]}; rank 2 rows are [theta].
Json embedding_to_json(const SphereEmbedding &x);
SphereEmbedding embedding_from_json(const Json &j);

// Product states: {"qubits": [[theta, phi], ...]}.
Json product_state_to_json(const ProductState &s);
ProductState product_state_from_json(const Json &j);

Json trainer_config_to_json(const TrainerConfig &cfg);

/// epoch, gamma_1..gamma_p, beta_1..beta_p, f_value.
std::string trace_to_csv(const TrainingTrace &trace);
TrainingTrace trace_from_csv(const std::string &csv);
/// Sidecar with the trainer configuration and stopping reason.
Json trace_sidecar(const TrainingTrace &trace, const TrainerConfig &cfg);

/// First row: "beta\\gamma" then gamma values; each later row: beta then F_1.
std::string landscape_to_csv(const Landscape &land);
/// epoch, then one column per percentile.
std::string aggregates_to_csv(const std::vector<AggregateCurve> &curves);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double x);

std::string read_text_file(const std::filesystem::path &path);
/// Creates parent directories as needed.
void write_text_file(const std::filesystem::path &path, const std::string &text);
Json read_json_file(const std::filesystem::path &path);
void write_json_file(const std::filesystem::path &path, const Json &j);

}  // namespace wsqaoa
