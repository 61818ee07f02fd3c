#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsqaoa/bloch.hpp"
#include "wsqaoa/graph.hpp"
#include "wsqaoa/qaoa.hpp"

namespace wsqaoa {

struct TrainerConfig {
    // Adam
    double step_size = 0.001;
    double decay1 = 0.9;
    double decay2 = 0.999;
    double epsilon = 1e-7;
    // Forward-difference spacing for the gradient.
    double grad_spacing = 0.001;
    // Stop when F has not improved by more than
    // stall_improvement_factor * sum|w_e| for stall_epochs epochs.
    double stall_improvement_factor = 1e-6;
    int stall_epochs = 10;
    // Initial angles ~ U(-halfwidth, halfwidth). The beta half-width defaults
    // to init_halfwidth when unset.
    double init_halfwidth = 1e-4;
    std::optional<double> init_beta_halfwidth;
    int max_epochs = 5000;
    // Saddle retry for the |+>^n start.
    int min_epochs = 5;
    int saddle_retry_limit = 10;
    std::uint64_t seed = 0;
};

enum class StopReason { Stalled, MaxEpochs, SaddleAbort };

std::string to_string(StopReason r);
StopReason stop_reason_from_string(const std::string &s);

struct EpochRecord {
    std::vector<double> gamma;
    std::vector<double> beta;
    double f_value = 0.0;
};

/// epochs[0] holds the initial angles; epochs[t] the angles after t Adam steps.
struct TrainingTrace {
    std::vector<EpochRecord> epochs;
    StopReason stopped_reason = StopReason::Stalled;
    /// Number of discarded saddle attempts preceding this trace.
    int retries = 0;

    /// Last epoch index (== number of Adam steps taken).
    [[nodiscard]] int last_epoch() const noexcept { return static_cast<int>(epochs.size()) - 1; }
    /// Value at epoch t, holding the final value beyond the end.
    [[nodiscard]] double value_at(int t) const;
    [[nodiscard]] double final_value() const;
    /// Epochs before the terminating stall window.
    [[nodiscard]] int productive_epochs(int stall_epochs) const;
};

/// Forward differences of F, ordered (gamma_1..gamma_p, beta_1..beta_p).
std::vector<double> gradient_fd(const StateVector &s0, const CostTable &t,
                                const QaoaParams &params, double spacing);
std::vector<double> gradient_fd(const WeightedGraph &g, const StateVector &s0,
                                const QaoaParams &params, double spacing);

struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    int t = 0;

    static AdamState zeros(std::size_t size);
};

/// One bias-corrected Adam update of `params` (minimizing the function whose
/// gradient is `grad`).
void adam_step(std::vector<double> &params, AdamState &state, const std::vector<double> &grad,
               const TrainerConfig &cfg);

/// Adam on -F_p from near-zero angles until the stall rule fires or
/// max_epochs is reached.
TrainingTrace train(const WeightedGraph &g, const StateVector &s0, int p, const TrainerConfig &cfg);
TrainingTrace train(const WeightedGraph &g, const ProductState &s0, int p, const TrainerConfig &cfg);

/// Standard QAOA (|+>^n start). A run with fewer than cfg.min_epochs productive
/// epochs is discarded and retried with a fresh seed, up to
/// cfg.saddle_retry_limit retries; the final attempt is returned regardless and
/// marked SaddleAbort if it is still stuck.
TrainingTrace train_standard_with_retry(const WeightedGraph &g, int p, const TrainerConfig &cfg);

/// Maximum over runs of the value at epoch t (hold-last beyond a run's end).
double best_of_runs(const std::vector<TrainingTrace> &traces, int t);

}  // namespace wsqaoa
