#include "wsqaoa/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wsqaoa/rng.hpp"

namespace wsqaoa {

std::string to_string(StopReason r) {
    switch (r) {
    case StopReason::Stalled:
        return "stalled";
    case StopReason::MaxEpochs:
        return "max-epochs";
    case StopReason::SaddleAbort:
        return "saddle-abort";
    }
    return "unknown";
}

StopReason stop_reason_from_string(const std::string &s) {
    if (s == "stalled") {
        return StopReason::Stalled;
    }
    if (s == "max-epochs") {
        return StopReason::MaxEpochs;
    }
    if (s == "saddle-abort") {
        return StopReason::SaddleAbort;
    }
    throw std::invalid_argument("unknown stop reason: " + s);
}

double TrainingTrace::value_at(int t) const {
    if (epochs.empty()) {
        throw std::logic_error("empty training trace");
    }
    const auto idx = static_cast<std::size_t>(std::clamp(t, 0, last_epoch()));
    return epochs[idx].f_value;
}

double TrainingTrace::final_value() const { return value_at(last_epoch()); }

int TrainingTrace::productive_epochs(int stall_epochs) const {
    const int window = stopped_reason == StopReason::MaxEpochs ? 0 : stall_epochs;
    return std::max(0, last_epoch() - window);
}

namespace {

std::vector<double> forward_differences(const StateVector &s0, const CostTable &t,
                                        const std::vector<double> &flat, double base,
                                        double spacing) {
    std::vector<double> grad(flat.size());
    std::vector<double> probe = flat;
    for (std::size_t j = 0; j < flat.size(); ++j) {
        probe[j] = flat[j] + spacing;
        grad[j] = (qaoa_expectation(s0, t, QaoaParams::unflatten(probe)) - base) / spacing;
        probe[j] = flat[j];
    }
    return grad;
}

}  // namespace

std::vector<double> gradient_fd(const StateVector &s0, const CostTable &t,
                                const QaoaParams &params, double spacing) {
    if (!(spacing > 0.0)) {
        throw std::invalid_argument("finite-difference spacing must be positive");
    }
    const double base = qaoa_expectation(s0, t, params);
    return forward_differences(s0, t, params.flatten(), base, spacing);
}

std::vector<double> gradient_fd(const WeightedGraph &g, const StateVector &s0,
                                const QaoaParams &params, double spacing) {
    return gradient_fd(s0, build_cost_table(g), params, spacing);
}

AdamState AdamState::zeros(std::size_t size) {
    return {std::vector<double>(size, 0.0), std::vector<double>(size, 0.0), 0};
}

void adam_step(std::vector<double> &params, AdamState &state, const std::vector<double> &grad,
               const TrainerConfig &cfg) {
    if (grad.size() != params.size() || state.m.size() != params.size() ||
        state.v.size() != params.size()) {
        throw std::invalid_argument("Adam buffers and gradient must match the parameter count");
    }
    ++state.t;
    const double bias1 = 1.0 - std::pow(cfg.decay1, state.t);
    const double bias2 = 1.0 - std::pow(cfg.decay2, state.t);
    for (std::size_t j = 0; j < params.size(); ++j) {
        state.m[j] = cfg.decay1 * state.m[j] + (1.0 - cfg.decay1) * grad[j];
        state.v[j] = cfg.decay2 * state.v[j] + (1.0 - cfg.decay2) * grad[j] * grad[j];
        const double m_hat = state.m[j] / bias1;
        const double v_hat = state.v[j] / bias2;
        params[j] -= cfg.step_size * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
    }
}

TrainingTrace train(const WeightedGraph &g, const StateVector &s0, int p, const TrainerConfig &cfg) {
    if (p < 1) {
        throw std::invalid_argument("training requires depth p >= 1");
    }
    if (cfg.stall_epochs < 1 || cfg.max_epochs < 0) {
        throw std::invalid_argument("invalid stopping configuration");
    }
    const CostTable table = build_cost_table(g, std::max(kDefaultMaxQubits, s0.num_qubits()));
    if (table.cut.size() != s0.dimension()) {
        throw std::invalid_argument("initial state does not match the graph");
    }

    Rng rng = make_rng(cfg.seed);
    const double gh = cfg.init_halfwidth;
    const double bh = cfg.init_beta_halfwidth.value_or(cfg.init_halfwidth);
    QaoaParams params = QaoaParams::zeros(p);
    for (int k = 0; k < p; ++k) {
        params.gamma[static_cast<std::size_t>(k)] = uniform(rng, -gh, gh);
        params.beta[static_cast<std::size_t>(k)] = uniform(rng, -bh, bh);
    }

    TrainingTrace trace;
    double f = qaoa_expectation(s0, table, params);
    trace.epochs.push_back({params.gamma, params.beta, f});

    const double tolerance = cfg.stall_improvement_factor * total_abs_weight(g);
    double reference = f;
    int since_improvement = 0;
    std::vector<double> flat = params.flatten();
    AdamState adam = AdamState::zeros(flat.size());

    for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
        std::vector<double> grad = forward_differences(s0, table, flat, f, cfg.grad_spacing);
        for (auto &gj : grad) {
            gj = -gj;
        }
        adam_step(flat, adam, grad, cfg);
        params = QaoaParams::unflatten(flat);
        f = qaoa_expectation(s0, table, params);
        trace.epochs.push_back({params.gamma, params.beta, f});

        if (f > reference + tolerance) {
            reference = f;
            since_improvement = 0;
        } else if (++since_improvement >= cfg.stall_epochs) {
            trace.stopped_reason = StopReason::Stalled;
            return trace;
        }
    }
    trace.stopped_reason = StopReason::MaxEpochs;
    return trace;
}

TrainingTrace train(const WeightedGraph &g, const ProductState &s0, int p, const TrainerConfig &cfg) {
    if (s0.size() != g.num_vertices()) {
        throw std::invalid_argument("product state size does not match vertex count");
    }
    return train(g, amplitudes(s0), p, cfg);
}

TrainingTrace train_standard_with_retry(const WeightedGraph &g, int p, const TrainerConfig &cfg) {
    const StateVector s0 = StateVector::uniform_superposition(g.num_vertices());
    TrainingTrace trace;
    for (int attempt = 0; attempt <= cfg.saddle_retry_limit; ++attempt) {
        TrainerConfig run_cfg = cfg;
        run_cfg.seed = attempt == 0 ? cfg.seed
                                    : derive_seed(cfg.seed, {static_cast<std::uint64_t>(attempt)});
        trace = train(g, s0, p, run_cfg);
        trace.retries = attempt;
        if (trace.productive_epochs(cfg.stall_epochs) >= cfg.min_epochs) {
            return trace;
        }
    }
    trace.stopped_reason = StopReason::SaddleAbort;
    return trace;
}

double best_of_runs(const std::vector<TrainingTrace> &traces, int t) {
    if (traces.empty()) {
        throw std::invalid_argument("best_of_runs needs at least one trace");
    }
    double best = traces.front().value_at(t);
    for (const auto &tr : traces) {
        best = std::max(best, tr.value_at(t));
    }
    return best;
}

}  // namespace wsqaoa
