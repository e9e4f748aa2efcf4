#include "alea/active.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace alea {

const char* policy_kind_name(PolicyKind k) {
    switch (k) {
        case PolicyKind::Aewaf: return "aewaf";
        case PolicyKind::Agf: return "agf";
        case PolicyKind::Rewaf: return "rewaf";
        case PolicyKind::Rgf: return "rgf";
    }
    throw std::logic_error("unknown policy kind");
}

ActiveState::ActiveState(double eta_, double delta_, std::size_t num_experts)
    : eta(eta_),
      delta(delta_),
      queried_losses(num_experts, 0.0),
      skipped_losses(num_experts, 0.0) {
    if (!(eta_ > 0.0) || !std::isfinite(eta_)) {
        throw std::invalid_argument("ActiveState: eta must be positive and finite");
    }
    if (num_experts == 0) {
        throw std::invalid_argument("ActiveState: need at least one expert");
    }
}

bool aewaf_condition(std::span<const double> preds, double delta) {
    const auto [lo, hi] = std::minmax_element(preds.begin(), preds.end());
    return *hi - *lo <= delta;
}

bool agf_condition(std::span<const double> preds, double p_bar, double delta) {
    for (double f : preds) {
        if (std::abs(f - p_bar) > delta) return false;
    }
    return true;
}

ActivePrediction active_predict(const ActiveState& state,
                                std::span<const double> preds, PolicyKind kind) {
    if (is_gf_policy(kind)) {
        const GfPrediction p = gf_predict(state.eta, state.queried_losses, preds);
        return {p.pre_clip, p.clipped};
    }
    const UnitPrediction p = ewaf_predict(state.eta, state.queried_losses, preds);
    return {p, p};
}

namespace detail {

bool should_query(const ActiveState& state, std::span<const double> preds,
                  double p_bar, const QueryPolicy& policy, Rng& rng) {
    switch (policy.kind) {
        case PolicyKind::Aewaf:
            return !aewaf_condition(preds, state.delta);
        case PolicyKind::Agf:
            return !agf_condition(preds, p_bar, state.delta);
        case PolicyKind::Rewaf:
        case PolicyKind::Rgf:
            return uniform_unit(rng) < policy.rho;
    }
    throw std::logic_error("unknown policy kind");
}

void record_query(ActiveState& state, std::span<const double> preds, BinaryLabel y) {
    for (std::size_t i = 0; i < preds.size(); ++i) {
        state.queried_losses[i] += abs_loss(preds[i], y);
    }
    ++state.query_count;
    state.decisions.push_back(1);
}

void record_skip(ActiveState& state) {
    state.decisions.push_back(0);
}

}  // namespace detail

RunTrace run_active(const ExpertPool& pool, std::span<const LabeledInstance> stream,
                    const QueryPolicy& policy, double eta, double delta) {
    const std::size_t n = pool.size();
    RunTrace trace;
    trace.num_experts = static_cast<std::int64_t>(n);
    trace.final_state = ActiveState(eta, delta, n);
    trace.expert_full_losses.assign(n, 0.0);
    trace.predictions.reserve(stream.size());
    trace.decisions.reserve(stream.size());
    trace.labels.reserve(stream.size());
    trace.expert_preds.reserve(stream.size() * n);

    ActiveState& state = trace.final_state;
    Rng rng(policy.rng_seed);
    std::vector<double> preds(n);

    const auto start = std::chrono::steady_clock::now();
    for (const auto& inst : stream) {
        pool_evaluate(pool, inst.x, preds);
        const StepOutcome step = active_step(state, preds, policy, rng,
                                             [&inst] { return inst.y; });
        // Evaluation-mode accounting; the learner itself never sees the
        // labels of skipped rounds.
        trace.forecaster_loss += abs_loss(step.prediction, inst.y);
        for (std::size_t i = 0; i < n; ++i) {
            const double li = abs_loss(preds[i], inst.y);
            trace.expert_full_losses[i] += li;
            if (!step.queried) state.skipped_losses[i] += li;
        }
        trace.predictions.push_back(step.prediction);
        trace.labels.push_back(inst.y);
        trace.expert_preds.insert(trace.expert_preds.end(), preds.begin(), preds.end());
    }
    trace.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return trace;
}

}  // namespace alea
