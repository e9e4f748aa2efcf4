#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "alea/core.hpp"
#include "alea/experts.hpp"
#include "alea/forecasters.hpp"
#include "alea/rng.hpp"

namespace alea {

enum class PolicyKind { Aewaf, Agf, Rewaf, Rgf };

const char* policy_kind_name(PolicyKind k);

constexpr bool is_random_policy(PolicyKind k) {
    return k == PolicyKind::Rewaf || k == PolicyKind::Rgf;
}

/// GF-family policies clip the combined prediction; EWAF-family ones are
/// convex combinations and never need the clip.
constexpr bool is_gf_policy(PolicyKind k) {
    return k == PolicyKind::Agf || k == PolicyKind::Rgf;
}

struct QueryPolicy {
    PolicyKind kind = PolicyKind::Aewaf;
    double rho = 0.0;             // Bernoulli query probability (random kinds)
    std::uint64_t rng_seed = 0;   // draw stream seed (random kinds)
};

/// Label-efficient forecaster state: per-expert losses accumulated only on
/// queried rounds, plus the query decision history.
struct ActiveState {
    double eta = 0.0;
    double delta = 0.0;
    std::vector<double> queried_losses;     // L-hat accumulators
    std::vector<double> skipped_losses;     // H-hat; evaluation mode only
    std::int64_t query_count = 0;           // Q
    std::vector<std::uint8_t> decisions;    // z history, 1 = queried

    ActiveState() = default;
    ActiveState(double eta_, double delta_, std::size_t num_experts);
};

/// Skip condition for the averaging family: the largest pairwise spread of
/// the expert predictions is at most delta.
bool aewaf_condition(std::span<const double> preds, double delta);

/// Skip condition for the greedy family: every expert prediction lies
/// within delta of the pre-clip combined value.
bool agf_condition(std::span<const double> preds, double p_bar, double delta);

struct ActivePrediction {
    double pre_clip;          // p-bar
    UnitPrediction clipped;   // p-hat
};

/// Combined prediction from queried-only losses; EWAF form for
/// Aewaf/Rewaf, GF form for Agf/Rgf.
ActivePrediction active_predict(const ActiveState& state,
                                std::span<const double> preds, PolicyKind kind);

struct StepOutcome {
    UnitPrediction prediction;  // p-hat
    double pre_clip;            // p-bar
    bool queried = false;
};

namespace detail {
bool should_query(const ActiveState& state, std::span<const double> preds,
                  double p_bar, const QueryPolicy& policy, Rng& rng);
void record_query(ActiveState& state, std::span<const double> preds, BinaryLabel y);
void record_skip(ActiveState& state);
}  // namespace detail

/// One round of Algorithm 1. The oracle is invoked at most once, and only
/// when the round's label is actually requested.
template <typename Oracle>
StepOutcome active_step(ActiveState& state, std::span<const double> preds,
                        const QueryPolicy& policy, Rng& rng, Oracle&& oracle) {
    const ActivePrediction p = active_predict(state, preds, policy.kind);
    StepOutcome out{p.clipped, p.pre_clip, false};
    if (detail::should_query(state, preds, p.pre_clip, policy, rng)) {
        detail::record_query(state, preds, oracle());
        out.queried = true;
    } else {
        detail::record_skip(state);
    }
    return out;
}

/// Per-round record of a whole run, enough to recompute every accumulator
/// and to drive shadow (full-information) forecasters in tests.
struct RunTrace {
    std::int64_t num_experts = 0;
    std::vector<double> predictions;        // p-hat per round
    std::vector<BinaryLabel> labels;
    std::vector<double> expert_preds;       // T x N, row-major
    double forecaster_loss = 0.0;           // against every label
    std::vector<double> expert_full_losses; // L_{i,T} over all T rounds
    ActiveState final_state;                // full-info runs: every round queried
    double wall_seconds = 0.0;

    std::int64_t rounds() const { return static_cast<std::int64_t>(predictions.size()); }
    const std::vector<std::uint8_t>& decisions() const { return final_state.decisions; }
    std::span<const double> round_preds(std::int64_t t) const {
        return {expert_preds.data() + t * num_experts,
                static_cast<std::size_t>(num_experts)};
    }
};

/// Algorithm 1 over a finite stream, in evaluation mode: the harness knows
/// every label, so the trace carries full-information expert losses and
/// the skipped-loss accumulators, while the forecaster itself only sees
/// labels it queried.
RunTrace run_active(const ExpertPool& pool, std::span<const LabeledInstance> stream,
                    const QueryPolicy& policy, double eta, double delta);

}  // namespace alea
