#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "alea/core.hpp"

namespace alea {

/// Full-information forecaster state: learning rate plus one cumulative
/// absolute-loss accumulator per expert.
struct ForecasterState {
    double eta = 0.0;
    std::vector<double> cum_losses;
    std::int64_t rounds_seen = 0;

    ForecasterState() = default;
    ForecasterState(double eta_, std::size_t num_experts);
};

/// Convex combination sum(w_i f_i) / sum(w_i). Throws if every weight is
/// zero or any weight is negative.
UnitPrediction weighted_average(std::span<const double> weights,
                                std::span<const double> preds);

/// Exponentially weighted average prediction from cumulative losses.
/// The smallest loss is factored out before exponentiation, so the result
/// stays finite for arbitrarily large loss totals.
UnitPrediction ewaf_predict(double eta, std::span<const double> cum_losses,
                            std::span<const double> preds);

UnitPrediction ewaf_predict(const ForecasterState& s, std::span<const double> preds);

/// Greedy-forecaster output. The confidence condition of the active
/// variant is stated on the pre-clip value, so both are exposed.
struct GfPrediction {
    double pre_clip;
    UnitPrediction clipped;
};

/// Greedy forecaster: 1/2 + (1/2eta) * [lse(-eta(L_i + l(f_i,1))) -
/// lse(-eta(L_i + l(f_i,0)))], clipped to [0,1]. Both log-sum-exp terms are
/// evaluated with their maximum exponent factored out.
GfPrediction gf_predict(double eta, std::span<const double> cum_losses,
                        std::span<const double> preds);

GfPrediction gf_predict(const ForecasterState& s, std::span<const double> preds);

/// Adds the round's absolute losses to every accumulator.
void update_losses(ForecasterState& s, std::span<const double> preds, BinaryLabel y);

}  // namespace alea
