#include "alea/forecasters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alea {

ForecasterState::ForecasterState(double eta_, std::size_t num_experts)
    : eta(eta_), cum_losses(num_experts, 0.0) {
    if (!(eta_ > 0.0) || !std::isfinite(eta_)) {
        throw std::invalid_argument("ForecasterState: eta must be positive and finite");
    }
    if (num_experts == 0) {
        throw std::invalid_argument("ForecasterState: need at least one expert");
    }
}

static void check_sizes(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": length mismatch");
    if (a == 0) throw std::invalid_argument(std::string(what) + ": empty input");
}

UnitPrediction weighted_average(std::span<const double> weights,
                                std::span<const double> preds) {
    check_sizes(weights.size(), preds.size(), "weighted_average");
    double wsum = 0.0, psum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0.0) {
            throw std::invalid_argument("weighted_average: negative weight");
        }
        wsum += weights[i];
        psum += weights[i] * preds[i];
    }
    if (wsum <= 0.0) {
        throw std::invalid_argument("weighted_average: all weights are zero");
    }
    return psum / wsum;
}

UnitPrediction ewaf_predict(double eta, std::span<const double> cum_losses,
                            std::span<const double> preds) {
    check_sizes(cum_losses.size(), preds.size(), "ewaf_predict");
    const double lmin = *std::min_element(cum_losses.begin(), cum_losses.end());
    double wsum = 0.0, psum = 0.0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        const double w = std::exp(-eta * (cum_losses[i] - lmin));
        wsum += w;
        psum += w * preds[i];
    }
    // wsum >= 1: the minimum-loss expert contributes exp(0).
    return psum / wsum;
}

UnitPrediction ewaf_predict(const ForecasterState& s, std::span<const double> preds) {
    return ewaf_predict(s.eta, s.cum_losses, preds);
}

static double shifted_lse(std::span<const double> exponents) {
    const double m = *std::max_element(exponents.begin(), exponents.end());
    double acc = 0.0;
    for (double e : exponents) acc += std::exp(e - m);
    return m + std::log(acc);
}

GfPrediction gf_predict(double eta, std::span<const double> cum_losses,
                        std::span<const double> preds) {
    check_sizes(cum_losses.size(), preds.size(), "gf_predict");
    const std::size_t n = preds.size();
    std::vector<double> num(n), den(n);
    for (std::size_t i = 0; i < n; ++i) {
        num[i] = -eta * (cum_losses[i] + (1.0 - preds[i]));  // loss under outcome 1
        den[i] = -eta * (cum_losses[i] + preds[i]);          // loss under outcome 0
    }
    const double pre = 0.5 + (shifted_lse(num) - shifted_lse(den)) / (2.0 * eta);
    return {pre, clip_unit(pre)};
}

GfPrediction gf_predict(const ForecasterState& s, std::span<const double> preds) {
    return gf_predict(s.eta, s.cum_losses, preds);
}

void update_losses(ForecasterState& s, std::span<const double> preds, BinaryLabel y) {
    check_sizes(s.cum_losses.size(), preds.size(), "update_losses");
    for (std::size_t i = 0; i < preds.size(); ++i) {
        s.cum_losses[i] += abs_loss(preds[i], y);
    }
    ++s.rounds_seen;
}

}  // namespace alea
