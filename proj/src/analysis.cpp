#include "alea/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alea {

double regret(double forecaster_loss, std::span<const double> expert_losses) {
    if (expert_losses.empty()) {
        throw std::invalid_argument("regret: empty expert loss vector");
    }
    return forecaster_loss -
           *std::min_element(expert_losses.begin(), expert_losses.end());
}

double theorem1_bound(double num_experts, double rounds, double eta) {
    return std::log(num_experts) / eta + eta * rounds / 8.0;
}

double theorem4_bound(double num_experts, double rounds, double queries,
                      double eta, double delta) {
    return theorem1_bound(num_experts, rounds, eta) + delta * (rounds - queries);
}

EtaDelta corollary5_params(double num_experts, double rounds, double queries, double a) {
    const double denom = rounds * (1.0 + 8.0 * a) - 8.0 * a * queries;
    const double eta = std::sqrt(8.0 * std::log(num_experts) / denom);
    return {eta, a * eta};
}

double default_eta(double num_experts, double rounds) {
    if (!(num_experts > 1.0)) {
        throw std::invalid_argument(
            "default_eta: sqrt(8 ln N / T) is zero for a single expert; "
            "supply eta explicitly");
    }
    return std::sqrt(8.0 * std::log(num_experts) / rounds);
}

Summary summarize(std::span<const RunResult> results) {
    if (results.empty()) {
        throw std::invalid_argument("summarize: no runs");
    }
    Summary s;
    s.dataset = results.front().dataset;
    s.policy = results.front().policy;
    s.eta = results.front().eta;
    s.delta = results.front().delta;
    s.runs = static_cast<std::int64_t>(results.size());
    for (const auto& r : results) {
        if (r.policy != s.policy) {
            throw std::invalid_argument("summarize: mixed policies");
        }
        s.regret_rate_mean += r.regret_rate_pct;
        s.query_ratio_mean += r.query_ratio_pct;
        s.wall_time_mean += r.wall_time_s;
    }
    const double n = static_cast<double>(s.runs);
    s.regret_rate_mean /= n;
    s.query_ratio_mean /= n;
    s.wall_time_mean /= n;
    if (s.runs > 1) {
        double vr = 0.0, vq = 0.0;
        for (const auto& r : results) {
            vr += (r.regret_rate_pct - s.regret_rate_mean) *
                  (r.regret_rate_pct - s.regret_rate_mean);
            vq += (r.query_ratio_pct - s.query_ratio_mean) *
                  (r.query_ratio_pct - s.query_ratio_mean);
        }
        s.regret_rate_std = std::sqrt(vr / (n - 1.0));
        s.query_ratio_std = std::sqrt(vq / (n - 1.0));
    }
    return s;
}

}  // namespace alea
