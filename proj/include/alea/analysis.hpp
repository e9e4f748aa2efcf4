#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace alea {

/// Everything one forecasting run produces, plus the provenance needed to
/// reproduce it. regret_rate_pct is 100 * (forecaster_loss -
/// best_expert_loss) / T.
struct RunResult {
    std::string dataset;
    std::string policy;
    std::uint64_t seed = 0;          // permutation seed
    std::int64_t T = 0;
    std::int64_t N = 0;
    double eta = 0.0;
    double delta = 0.0;              // active policies only
    double rho = 0.0;                // random policies only (Q/T of the paired run)
    std::int64_t Q = 0;
    double query_ratio_pct = 0.0;
    double forecaster_loss = 0.0;
    double best_expert_loss = 0.0;
    double regret_rate_pct = 0.0;
    double wall_time_s = 0.0;
};

/// Mean and sample standard deviation over repeated runs of one policy.
struct Summary {
    std::string dataset;
    std::string policy;
    std::int64_t runs = 0;
    double regret_rate_mean = 0.0;
    double regret_rate_std = 0.0;
    double query_ratio_mean = 0.0;
    double query_ratio_std = 0.0;
    double wall_time_mean = 0.0;
    double eta = 0.0;
    double delta = 0.0;
};

/// Overall regret: forecaster loss minus the best expert's loss. Negative
/// when the forecaster beats every expert.
double regret(double forecaster_loss, std::span<const double> expert_losses);

/// Full-information regret bound ln(N)/eta + eta*T/8.
double theorem1_bound(double num_experts, double rounds, double eta);

/// Active-forecaster regret bound ln(N)/eta + eta*T/8 + delta*(T - Q).
double theorem4_bound(double num_experts, double rounds, double queries,
                      double eta, double delta);

/// Parameter schedule eta = sqrt(8 ln N / (T(1+8a) - 8aQ)), delta = a*eta.
/// At these values theorem4_bound collapses to
/// 2 sqrt(ln N) sqrt(T(a + 1/8) - Qa).
struct EtaDelta {
    double eta;
    double delta;
};
EtaDelta corollary5_params(double num_experts, double rounds, double queries, double a);

/// Default learning rate sqrt(8 ln N / T). Throws for N <= 1, where the
/// formula degenerates to eta = 0; callers must pick eta themselves then.
double default_eta(double num_experts, double rounds);

Summary summarize(std::span<const RunResult> results);

}  // namespace alea
