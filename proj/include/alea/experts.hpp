#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "alea/core.hpp"

namespace alea {

enum class ExpertKind { Perceptron, Romma, Alma2, PassiveAggressive, Arow };

constexpr std::array<ExpertKind, 5> kDefaultExpertKinds = {
    ExpertKind::Perceptron, ExpertKind::Romma, ExpertKind::Alma2,
    ExpertKind::PassiveAggressive, ExpertKind::Arow};

const char* expert_kind_name(ExpertKind k);
ExpertKind expert_kind_from_name(const std::string& name);

struct TrainParams {
    double pa_c = 5.0;        // PA-I aggressiveness cap
    double alma_alpha = 0.9;  // ALMA_2 margin parameter
    double arow_r = 1.0;      // AROW regularization
    // Above this dimensionality AROW keeps only the diagonal of the
    // covariance; the full d x d update is quadratic in d.
    std::int32_t arow_full_dim_limit = 512;
};

struct TrainStats {
    std::int64_t mistakes = 0;  // sign errors against the pre-update weights
    std::int64_t updates = 0;   // rounds that changed the weights
};

/// A frozen linear classifier u, exposed as the expert function
/// f(x) = clip_unit(u.x + 0.5).
struct LinearExpert {
    ExpertKind kind;
    std::vector<double> weights;
};

UnitPrediction expert_predict(const LinearExpert& e, const SparseVector& x);

/// One sequential pass over the stream in its given order. Deterministic:
/// the same ordered stream always yields bit-identical weights.
LinearExpert train_expert(ExpertKind kind, std::span<const LabeledInstance> stream,
                          std::int32_t dim, const TrainParams& params,
                          TrainStats* stats = nullptr);

struct ExpertPool {
    std::vector<LinearExpert> experts;

    std::size_t size() const { return experts.size(); }
    std::int32_t dim() const {
        return experts.empty() ? 0 : static_cast<std::int32_t>(experts[0].weights.size());
    }
};

/// f_i(x) for every expert, in pool order.
void pool_evaluate(const ExpertPool& pool, const SparseVector& x,
                   std::span<double> out);
std::vector<double> pool_evaluate(const ExpertPool& pool, const SparseVector& x);

/// Trains one expert per kind. Distinct experts share nothing and are
/// trained in parallel when OpenMP is enabled.
ExpertPool train_pool(std::span<const ExpertKind> kinds,
                      std::span<const LabeledInstance> stream, std::int32_t dim,
                      const TrainParams& params,
                      std::vector<TrainStats>* stats = nullptr);

/// Plain-text model file: `experts N dim` header, then per expert a kind
/// line and a weight line. Weights round-trip exactly.
void save_pool(const ExpertPool& pool, std::ostream& out);
ExpertPool load_pool(std::istream& in);
void save_pool_file(const ExpertPool& pool, const std::string& path);
ExpertPool load_pool_file(const std::string& path);

}  // namespace alea
