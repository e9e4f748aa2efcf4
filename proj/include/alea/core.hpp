#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace alea {

/// One nonzero coordinate of a sparse instance.
struct SparseEntry {
    std::int32_t index;  // 0-based
    double value;
};

/// Sparse feature vector. Entries are sorted by strictly increasing index
/// and never store zeros; `dim` is the dataset-wide dimensionality
/// (max index + 1), so dot products against dense weight vectors of
/// length >= dim are always in range.
struct SparseVector {
    std::vector<SparseEntry> entries;
    std::int32_t dim = 0;
};

enum class BinaryLabel : std::uint8_t { Zero = 0, One = 1 };

constexpr double label_value(BinaryLabel y) {
    return y == BinaryLabel::One ? 1.0 : 0.0;
}

/// {0,1} -> {-1,+1}, the margin form used by the expert trainers.
constexpr double signed_label(BinaryLabel y) {
    return y == BinaryLabel::One ? 1.0 : -1.0;
}

/// A prediction in [0,1]. Plain double; the invariant is maintained by
/// construction (clip_unit, convex combinations of unit values).
using UnitPrediction = double;

/// pi_[0,1](v) = max(0, min(1, v)).
inline UnitPrediction clip_unit(double v) {
    if (!std::isfinite(v)) {
        throw std::domain_error("clip_unit: non-finite input");
    }
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

/// Absolute loss |p - y|; equals 1-p for y=1 and p for y=0.
inline double abs_loss(UnitPrediction p, BinaryLabel y) {
    return y == BinaryLabel::One ? 1.0 - p : p;
}

/// Dot product of a sparse instance with dense weights.
inline double sparse_dot(const SparseVector& x, std::span<const double> weights) {
    if (!x.entries.empty() &&
        static_cast<std::size_t>(x.entries.back().index) >= weights.size()) {
        throw std::out_of_range("sparse_dot: index exceeds weight dimension");
    }
    double acc = 0.0;
    for (const auto& e : x.entries) acc += e.value * weights[e.index];
    return acc;
}

/// Squared Euclidean norm of a sparse instance.
inline double sparse_norm_sq(const SparseVector& x) {
    double acc = 0.0;
    for (const auto& e : x.entries) acc += e.value * e.value;
    return acc;
}

struct LabeledInstance {
    SparseVector x;
    BinaryLabel y;
};

}  // namespace alea
