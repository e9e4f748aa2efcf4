#include "alea/experts.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace alea {

const char* expert_kind_name(ExpertKind k) {
    switch (k) {
        case ExpertKind::Perceptron: return "perceptron";
        case ExpertKind::Romma: return "romma";
        case ExpertKind::Alma2: return "alma2";
        case ExpertKind::PassiveAggressive: return "pa";
        case ExpertKind::Arow: return "arow";
    }
    throw std::logic_error("unknown expert kind");
}

ExpertKind expert_kind_from_name(const std::string& name) {
    for (ExpertKind k : kDefaultExpertKinds) {
        if (name == expert_kind_name(k)) return k;
    }
    throw std::invalid_argument("unknown expert kind: " + name);
}

UnitPrediction expert_predict(const LinearExpert& e, const SparseVector& x) {
    return clip_unit(sparse_dot(x, e.weights) + 0.5);
}

namespace {

void add_scaled(std::vector<double>& u, const SparseVector& x, double scale) {
    for (const auto& e : x.entries) u[e.index] += scale * e.value;
}

double norm_sq(const std::vector<double>& u) {
    double acc = 0.0;
    for (double v : u) acc += v * v;
    return acc;
}

struct Counters {
    TrainStats st;
    void observe(double margin) {
        if (margin <= 0.0) ++st.mistakes;
    }
};

LinearExpert train_perceptron(std::span<const LabeledInstance> stream,
                              std::int32_t dim, Counters& c) {
    std::vector<double> u(static_cast<std::size_t>(dim), 0.0);
    for (const auto& inst : stream) {
        const double yv = signed_label(inst.y);
        const double score = yv * sparse_dot(inst.x, u);
        c.observe(score);
        if (score <= 0.0) {
            add_scaled(u, inst.x, yv);
            ++c.st.updates;
        }
    }
    return {ExpertKind::Perceptron, std::move(u)};
}

LinearExpert train_pa1(std::span<const LabeledInstance> stream, std::int32_t dim,
                       double C, Counters& c) {
    std::vector<double> u(static_cast<std::size_t>(dim), 0.0);
    for (const auto& inst : stream) {
        const double yv = signed_label(inst.y);
        const double margin = yv * sparse_dot(inst.x, u);
        c.observe(margin);
        const double hinge = 1.0 - margin;
        if (hinge > 0.0) {
            const double xsq = sparse_norm_sq(inst.x);
            if (xsq == 0.0) continue;  // no direction to move in
            const double tau = std::min(C, hinge / xsq);
            add_scaled(u, inst.x, tau * yv);
            ++c.st.updates;
        }
    }
    return {ExpertKind::PassiveAggressive, std::move(u)};
}

// ALMA_2(alpha) with the canonical B = 1/alpha, C = sqrt(2). The weight
// vector stays inside the unit ball; instances are normalized before the
// margin test and the update.
LinearExpert train_alma2(std::span<const LabeledInstance> stream, std::int32_t dim,
                         double alpha, Counters& c) {
    const double B = 1.0 / alpha;
    const double C = std::sqrt(2.0);
    std::vector<double> u(static_cast<std::size_t>(dim), 0.0);
    std::int64_t k = 1;
    for (const auto& inst : stream) {
        const double xnorm = std::sqrt(sparse_norm_sq(inst.x));
        if (xnorm == 0.0) {
            c.observe(0.0);
            continue;
        }
        const double yv = signed_label(inst.y);
        const double margin = yv * sparse_dot(inst.x, u) / xnorm;
        c.observe(margin);
        if (margin <= (1.0 - alpha) * B / std::sqrt(static_cast<double>(k))) {
            const double eta_k = C / std::sqrt(static_cast<double>(k));
            add_scaled(u, inst.x, eta_k * yv / xnorm);
            const double norm = std::sqrt(norm_sq(u));
            if (norm > 1.0) {
                for (double& w : u) w /= norm;
            }
            ++k;
            ++c.st.updates;
        }
    }
    return {ExpertKind::Alma2, std::move(u)};
}

// Relaxed online maximum-margin updates: on a mistake the new weight
// vector is the smallest one satisfying u.u_old >= |u_old|^2 and
// y u.x >= 1. Degenerate cases (zero weights, x parallel to u) fall back
// to the minimum-norm vector classifying x at margin 1.
LinearExpert train_romma(std::span<const LabeledInstance> stream, std::int32_t dim,
                         Counters& c) {
    std::vector<double> u(static_cast<std::size_t>(dim), 0.0);
    double usq = 0.0;  // |u|^2, maintained incrementally-free: recompute on update
    for (const auto& inst : stream) {
        const double yv = signed_label(inst.y);
        const double f = sparse_dot(inst.x, u);
        c.observe(yv * f);
        if (yv * f > 0.0) continue;
        const double xsq = sparse_norm_sq(inst.x);
        if (xsq == 0.0) continue;
        const double denom = usq * xsq - f * f;
        if (denom <= 1e-12 * usq * xsq || usq == 0.0) {
            for (double& w : u) w = 0.0;
            add_scaled(u, inst.x, yv / xsq);
        } else {
            const double cc = (usq * xsq - yv * f) / denom;
            const double dd = usq * (yv - f) / denom;
            for (double& w : u) w *= cc;
            add_scaled(u, inst.x, dd);
        }
        usq = norm_sq(u);
        ++c.st.updates;
    }
    return {ExpertKind::Romma, std::move(u)};
}

LinearExpert train_arow_full(std::span<const LabeledInstance> stream,
                             std::int32_t dim, double r, Counters& c) {
    const auto d = static_cast<std::size_t>(dim);
    std::vector<double> mu(d, 0.0);
    std::vector<double> sigma(d * d, 0.0);  // row-major covariance, init I
    for (std::size_t i = 0; i < d; ++i) sigma[i * d + i] = 1.0;
    std::vector<double> sx(d);  // Sigma x
    for (const auto& inst : stream) {
        const double yv = signed_label(inst.y);
        const double margin = yv * sparse_dot(inst.x, mu);
        c.observe(margin);
        if (margin >= 1.0) continue;
        for (std::size_t i = 0; i < d; ++i) {
            double acc = 0.0;
            for (const auto& e : inst.x.entries) {
                acc += sigma[i * d + static_cast<std::size_t>(e.index)] * e.value;
            }
            sx[i] = acc;
        }
        double v = 0.0;  // x' Sigma x
        for (const auto& e : inst.x.entries) {
            v += e.value * sx[static_cast<std::size_t>(e.index)];
        }
        const double beta = 1.0 / (v + r);
        const double alpha = (1.0 - margin) * beta;
        for (std::size_t i = 0; i < d; ++i) mu[i] += alpha * yv * sx[i];
        for (std::size_t i = 0; i < d; ++i) {
            const double bi = beta * sx[i];
            for (std::size_t j = 0; j < d; ++j) sigma[i * d + j] -= bi * sx[j];
        }
        ++c.st.updates;
    }
    return {ExpertKind::Arow, std::move(mu)};
}

LinearExpert train_arow_diag(std::span<const LabeledInstance> stream,
                             std::int32_t dim, double r, Counters& c) {
    const auto d = static_cast<std::size_t>(dim);
    std::vector<double> mu(d, 0.0);
    std::vector<double> sigma(d, 1.0);  // diagonal covariance
    for (const auto& inst : stream) {
        const double yv = signed_label(inst.y);
        const double margin = yv * sparse_dot(inst.x, mu);
        c.observe(margin);
        if (margin >= 1.0) continue;
        double v = 0.0;
        for (const auto& e : inst.x.entries) {
            v += sigma[static_cast<std::size_t>(e.index)] * e.value * e.value;
        }
        const double beta = 1.0 / (v + r);
        const double alpha = (1.0 - margin) * beta;
        for (const auto& e : inst.x.entries) {
            const auto i = static_cast<std::size_t>(e.index);
            mu[i] += alpha * yv * sigma[i] * e.value;
            sigma[i] -= beta * sigma[i] * sigma[i] * e.value * e.value;
        }
        ++c.st.updates;
    }
    return {ExpertKind::Arow, std::move(mu)};
}

}  // namespace

LinearExpert train_expert(ExpertKind kind, std::span<const LabeledInstance> stream,
                          std::int32_t dim, const TrainParams& params,
                          TrainStats* stats) {
    if (stream.empty()) throw std::invalid_argument("train_expert: empty stream");
    if (dim <= 0) throw std::invalid_argument("train_expert: non-positive dim");
    Counters c;
    LinearExpert e = [&] {
        switch (kind) {
            case ExpertKind::Perceptron:
                return train_perceptron(stream, dim, c);
            case ExpertKind::PassiveAggressive:
                return train_pa1(stream, dim, params.pa_c, c);
            case ExpertKind::Alma2:
                return train_alma2(stream, dim, params.alma_alpha, c);
            case ExpertKind::Romma:
                return train_romma(stream, dim, c);
            case ExpertKind::Arow:
                return dim <= params.arow_full_dim_limit
                           ? train_arow_full(stream, dim, params.arow_r, c)
                           : train_arow_diag(stream, dim, params.arow_r, c);
        }
        throw std::logic_error("unknown expert kind");
    }();
    for (double w : e.weights) {
        if (!std::isfinite(w)) {
            throw std::runtime_error(std::string("train_expert: non-finite weight in ") +
                                     expert_kind_name(kind));
        }
    }
    if (stats != nullptr) *stats = c.st;
    return e;
}

void pool_evaluate(const ExpertPool& pool, const SparseVector& x,
                   std::span<double> out) {
    if (out.size() != pool.size()) {
        throw std::invalid_argument("pool_evaluate: output size mismatch");
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
        out[i] = expert_predict(pool.experts[i], x);
    }
}

std::vector<double> pool_evaluate(const ExpertPool& pool, const SparseVector& x) {
    std::vector<double> out(pool.size());
    pool_evaluate(pool, x, out);
    return out;
}

ExpertPool train_pool(std::span<const ExpertKind> kinds,
                      std::span<const LabeledInstance> stream, std::int32_t dim,
                      const TrainParams& params, std::vector<TrainStats>* stats) {
    if (kinds.empty()) throw std::invalid_argument("train_pool: no expert kinds");
    ExpertPool pool;
    pool.experts.resize(kinds.size());
    std::vector<TrainStats> st(kinds.size());
    const auto n = static_cast<std::int64_t>(kinds.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        pool.experts[k] = train_expert(kinds[k], stream, dim, params, &st[k]);
    }
    if (stats != nullptr) *stats = std::move(st);
    return pool;
}

void save_pool(const ExpertPool& pool, std::ostream& out) {
    out << "experts " << pool.size() << ' ' << pool.dim() << '\n';
    char buf[64];
    for (const auto& e : pool.experts) {
        out << expert_kind_name(e.kind) << '\n';
        for (std::size_t i = 0; i < e.weights.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g", e.weights[i]);
            out << (i == 0 ? "" : " ") << buf;
        }
        out << '\n';
    }
}

ExpertPool load_pool(std::istream& in) {
    std::string magic;
    std::size_t n = 0;
    std::int32_t dim = 0;
    if (!(in >> magic >> n >> dim) || magic != "experts" || n == 0 || dim <= 0) {
        throw std::runtime_error("model file: bad header");
    }
    ExpertPool pool;
    pool.experts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string kind_name;
        if (!(in >> kind_name)) throw std::runtime_error("model file: missing expert kind");
        LinearExpert e;
        e.kind = expert_kind_from_name(kind_name);
        e.weights.resize(static_cast<std::size_t>(dim));
        for (auto& w : e.weights) {
            if (!(in >> w)) throw std::runtime_error("model file: truncated weights");
        }
        pool.experts.push_back(std::move(e));
    }
    return pool;
}

void save_pool_file(const ExpertPool& pool, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    save_pool(pool, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

ExpertPool load_pool_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_pool(in);
}

}  // namespace alea
