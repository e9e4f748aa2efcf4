#include "alea/dataio.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "alea/rng.hpp"

namespace alea {

namespace {

[[noreturn]] void parse_fail(const std::string& name, std::size_t lineno,
                             const std::string& msg) {
    throw std::runtime_error(name + ":" + std::to_string(lineno) + ": " + msg);
}

const char* skip_ws(const char* p, const char* end) {
    while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    return p;
}

void parse_line(const char* p, const char* end, const std::string& name,
                std::size_t lineno, SparseVector& x, double& label) {
    p = skip_ws(p, end);
    auto [lp, lec] = std::from_chars(p, end, label);
    if (lec != std::errc{}) parse_fail(name, lineno, "bad label token");
    p = lp;
    std::int32_t prev_index = 0;  // 1-based indices must exceed this
    while (true) {
        p = skip_ws(p, end);
        if (p == end) break;
        std::int32_t idx = 0;
        auto [ip, iec] = std::from_chars(p, end, idx);
        if (iec != std::errc{} || ip == end || *ip != ':') {
            parse_fail(name, lineno, "expected idx:val pair");
        }
        if (idx < 1) parse_fail(name, lineno, "feature index must be >= 1");
        if (idx <= prev_index) parse_fail(name, lineno, "feature indices not increasing");
        prev_index = idx;
        double val = 0.0;
        auto [vp, vec] = std::from_chars(ip + 1, end, val);
        if (vec != std::errc{}) parse_fail(name, lineno, "bad feature value");
        p = vp;
        if (val != 0.0) x.entries.push_back({idx - 1, val});
    }
}

std::string gz_read_all(const std::string& path) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (f == nullptr) {
        throw std::runtime_error("cannot open " + path);
    }
    gzbuffer(f, 1 << 16);
    std::string out;
    char buf[1 << 16];
    int n = 0;
    while ((n = gzread(f, buf, sizeof(buf))) > 0) {
        out.append(buf, static_cast<std::size_t>(n));
    }
    const bool failed = n < 0;
    gzclose(f);
    if (failed) throw std::runtime_error("decompression error reading " + path);
    return out;
}

}  // namespace

RawDataset parse_sparse_text(std::istream& in, const std::string& name) {
    RawDataset ds;
    ds.name = name;
    std::string line;
    std::size_t lineno = 0;
    std::int32_t max_index = -1;
    while (std::getline(in, line)) {
        ++lineno;
        const char* b = line.data();
        const char* e = b + line.size();
        if (skip_ws(b, e) == e) continue;  // blank line
        SparseVector x;
        double label = 0.0;
        parse_line(b, e, name, lineno, x, label);
        if (!x.entries.empty()) max_index = std::max(max_index, x.entries.back().index);
        ds.xs.push_back(std::move(x));
        ds.raw_labels.push_back(label);
    }
    ds.dim = max_index + 1;
    for (auto& x : ds.xs) x.dim = ds.dim;
    return ds;
}

RawDataset parse_sparse_file(const std::string& path) {
    std::string text = gz_read_all(path);
    std::istringstream in(std::move(text));
    std::string name = path;
    if (auto pos = name.find_last_of('/'); pos != std::string::npos) {
        name = name.substr(pos + 1);
    }
    return parse_sparse_text(in, name);
}

Dataset label_normalize(RawDataset raw) {
    std::set<double> distinct(raw.raw_labels.begin(), raw.raw_labels.end());
    if (distinct.size() != 2) {
        std::ostringstream msg;
        msg << raw.name << ": expected exactly 2 distinct labels, got {";
        bool first = true;
        for (double v : distinct) {
            msg << (first ? "" : ", ") << v;
            first = false;
        }
        msg << "}";
        throw std::runtime_error(msg.str());
    }
    Dataset ds;
    ds.meta.name = std::move(raw.name);
    ds.meta.dim = raw.dim;
    ds.meta.raw_zero = *distinct.begin();
    ds.meta.raw_one = *std::next(distinct.begin());
    ds.instances.reserve(raw.xs.size());
    for (std::size_t i = 0; i < raw.xs.size(); ++i) {
        const BinaryLabel y = raw.raw_labels[i] == ds.meta.raw_one
                                  ? BinaryLabel::One
                                  : BinaryLabel::Zero;
        ds.instances.push_back({std::move(raw.xs[i]), y});
    }
    return ds;
}

Dataset load_dataset(const std::string& path) {
    return label_normalize(parse_sparse_file(path));
}

void write_sparse_text(const Dataset& ds, std::ostream& out) {
    char buf[64];
    for (const auto& inst : ds.instances) {
        const double raw = inst.y == BinaryLabel::One ? ds.meta.raw_one
                                                      : ds.meta.raw_zero;
        std::snprintf(buf, sizeof(buf), "%.17g", raw);
        out << buf;
        for (const auto& e : inst.x.entries) {
            std::snprintf(buf, sizeof(buf), " %d:%.17g", e.index + 1, e.value);
            out << buf;
        }
        out << '\n';
    }
}

std::pair<Dataset, Dataset> split(const Dataset& ds, const SplitSpec& spec) {
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
        throw std::invalid_argument("split: train_fraction must be in (0,1)");
    }
    const std::size_t n = ds.size();
    if (n == 0) throw std::invalid_argument("split: empty dataset");
    const auto n_train =
        static_cast<std::size_t>(spec.train_fraction * static_cast<double>(n));
    if (n_train == 0 || n_train == n) {
        throw std::invalid_argument("split: one side of the split is empty");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(spec.seed);
    shuffle(order, rng);
    Dataset train, test;
    train.meta = ds.meta;
    test.meta = ds.meta;
    train.instances.reserve(n_train);
    test.instances.reserve(n - n_train);
    for (std::size_t i = 0; i < n; ++i) {
        (i < n_train ? train : test).instances.push_back(ds.instances[order[i]]);
    }
    return {std::move(train), std::move(test)};
}

Dataset permuted(const Dataset& ds, std::uint64_t seed) {
    Dataset out;
    out.meta = ds.meta;
    out.instances = ds.instances;
    Rng rng(seed);
    shuffle(out.instances, rng);
    return out;
}

std::vector<Dataset> permutations(const Dataset& ds, int count, std::uint64_t base_seed) {
    std::vector<Dataset> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        out.push_back(permuted(ds, base_seed + static_cast<std::uint64_t>(k)));
    }
    return out;
}

}  // namespace alea
