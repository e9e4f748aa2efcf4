#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "alea/core.hpp"

namespace alea {

/// Parse result before label normalization: raw label tokens are kept so
/// the {-1,+1} / {0,1} / {1,2} conventions of the source files can be
/// mapped in a second step.
struct RawDataset {
    std::string name;
    std::vector<SparseVector> xs;
    std::vector<double> raw_labels;
    std::int32_t dim = 0;
};

struct DatasetMeta {
    std::string name;
    std::int32_t dim = 0;
    double raw_zero = 0.0;  // source label mapped to 0
    double raw_one = 1.0;   // source label mapped to 1
};

struct Dataset {
    DatasetMeta meta;
    std::vector<LabeledInstance> instances;

    std::size_t size() const { return instances.size(); }
};

/// Parses `label idx:val ...` lines with 1-based, strictly increasing
/// indices. Indices are shifted to 0-based; dim is the maximum index seen
/// anywhere in the stream. Malformed input throws with a line number.
RawDataset parse_sparse_text(std::istream& in, const std::string& name);

/// File variant; transparently handles gzip-compressed files.
RawDataset parse_sparse_file(const std::string& path);

/// Maps the two observed raw label values to {0,1}, smaller -> 0.
/// Throws if the file does not contain exactly two distinct labels.
Dataset label_normalize(RawDataset raw);

/// parse + normalize.
Dataset load_dataset(const std::string& path);

/// Inverse of parsing: 1-based indices, raw labels restored from meta.
void write_sparse_text(const Dataset& ds, std::ostream& out);

struct SplitSpec {
    double train_fraction = 0.2;
    std::uint64_t seed = 0;
};

/// Seeded uniform shuffle followed by a cut at floor(fraction * n).
/// Throws if either side would be empty.
std::pair<Dataset, Dataset> split(const Dataset& ds, const SplitSpec& spec);

/// One seeded permutation of the instance order.
Dataset permuted(const Dataset& ds, std::uint64_t seed);

/// The k-th of `count` permutations uses seed base_seed + k.
std::vector<Dataset> permutations(const Dataset& ds, int count, std::uint64_t base_seed);

}  // namespace alea
