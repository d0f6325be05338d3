#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kflann {

/// One observation: a numeric feature vector plus an optional class label.
struct Pattern {
    std::vector<double> features;
    std::optional<std::string> label;
};

/// Immutable, ordered collection of patterns with a fixed feature count.
/// Pattern order is significant: the training algorithm is order-sensitive,
/// so loaders preserve row order and transforms never reorder.
class Dataset {
public:
    Dataset(std::string name, std::size_t feature_count, std::vector<Pattern> patterns,
            std::optional<int> expected_clusters = std::nullopt);

    const std::string& name() const { return name_; }
    std::size_t feature_count() const { return feature_count_; }
    std::size_t size() const { return patterns_.size(); }
    const Pattern& pattern(std::size_t i) const { return patterns_[i]; }
    const std::vector<Pattern>& patterns() const { return patterns_; }
    bool labeled() const { return labeled_; }
    std::optional<int> expected_clusters() const { return expected_clusters_; }

private:
    std::string name_;
    std::size_t feature_count_;
    std::vector<Pattern> patterns_;
    bool labeled_;
    std::optional<int> expected_clusters_;
};

struct DatasetSummary {
    std::size_t pattern_count = 0;
    std::size_t feature_count = 0;
    bool labeled = false;
    std::map<std::string, std::size_t> class_histogram;  // empty when unlabeled
};

/// Load a comma-separated file. Cells must parse as finite numbers; a header
/// row is skipped when none of its feature cells parse. Errors name the
/// offending file line and column (1-based).
Dataset load_csv(const std::string& path,
                 std::optional<std::size_t> label_column = std::nullopt);

/// Convenience for the common case: label in the last column.
Dataset load_csv_labeled(const std::string& path);

/// Write features (and label, last) back out. Numeric formatting is the
/// shortest representation that round-trips bit-exactly.
void save_csv(const Dataset& ds, const std::string& path);

DatasetSummary describe(const Dataset& ds);

/// One manifest line: where a named benchmark dataset lives and what is
/// known about it.
struct ManifestEntry {
    std::string name;
    std::string path;  // resolved against the manifest's directory
    std::size_t feature_count = 0;
    int expected_clusters = 0;
    std::vector<std::size_t> class_counts;  // optional in the file
};

/// Parse a manifest of `name = path, n, expected_clusters[, c1/c2/...]`
/// lines. File existence is checked at load time, not here.
std::vector<ManifestEntry> load_manifest(const std::string& path);

/// Load the dataset a manifest entry points at (label in the last column)
/// and validate it against the entry's declared shape.
Dataset load_from_manifest(const ManifestEntry& entry);

}  // namespace kflann
