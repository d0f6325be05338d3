#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kflann/dataset.hpp"

namespace kflann {

/// Per-feature statistics fitted from one dataset. `stddev` is the
/// population form (divide by n). `min_gap` is the difference between the
/// smallest and second-smallest *distinct* values (0 for a constant
/// feature); `max_gap` is max - min.
struct FeatureStats {
    std::vector<double> mean;
    std::vector<double> stddev;
    std::vector<double> min;
    std::vector<double> max;
    std::vector<double> min_gap;
    std::vector<double> max_gap;

    std::size_t feature_count() const { return mean.size(); }
};

enum class NormMethod { none, zscore, minmax };

std::string to_string(NormMethod m);
NormMethod norm_method_from_string(const std::string& s);

/// A recorded, reproducible normalization choice.
struct NormalizationSpec {
    NormMethod method = NormMethod::none;
    double new_min = 0.0;  // minmax only
    double new_max = 1.0;
    FeatureStats fitted;
};

FeatureStats fit_stats(const Dataset& ds);

/// x -> (x - mean) / stddev per feature; constant features map to 0.
Dataset zscore(const Dataset& ds, const FeatureStats& stats);

/// v -> (new_max - new_min) * (v - min) / (max - min) + new_min per feature;
/// constant features map to new_min.
Dataset minmax(const Dataset& ds, const FeatureStats& stats, double new_min,
               double new_max);

/// Fit stats on `ds` and apply `method`, returning the transformed dataset
/// and the populated spec.
std::pair<Dataset, NormalizationSpec> normalize(const Dataset& ds, NormMethod method,
                                                double new_min = 0.0, double new_max = 1.0);

}  // namespace kflann
