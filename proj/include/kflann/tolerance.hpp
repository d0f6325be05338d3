#pragma once

#include <string>
#include <vector>

#include "kflann/preprocess.hpp"

namespace kflann {

enum class ToleranceMethod { stddev, maxmin, manual };

std::string to_string(ToleranceMethod m);
ToleranceMethod tolerance_method_from_string(const std::string& s);

/// Per-feature maximum allowed deviation between a pattern and a node's
/// weights for that feature to count as matched.
struct ToleranceVector {
    std::vector<double> delta;
    ToleranceMethod method = ToleranceMethod::manual;

    std::size_t size() const { return delta.size(); }
};

/// delta_d = population standard deviation of feature d.
ToleranceVector tolerance_stddev(const FeatureStats& stats);

/// delta_i = (max_gap_i + min_gap_i) / 2, the midpoint the tuning loop also
/// starts from.
ToleranceVector tolerance_maxmin(const FeatureStats& stats);

/// Domain-knowledge tolerances, taken verbatim. Entries must be finite and
/// non-negative.
ToleranceVector tolerance_manual(std::vector<double> values);

}  // namespace kflann
