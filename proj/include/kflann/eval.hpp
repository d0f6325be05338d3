#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kflann/dataset.hpp"
#include "kflann/kflann.hpp"

namespace kflann {

/// Clustering quality against ground-truth labels. Each cluster is mapped to
/// its members' majority class (many-to-one); a pattern counts as an error
/// when its label differs from its cluster's mapped label.
struct EvalReport {
    std::size_t cluster_count = 0;
    double error_rate_percent = 0.0;
    std::vector<std::string> class_labels;             // column order of `confusion`
    std::vector<std::string> mapping;                  // node index -> majority label
    std::vector<std::vector<std::size_t>> confusion;   // node x class counts
    std::size_t misclassified = 0;
    std::size_t total = 0;
};

EvalReport error_rate(const KflannModel& model, const Dataset& ds);

struct SweepPoint {
    double vigilance = 0.0;
    std::size_t cluster_count = 0;
    std::optional<double> error_rate_percent;  // absent for unlabeled data
};

struct SweepResult {
    std::vector<SweepPoint> points;
};

/// One full fit per grid value. The grid must be non-empty, strictly
/// increasing and within [0,1].
SweepResult vigilance_sweep(const Dataset& ds, const ToleranceVector& delta,
                            const std::vector<double>& rho_grid, int max_epochs = 100);

}  // namespace kflann
