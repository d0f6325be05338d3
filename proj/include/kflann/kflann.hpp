#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kflann/dataset.hpp"
#include "kflann/tolerance.hpp"

namespace kflann {

struct KflannParams {
    double vigilance = 1.0;     // fraction of features that must match, in [0,1]
    ToleranceVector tolerance;  // per-feature deviation bound
    int max_epochs = 100;       // safety bound on the stability loop
};

/// A cluster prototype. Weights are a direct copy of the founding exemplar;
/// members are the original pattern indices assigned during the current
/// epoch.
struct OutputNode {
    std::vector<double> weights;
    std::vector<std::size_t> members;
};

struct KflannModel {
    std::vector<OutputNode> nodes;          // final epoch's nodes, in creation order
    std::vector<std::size_t> assignments;   // pattern index -> node index
    int epochs_run = 0;
    bool converged = false;
    std::vector<std::vector<std::vector<double>>> centroid_history;  // per epoch
    std::vector<std::size_t> presentation_order;  // order used in the final epoch

    std::size_t cluster_count() const { return nodes.size(); }
    /// Per-node mean of member feature vectors, final epoch.
    std::vector<std::vector<double>> centroids(const Dataset& ds) const;
};

/// Fraction of features i where delta_i^2 - (w_i - x_i)^2 >= 0. The boundary
/// counts as a match, so a node always scores 1 against its own founder.
double match_score(const OutputNode& node, const Pattern& pattern,
                   const ToleranceVector& delta);

/// Indices of nodes whose match score passes the vigilance threshold
/// (non-strict). May be empty.
std::vector<std::size_t> find_matches(const std::vector<OutputNode>& nodes,
                                      const Pattern& pattern,
                                      const KflannParams& params);

/// Among matched nodes, the one with the smallest squared Euclidean distance
/// to the pattern; ties break to the lowest node index.
std::size_t winner(const std::vector<std::size_t>& matched, const Pattern& pattern,
                   const std::vector<OutputNode>& nodes);

/// Train on the dataset. Each epoch presents every pattern in the working
/// order: a pattern joins the winning matched node or founds a new one. At
/// epoch end, per-node centroids are compared against the previous epoch's
/// (as multisets, 1e-12 per coordinate); if unchanged the model has
/// converged. Otherwise each node's centroid-nearest member is moved to the
/// front of the working order and the nodes are rebuilt from scratch.
/// Stops unconverged at max_epochs.
KflannModel fit(const Dataset& ds, const KflannParams& params);

/// Same loop, started from an explicit presentation order instead of the
/// dataset order. Useful for replaying or extending a previous run.
KflannModel fit(const Dataset& ds, const KflannParams& params,
                std::vector<std::size_t> initial_order);

enum class TuneDirection { none, down_toward_min, up_toward_max };

std::string to_string(TuneDirection d);

struct TuningStep {
    int iteration = 0;                 // 1-based
    std::vector<double> delta;         // tolerance used for this iteration
    std::size_t cluster_count = 0;     // clusters formed by one epoch, no reshuffle
    TuneDirection direction = TuneDirection::none;  // update taken afterwards
};

struct TuningTrace {
    std::vector<TuningStep> steps;
    bool reached_expected = false;
};

struct TuningResult {
    ToleranceVector delta;
    TuningTrace trace;
};

/// Adjust the tolerance until a single no-reshuffle epoch forms the expected
/// number of clusters. Starts from (max_gap + min_gap) / 2 per feature;
/// too few clusters move delta toward min_gap, too many toward max_gap, so
/// every iterate stays inside [min_gap, max_gap]. If the expected count is
/// never hit within max_iters, returns the closest attempt (ties favour the
/// latest) with reached_expected = false.
TuningResult tune_tolerance(const Dataset& ds, const KflannParams& params,
                            int expected_clusters, int max_iters = 50);

/// vigilance = f_match / f_total.
double vigilance_from_counts(int f_match, int f_total);

}  // namespace kflann
