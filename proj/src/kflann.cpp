#include "kflann/kflann.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace kflann {
namespace {

constexpr double kCentroidTol = 1e-12;

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return sum;
}

void validate(const Dataset& ds, const KflannParams& params) {
    if (!(params.vigilance >= 0.0 && params.vigilance <= 1.0))
        throw std::invalid_argument("vigilance must lie in [0,1]");
    if (params.tolerance.size() != ds.feature_count())
        throw std::invalid_argument("tolerance has " + std::to_string(params.tolerance.size()) +
                                    " entries, dataset has " +
                                    std::to_string(ds.feature_count()) + " features");
    for (double d : params.tolerance.delta)
        if (!std::isfinite(d) || d < 0.0)
            throw std::invalid_argument("tolerance entries must be finite and >= 0");
    if (params.max_epochs < 1) throw std::invalid_argument("max_epochs must be >= 1");
}

struct EpochResult {
    std::vector<OutputNode> nodes;
    std::vector<std::size_t> assignments;
};

// One presentation of every pattern: join the winning matched node or found
// a new one. Nodes created earlier in the epoch are match candidates for
// later patterns.
EpochResult run_epoch(const Dataset& ds, const std::vector<std::size_t>& order,
                      const KflannParams& params) {
    EpochResult r;
    r.assignments.assign(ds.size(), 0);
    for (std::size_t idx : order) {
        const Pattern& p = ds.pattern(idx);
        std::size_t node_index;
        if (r.nodes.empty()) {
            node_index = 0;
            r.nodes.push_back({p.features, {}});
        } else {
            const std::vector<std::size_t> matched = find_matches(r.nodes, p, params);
            if (matched.empty()) {
                node_index = r.nodes.size();
                r.nodes.push_back({p.features, {}});
            } else {
                node_index = winner(matched, p, r.nodes);
            }
        }
        r.nodes[node_index].members.push_back(idx);
        r.assignments[idx] = node_index;
    }
    return r;
}

std::vector<std::vector<double>> compute_centroids(const Dataset& ds,
                                                   const std::vector<OutputNode>& nodes) {
    std::vector<std::vector<double>> centroids;
    centroids.reserve(nodes.size());
    for (const OutputNode& node : nodes) {
        std::vector<double> c(ds.feature_count(), 0.0);
        for (std::size_t idx : node.members)
            for (std::size_t d = 0; d < c.size(); ++d) c[d] += ds.pattern(idx).features[d];
        for (double& v : c) v /= static_cast<double>(node.members.size());
        centroids.push_back(std::move(c));
    }
    return centroids;
}

bool coordwise_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

// Node identity is not stable across epochs, so centroid stability is an
// unordered comparison.
bool centroids_stable(const std::vector<std::vector<double>>& prev,
                      const std::vector<std::vector<double>>& curr) {
    if (prev.size() != curr.size()) return false;
    std::vector<bool> used(prev.size(), false);
    for (const auto& c : curr) {
        bool found = false;
        for (std::size_t j = 0; j < prev.size(); ++j) {
            if (used[j] || !coordwise_close(c, prev[j], kCentroidTol)) continue;
            used[j] = true;
            found = true;
            break;
        }
        if (!found) return false;
    }
    return true;
}

// Step 8: each node's centroid-nearest member (ties to the lowest pattern
// index) moves to the front, in node order; everyone else keeps their
// relative order.
std::vector<std::size_t> reshuffle(const Dataset& ds, const std::vector<std::size_t>& order,
                                   const std::vector<OutputNode>& nodes,
                                   const std::vector<std::vector<double>>& centroids) {
    std::vector<std::size_t> front;
    front.reserve(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        std::size_t best = nodes[j].members.front();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t idx : nodes[j].members) {
            const double dist = squared_distance(ds.pattern(idx).features, centroids[j]);
            if (dist < best_dist || (dist == best_dist && idx < best)) {
                best = idx;
                best_dist = dist;
            }
        }
        front.push_back(best);
    }

    std::vector<bool> moved(ds.size(), false);
    for (std::size_t idx : front) moved[idx] = true;
    std::vector<std::size_t> next = front;
    next.reserve(order.size());
    for (std::size_t idx : order)
        if (!moved[idx]) next.push_back(idx);
    return next;
}

}  // namespace

std::vector<std::vector<double>> KflannModel::centroids(const Dataset& ds) const {
    return compute_centroids(ds, nodes);
}

double match_score(const OutputNode& node, const Pattern& pattern,
                   const ToleranceVector& delta) {
    const std::size_t n = pattern.features.size();
    if (node.weights.size() != n || delta.size() != n)
        throw std::invalid_argument("match_score: dimension mismatch");
    std::size_t matched = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dev = node.weights[i] - pattern.features[i];
        if (delta.delta[i] * delta.delta[i] - dev * dev >= 0.0) ++matched;
    }
    return static_cast<double>(matched) / static_cast<double>(n);
}

std::vector<std::size_t> find_matches(const std::vector<OutputNode>& nodes,
                                      const Pattern& pattern, const KflannParams& params) {
    std::vector<std::size_t> matched;
    for (std::size_t j = 0; j < nodes.size(); ++j)
        if (match_score(nodes[j], pattern, params.tolerance) >= params.vigilance)
            matched.push_back(j);
    return matched;
}

std::size_t winner(const std::vector<std::size_t>& matched, const Pattern& pattern,
                   const std::vector<OutputNode>& nodes) {
    if (matched.empty()) throw std::invalid_argument("winner: no matched nodes");
    std::size_t best = matched.front();
    double best_dist = squared_distance(nodes[best].weights, pattern.features);
    for (std::size_t k = 1; k < matched.size(); ++k) {
        const std::size_t j = matched[k];
        const double dist = squared_distance(nodes[j].weights, pattern.features);
        if (dist < best_dist || (dist == best_dist && j < best)) {
            best = j;
            best_dist = dist;
        }
    }
    return best;
}

KflannModel fit(const Dataset& ds, const KflannParams& params) {
    std::vector<std::size_t> order(ds.size());
    std::iota(order.begin(), order.end(), 0);
    return fit(ds, params, std::move(order));
}

KflannModel fit(const Dataset& ds, const KflannParams& params,
                std::vector<std::size_t> initial_order) {
    validate(ds, params);
    if (initial_order.size() != ds.size())
        throw std::invalid_argument("initial order must cover every pattern exactly once");
    std::vector<bool> seen(ds.size(), false);
    for (std::size_t idx : initial_order) {
        if (idx >= ds.size() || seen[idx])
            throw std::invalid_argument("initial order must cover every pattern exactly once");
        seen[idx] = true;
    }

    KflannModel model;
    std::vector<std::size_t> order = std::move(initial_order);

    EpochResult epoch;
    std::vector<std::vector<double>> prev_centroids;
    for (int e = 1; e <= params.max_epochs; ++e) {
        epoch = run_epoch(ds, order, params);
        std::vector<std::vector<double>> centroids = compute_centroids(ds, epoch.nodes);
        model.epochs_run = e;
        model.centroid_history.push_back(centroids);

        if (e > 1 && centroids_stable(prev_centroids, centroids)) {
            model.converged = true;
            break;
        }
        if (e == params.max_epochs) break;
        order = reshuffle(ds, order, epoch.nodes, centroids);
        prev_centroids = std::move(centroids);
    }

    model.nodes = std::move(epoch.nodes);
    model.assignments = std::move(epoch.assignments);
    model.presentation_order = std::move(order);
    return model;
}

std::string to_string(TuneDirection d) {
    switch (d) {
        case TuneDirection::none: return "none";
        case TuneDirection::down_toward_min: return "down-toward-min";
        case TuneDirection::up_toward_max: return "up-toward-max";
    }
    return "none";
}

TuningResult tune_tolerance(const Dataset& ds, const KflannParams& params,
                            int expected_clusters, int max_iters) {
    if (expected_clusters < 1) throw std::invalid_argument("expected_clusters must be >= 1");
    if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");

    const FeatureStats stats = fit_stats(ds);
    const std::vector<double>& lo = stats.min_gap;
    const std::vector<double>& hi = stats.max_gap;
    const std::size_t dims = ds.feature_count();

    KflannParams local = params;
    local.tolerance.method = ToleranceMethod::maxmin;
    local.tolerance.delta.assign(dims, 0.0);
    for (std::size_t d = 0; d < dims; ++d) local.tolerance.delta[d] = (hi[d] + lo[d]) / 2.0;
    validate(ds, local);

    std::vector<std::size_t> order(ds.size());
    std::iota(order.begin(), order.end(), 0);

    TuningResult result;
    result.delta = local.tolerance;
    TuningTrace& trace = result.trace;

    std::size_t best_gap = std::numeric_limits<std::size_t>::max();
    const auto expected = static_cast<std::size_t>(expected_clusters);
    for (int iter = 1; iter <= max_iters; ++iter) {
        // "Without step 7": a single presentation pass, no centroid check,
        // no reshuffle.
        const std::size_t count = run_epoch(ds, order, local).nodes.size();

        TuningStep step;
        step.iteration = iter;
        step.delta = local.tolerance.delta;
        step.cluster_count = count;
        if (count < expected)
            step.direction = TuneDirection::down_toward_min;
        else if (count > expected)
            step.direction = TuneDirection::up_toward_max;
        trace.steps.push_back(step);

        const std::size_t gap = count > expected ? count - expected : expected - count;
        if (gap <= best_gap) {
            best_gap = gap;
            result.delta = local.tolerance;
        }
        if (count == expected) {
            trace.reached_expected = true;
            break;
        }
        const std::vector<double>& target = count < expected ? lo : hi;
        for (std::size_t d = 0; d < dims; ++d)
            local.tolerance.delta[d] = (local.tolerance.delta[d] + target[d]) / 2.0;
    }
    return result;
}

double vigilance_from_counts(int f_match, int f_total) {
    if (f_total < 1) throw std::invalid_argument("f_total must be >= 1");
    if (f_match < 0 || f_match > f_total)
        throw std::invalid_argument("f_match must lie in [0, f_total]");
    return static_cast<double>(f_match) / static_cast<double>(f_total);
}

}  // namespace kflann
