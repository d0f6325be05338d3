#include "kflann/eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace kflann {

EvalReport error_rate(const KflannModel& model, const Dataset& ds) {
    if (!ds.labeled()) throw std::invalid_argument("error_rate requires a labeled dataset");
    if (model.assignments.size() != ds.size())
        throw std::invalid_argument("model assignments do not cover the dataset");

    EvalReport report;
    report.cluster_count = model.cluster_count();
    report.total = ds.size();

    // Class columns in first-appearance order keeps reports deterministic.
    std::vector<std::string> labels;
    auto class_of = [&labels](const std::string& label) {
        for (std::size_t c = 0; c < labels.size(); ++c)
            if (labels[c] == label) return c;
        labels.push_back(label);
        return labels.size() - 1;
    };
    for (const Pattern& p : ds.patterns()) class_of(*p.label);

    report.confusion.assign(model.nodes.size(), std::vector<std::size_t>(labels.size(), 0));
    for (std::size_t i = 0; i < ds.size(); ++i)
        ++report.confusion[model.assignments[i]][class_of(*ds.pattern(i).label)];

    report.mapping.resize(model.nodes.size());
    for (std::size_t j = 0; j < model.nodes.size(); ++j) {
        const std::vector<std::size_t>& row = report.confusion[j];
        const std::size_t top = *std::max_element(row.begin(), row.end());
        // Majority class; a tie goes to the class of the node's
        // lowest-index member among the tied classes.
        std::vector<std::size_t> members = model.nodes[j].members;
        std::sort(members.begin(), members.end());
        for (std::size_t idx : members) {
            const std::size_t c = class_of(*ds.pattern(idx).label);
            if (row[c] == top) {
                report.mapping[j] = labels[c];
                break;
            }
        }
    }

    for (std::size_t i = 0; i < ds.size(); ++i)
        if (*ds.pattern(i).label != report.mapping[model.assignments[i]])
            ++report.misclassified;

    report.class_labels = std::move(labels);
    report.error_rate_percent =
        100.0 * static_cast<double>(report.misclassified) / static_cast<double>(report.total);
    return report;
}

SweepResult vigilance_sweep(const Dataset& ds, const ToleranceVector& delta,
                            const std::vector<double>& rho_grid, int max_epochs) {
    if (rho_grid.empty()) throw std::invalid_argument("vigilance grid is empty");
    for (std::size_t i = 0; i < rho_grid.size(); ++i) {
        if (!(rho_grid[i] >= 0.0 && rho_grid[i] <= 1.0))
            throw std::invalid_argument("vigilance grid values must lie in [0,1]");
        if (i > 0 && !(rho_grid[i] > rho_grid[i - 1]))
            throw std::invalid_argument("vigilance grid must be strictly increasing");
    }

    SweepResult result;
    result.points.reserve(rho_grid.size());
    for (double rho : rho_grid) {
        KflannParams params{rho, delta, max_epochs};
        const KflannModel model = fit(ds, params);
        SweepPoint point;
        point.vigilance = rho;
        point.cluster_count = model.cluster_count();
        if (ds.labeled()) point.error_rate_percent = error_rate(model, ds).error_rate_percent;
        result.points.push_back(std::move(point));
    }
    return result;
}

}  // namespace kflann
