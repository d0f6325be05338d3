#include "kflann/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kflann {

std::string to_string(NormMethod m) {
    switch (m) {
        case NormMethod::none: return "none";
        case NormMethod::zscore: return "zscore";
        case NormMethod::minmax: return "minmax";
    }
    return "none";
}

NormMethod norm_method_from_string(const std::string& s) {
    if (s == "none") return NormMethod::none;
    if (s == "zscore") return NormMethod::zscore;
    if (s == "minmax") return NormMethod::minmax;
    throw std::invalid_argument("unknown normalization method '" + s + "'");
}

FeatureStats fit_stats(const Dataset& ds) {
    const std::size_t n = ds.size();
    const std::size_t dims = ds.feature_count();
    FeatureStats st;
    st.mean.assign(dims, 0.0);
    st.stddev.assign(dims, 0.0);
    st.min.assign(dims, 0.0);
    st.max.assign(dims, 0.0);
    st.min_gap.assign(dims, 0.0);
    st.max_gap.assign(dims, 0.0);

    std::vector<double> column(n);
    for (std::size_t d = 0; d < dims; ++d) {
        for (std::size_t i = 0; i < n; ++i) column[i] = ds.pattern(i).features[d];

        double sum = 0.0;
        for (double v : column) sum += v;
        const double mean = sum / static_cast<double>(n);
        double sq = 0.0;
        for (double v : column) sq += (v - mean) * (v - mean);

        st.mean[d] = mean;
        st.stddev[d] = std::sqrt(sq / static_cast<double>(n));

        std::sort(column.begin(), column.end());
        st.min[d] = column.front();
        st.max[d] = column.back();
        st.max_gap[d] = column.back() - column.front();

        // Gap between the smallest and the second-smallest distinct value;
        // duplicated minima do not zero it out.
        auto second = std::upper_bound(column.begin(), column.end(), column.front());
        st.min_gap[d] = second == column.end() ? 0.0 : *second - column.front();
    }
    return st;
}

namespace {

void require_same_dims(const Dataset& ds, const FeatureStats& stats) {
    if (stats.feature_count() != ds.feature_count())
        throw std::invalid_argument("stats fitted for " + std::to_string(stats.feature_count()) +
                                    " features, dataset has " +
                                    std::to_string(ds.feature_count()));
}

}  // namespace

Dataset zscore(const Dataset& ds, const FeatureStats& stats) {
    require_same_dims(ds, stats);
    std::vector<Pattern> out = ds.patterns();
    for (Pattern& p : out)
        for (std::size_t d = 0; d < p.features.size(); ++d)
            p.features[d] = stats.stddev[d] == 0.0
                                ? 0.0
                                : (p.features[d] - stats.mean[d]) / stats.stddev[d];
    return Dataset(ds.name(), ds.feature_count(), std::move(out), ds.expected_clusters());
}

Dataset minmax(const Dataset& ds, const FeatureStats& stats, double new_min, double new_max) {
    require_same_dims(ds, stats);
    if (!(new_min < new_max)) throw std::invalid_argument("minmax requires new_min < new_max");
    std::vector<Pattern> out = ds.patterns();
    for (Pattern& p : out)
        for (std::size_t d = 0; d < p.features.size(); ++d) {
            const double range = stats.max[d] - stats.min[d];
            p.features[d] = range == 0.0 ? new_min
                                         : (new_max - new_min) * (p.features[d] - stats.min[d]) /
                                                   range +
                                               new_min;
        }
    return Dataset(ds.name(), ds.feature_count(), std::move(out), ds.expected_clusters());
}

std::pair<Dataset, NormalizationSpec> normalize(const Dataset& ds, NormMethod method,
                                                double new_min, double new_max) {
    NormalizationSpec spec;
    spec.method = method;
    spec.new_min = new_min;
    spec.new_max = new_max;
    spec.fitted = fit_stats(ds);
    switch (method) {
        case NormMethod::none: return {ds, std::move(spec)};
        case NormMethod::zscore: return {zscore(ds, spec.fitted), std::move(spec)};
        case NormMethod::minmax: return {minmax(ds, spec.fitted, new_min, new_max), std::move(spec)};
    }
    return {ds, std::move(spec)};
}

}  // namespace kflann
