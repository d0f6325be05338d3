#include "kflann/tolerance.hpp"

#include <cmath>
#include <stdexcept>

namespace kflann {

std::string to_string(ToleranceMethod m) {
    switch (m) {
        case ToleranceMethod::stddev: return "stddev";
        case ToleranceMethod::maxmin: return "maxmin";
        case ToleranceMethod::manual: return "manual";
    }
    return "manual";
}

ToleranceMethod tolerance_method_from_string(const std::string& s) {
    if (s == "stddev") return ToleranceMethod::stddev;
    if (s == "maxmin") return ToleranceMethod::maxmin;
    if (s == "manual") return ToleranceMethod::manual;
    throw std::invalid_argument("unknown tolerance method '" + s + "'");
}

ToleranceVector tolerance_stddev(const FeatureStats& stats) {
    return {stats.stddev, ToleranceMethod::stddev};
}

ToleranceVector tolerance_maxmin(const FeatureStats& stats) {
    ToleranceVector t;
    t.method = ToleranceMethod::maxmin;
    t.delta.reserve(stats.feature_count());
    for (std::size_t d = 0; d < stats.feature_count(); ++d)
        t.delta.push_back((stats.max_gap[d] + stats.min_gap[d]) / 2.0);
    return t;
}

ToleranceVector tolerance_manual(std::vector<double> values) {
    for (std::size_t d = 0; d < values.size(); ++d)
        if (!std::isfinite(values[d]) || values[d] < 0.0)
            throw std::invalid_argument("tolerance entry " + std::to_string(d) +
                                        " must be finite and >= 0");
    return {std::move(values), ToleranceMethod::manual};
}

}  // namespace kflann
