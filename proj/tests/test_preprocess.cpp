#include <doctest.h>

#include <cmath>

#include "kflann/preprocess.hpp"
#include "test_support.hpp"

using namespace kflann;

TEST_CASE("fit_stats on [1,2,3]") {
    Dataset ds = test::make_dataset({{1}, {2}, {3}});
    FeatureStats st = fit_stats(ds);
    CHECK(st.mean[0] == doctest::Approx(2.0));
    CHECK(st.stddev[0] == doctest::Approx(std::sqrt(2.0 / 3.0)));  // population form
    CHECK(st.min[0] == 1.0);
    CHECK(st.max[0] == 3.0);
    CHECK(st.min_gap[0] == 1.0);
    CHECK(st.max_gap[0] == 2.0);
}

TEST_CASE("fit_stats on a constant column") {
    Dataset ds = test::make_dataset({{5}, {5}, {5}});
    FeatureStats st = fit_stats(ds);
    CHECK(st.mean[0] == 5.0);
    CHECK(st.stddev[0] == 0.0);
    CHECK(st.min_gap[0] == 0.0);
    CHECK(st.max_gap[0] == 0.0);
}

TEST_CASE("fit_stats min_gap skips duplicated minima") {
    Dataset ds = test::make_dataset({{1}, {1}, {2}, {4}});
    FeatureStats st = fit_stats(ds);
    CHECK(st.min_gap[0] == 1.0);  // distinct values 1 and 2
    CHECK(st.max_gap[0] == 3.0);
}

TEST_CASE("zscore maps the mean to zero and [1,2,3] to known scores") {
    Dataset ds = test::make_dataset({{1}, {2}, {3}});
    Dataset z = zscore(ds, fit_stats(ds));
    CHECK(z.pattern(0).features[0] == doctest::Approx(-1.224745).epsilon(1e-6));
    CHECK(z.pattern(1).features[0] == doctest::Approx(0.0));
    CHECK(z.pattern(2).features[0] == doctest::Approx(1.224745).epsilon(1e-6));
}

TEST_CASE("zscore maps constant columns to zero") {
    Dataset ds = test::make_dataset({{5, 1}, {5, 2}});
    Dataset z = zscore(ds, fit_stats(ds));
    CHECK(z.pattern(0).features[0] == 0.0);
    CHECK(z.pattern(1).features[0] == 0.0);
}

TEST_CASE("normalization rejects mismatched stats") {
    Dataset ds = test::make_dataset({{1, 2}, {3, 4}});
    Dataset other = test::make_dataset({{1}, {2}});
    FeatureStats st = fit_stats(other);
    CHECK_THROWS_AS(zscore(ds, st), std::invalid_argument);
    CHECK_THROWS_AS(minmax(ds, st, 0, 1), std::invalid_argument);
}

TEST_CASE("minmax maps endpoints, midpoint, and [1,2,4]") {
    Dataset ds = test::make_dataset({{0}, {5}, {10}});
    Dataset m = minmax(ds, fit_stats(ds), 0.0, 1.0);
    CHECK(m.pattern(0).features[0] == 0.0);
    CHECK(m.pattern(1).features[0] == doctest::Approx(0.5));
    CHECK(m.pattern(2).features[0] == 1.0);

    Dataset ds2 = test::make_dataset({{1}, {2}, {4}});
    Dataset m2 = minmax(ds2, fit_stats(ds2), 0.0, 1.0);
    CHECK(m2.pattern(0).features[0] == doctest::Approx(0.0));
    CHECK(m2.pattern(1).features[0] == doctest::Approx(1.0 / 3.0));
    CHECK(m2.pattern(2).features[0] == doctest::Approx(1.0));
}

TEST_CASE("minmax maps constant columns to new_min and validates the range") {
    Dataset ds = test::make_dataset({{7}, {7}});
    Dataset m = minmax(ds, fit_stats(ds), 2.0, 3.0);
    CHECK(m.pattern(0).features[0] == 2.0);
    CHECK_THROWS_AS(minmax(ds, fit_stats(ds), 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("normalize keeps labels, order and expected_clusters") {
    std::vector<Pattern> pats{{{1.0, 5.0}, "A"}, {{2.0, 5.0}, "B"}, {{3.0, 5.0}, "A"}};
    Dataset ds("labeled", 2, pats, 3);
    auto [z, spec] = normalize(ds, NormMethod::zscore);
    CHECK(z.labeled());
    CHECK(*z.pattern(1).label == "B");
    CHECK(z.expected_clusters() == 3);
    CHECK(spec.fitted.mean[0] == doctest::Approx(2.0));
    auto [m, spec2] = normalize(ds, NormMethod::minmax, -1.0, 1.0);
    CHECK(m.pattern(0).features[0] == -1.0);
    CHECK(m.pattern(2).features[0] == 1.0);
    CHECK(spec2.new_max == 1.0);
}
