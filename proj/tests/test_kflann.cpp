#include <doctest.h>

#include "kflann/kflann.hpp"
#include "test_support.hpp"

using namespace kflann;

namespace {

ToleranceVector manual(std::vector<double> d) { return tolerance_manual(std::move(d)); }

Pattern pat(std::vector<double> f) { return Pattern{std::move(f), std::nullopt}; }

}  // namespace

TEST_CASE("match_score counts per-feature step matches") {
    OutputNode node{{0.0, 0.0}, {}};
    CHECK(match_score(node, pat({0.5, 2.0}), manual({1, 1})) == doctest::Approx(0.5));
    CHECK(match_score(node, pat({0.0, 0.0}), manual({0, 0})) == 1.0);  // zero deviation
    CHECK(match_score(node, pat({1.0, 1.0}), manual({0, 0})) == 0.0);  // zero tolerance
    CHECK(match_score(node, pat({1.0, 1.0}), manual({1, 1})) == 1.0);  // boundary matches
    CHECK_THROWS_AS(match_score(node, pat({1.0}), manual({1, 1})), std::invalid_argument);
}

TEST_CASE("find_matches applies the non-strict vigilance threshold") {
    std::vector<OutputNode> nodes{{{0.0, 0.0}, {}}, {{10.0, 10.0}, {}}};
    Pattern p = pat({0.2, 0.2});
    KflannParams rho0{0.0, manual({1, 1}), 100};
    CHECK(find_matches(nodes, p, rho0).size() == 2);  // everything matches at rho=0

    KflannParams rho1{1.0, manual({1, 1}), 100};
    CHECK(find_matches(nodes, p, rho1) == std::vector<std::size_t>{0});

    // 12 features, 4 of them within tolerance: admitted at rho = 4/12.
    OutputNode wide{std::vector<double>(12, 0.0), {}};
    std::vector<double> x(12, 5.0);
    x[0] = x[1] = x[2] = x[3] = 0.5;
    KflannParams third{4.0 / 12.0, manual(std::vector<double>(12, 1.0)), 100};
    CHECK(find_matches({wide}, pat(x), third) == std::vector<std::size_t>{0});
    KflannParams stricter{5.0 / 12.0, manual(std::vector<double>(12, 1.0)), 100};
    CHECK(find_matches({wide}, pat(x), stricter).empty());
}

TEST_CASE("winner picks the closest matched node, ties to the lowest index") {
    std::vector<OutputNode> nodes{{{0.0, 0.0}, {}}, {{1.0, 1.0}, {}}};
    CHECK(winner({0, 1}, pat({0.1, 0.1}), nodes) == 0);  // 0.02 < 1.62
    CHECK(winner({0, 1}, pat({0.5, 0.5}), nodes) == 0);  // equidistant
    CHECK(winner({1}, pat({0.0, 0.0}), nodes) == 1);     // single candidate
    CHECK_THROWS_AS(winner({}, pat({0.0, 0.0}), nodes), std::invalid_argument);
}

TEST_CASE("fit separates two distant points into singleton clusters") {
    Dataset ds = test::make_dataset({{0.0}, {10.0}});
    KflannParams params{1.0, manual({2.0}), 100};  // delta below half the gap
    KflannModel m = fit(ds, params);
    CHECK(m.cluster_count() == 2);
    CHECK(m.converged);
    CHECK(m.epochs_run == 2);
    CHECK(m.nodes[0].members == std::vector<std::size_t>{0});
    CHECK(m.nodes[1].members == std::vector<std::size_t>{1});
}

TEST_CASE("fit at rho=0 collapses everything into one cluster") {
    std::mt19937_64 rng(3);
    Dataset ds = test::random_dataset(rng, 40, 3);
    KflannParams params{0.0, manual({0.1, 0.1, 0.1}), 100};
    KflannModel m = fit(ds, params);
    CHECK(m.cluster_count() == 1);
    CHECK(m.converged);
}

TEST_CASE("fit stops unconverged at max_epochs instead of erroring") {
    std::mt19937_64 rng(4);
    Dataset ds = test::random_dataset(rng, 30, 2);
    KflannParams params{1.0, manual({0.75, 0.75}), 1};
    KflannModel m = fit(ds, params);
    CHECK(m.epochs_run == 1);
    CHECK_FALSE(m.converged);
}

TEST_CASE("fit validates parameters") {
    Dataset ds = test::make_dataset({{0.0}, {1.0}});
    CHECK_THROWS_AS(fit(ds, {1.5, manual({1.0}), 100}), std::invalid_argument);
    CHECK_THROWS_AS(fit(ds, {0.5, manual({1.0, 2.0}), 100}), std::invalid_argument);
    CHECK_THROWS_AS(fit(ds, {0.5, manual({1.0}), 0}), std::invalid_argument);
    CHECK_THROWS_AS(fit(ds, {0.5, manual({1.0}), 100}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(fit(ds, {0.5, manual({1.0}), 100}, {1}), std::invalid_argument);
}

TEST_CASE("founding nodes copy their exemplar bit-exactly") {
    std::mt19937_64 rng(5);
    Dataset ds = test::random_dataset(rng, 25, 3);
    KflannParams params{1.0, manual({0.5, 0.5, 0.5}), 100};
    KflannModel m = fit(ds, params);
    for (const OutputNode& node : m.nodes) {
        REQUIRE_FALSE(node.members.empty());
        CHECK(node.weights == ds.pattern(node.members.front()).features);
    }
}

TEST_CASE("tune_tolerance returns immediately when the midpoint already fits") {
    // Two tight blobs far apart: the gap midpoint gives 2 clusters at once.
    Dataset ds = test::make_dataset({{0.0}, {0.5}, {100.0}, {100.5}});
    KflannParams params{1.0, manual({1.0}), 100};
    TuningResult r = tune_tolerance(ds, params, 2, 50);
    CHECK(r.trace.reached_expected);
    CHECK(r.trace.steps.size() == 1);
    CHECK(r.trace.steps[0].cluster_count == 2);
    CHECK(r.trace.steps[0].direction == TuneDirection::none);
    CHECK(r.delta.delta[0] == doctest::Approx((100.5 + 0.5) / 2.0));  // Eq. 8 midpoint
}

TEST_CASE("tune_tolerance shrinks toward min_gap when clusters are too few") {
    Dataset ds = test::make_dataset({{0.0}, {1.0}, {2.0}, {10.0}, {11.0}, {12.0}});
    KflannParams params{1.0, manual({1.0}), 100};
    TuningResult r = tune_tolerance(ds, params, 4, 50);
    CHECK(r.trace.steps.front().direction == TuneDirection::down_toward_min);
}

TEST_CASE("tune_tolerance grows toward max_gap when clusters are too many") {
    // Midpoint delta 6.5 splits off the point at 10; one growth step to
    // 8.25 covers it.
    Dataset ds = test::make_dataset({{3.0}, {0.0}, {10.0}});
    KflannParams params{1.0, manual({1.0}), 100};
    TuningResult r = tune_tolerance(ds, params, 1, 50);
    CHECK(r.trace.steps.front().direction == TuneDirection::up_toward_max);
    CHECK(r.trace.reached_expected);
    CHECK(r.trace.steps.size() == 2);
    CHECK(r.trace.steps.back().cluster_count == 1);
}

TEST_CASE("tune_tolerance reports failure through the trace and keeps the best delta") {
    // Identical points can never split: expecting 3 clusters must fail.
    Dataset ds = test::make_dataset({{0.0}, {0.0}, {0.0}});
    KflannParams params{1.0, manual({1.0}), 100};
    TuningResult r = tune_tolerance(ds, params, 3, 5);
    CHECK_FALSE(r.trace.reached_expected);
    CHECK(r.trace.steps.size() == 5);
    CHECK(r.delta.delta[0] == 0.0);  // constant feature: gaps are all zero
}

TEST_CASE("vigilance_from_counts") {
    CHECK(vigilance_from_counts(18, 34) == doctest::Approx(0.5294).epsilon(1e-4));
    CHECK(vigilance_from_counts(5, 8) == doctest::Approx(0.6250));
    CHECK(vigilance_from_counts(0, 7) == 0.0);
    CHECK_THROWS_AS(vigilance_from_counts(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(vigilance_from_counts(-1, 4), std::invalid_argument);
    CHECK_THROWS_AS(vigilance_from_counts(0, 0), std::invalid_argument);
}
