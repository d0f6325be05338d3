#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "property_checks.hpp"

using namespace kflann;
using namespace kflann::test;

TEST_CASE("partition and founder invariants hold across random fits") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> drho(0.0, 1.0);
    std::uniform_real_distribution<double> ddelta(0.0, 3.0);
    for (int round = 0; round < 25; ++round) {
        Dataset ds = random_dataset(rng, 30 + round, 3);
        std::vector<double> d{ddelta(rng), ddelta(rng), ddelta(rng)};
        KflannParams params{drho(rng), tolerance_manual(d), 100};
        KflannModel m = fit(ds, params);
        CHECK_NOTHROW(check_partition(m, ds.size()));
        CHECK_NOTHROW(check_founders(m, ds, params.tolerance));
    }
}

TEST_CASE("rho=0 always yields a single cluster") {
    std::mt19937_64 rng(102);
    for (int round = 0; round < 10; ++round) {
        Dataset ds = random_dataset(rng, 20, 2);
        CHECK_NOTHROW(check_rho0_single_cluster(ds, tolerance_manual({0.2, 0.2})));
    }
}

TEST_CASE("rho=1 with zero tolerance isolates every distinct pattern") {
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::vector<std::vector<double>> rows(25, std::vector<double>(3));
    for (auto& r : rows)
        for (double& v : r) v = u(rng);  // continuous draws: distinct w.p. 1
    CHECK_NOTHROW(check_rho1_zero_delta(make_dataset(rows)));
}

TEST_CASE("winner matches brute force on 200 random instances") {
    CHECK_NOTHROW(check_winner_brute_force(104, 200));
}

TEST_CASE("tuning deltas stay within the per-feature gap interval") {
    std::mt19937_64 rng(105);
    for (int expected : {1, 2, 3, 7}) {
        Dataset ds = random_dataset(rng, 40, 3);
        CHECK_NOTHROW(check_tuning_containment(ds, expected));
    }
    CHECK_NOTHROW(check_tuning_containment(generate(preset(3, 9)), 2));
}

TEST_CASE("fits and generators are deterministic") {
    CHECK_NOTHROW(check_determinism(106));
}

TEST_CASE("convergence audit: an extra epoch is a no-op") {
    std::mt19937_64 rng(107);
    int audited = 0;
    for (int round = 0; round < 10; ++round) {
        Dataset ds = random_dataset(rng, 30, 2);
        KflannParams params{0.5, tolerance_manual({1.0, 1.0}), 100};
        if (fit(ds, params).converged) {
            CHECK_NOTHROW(check_convergence_audit(ds, params));
            ++audited;
        }
    }
    CHECK(audited > 0);
    CHECK_NOTHROW(check_convergence_audit(
        generate(preset(1, 5)),
        KflannParams{1.0, tolerance_maxmin(fit_stats(generate(preset(1, 5)))), 100}));
}

TEST_CASE("normalization postconditions hold on random data") {
    std::mt19937_64 rng(108);
    for (int round = 0; round < 10; ++round) {
        Dataset ds = random_dataset(rng, 50, 4);
        CHECK_NOTHROW(check_normalization_postconditions(ds));
    }
    // Mixed constant and non-constant columns.
    Dataset mixed = make_dataset({{1, 7, -2}, {2, 7, -2}, {3, 7, 5}});
    CHECK_NOTHROW(check_normalization_postconditions(mixed));
}

TEST_CASE("cluster counts trend upward over a vigilance sweep on separable data") {
    Dataset ds = generate(preset(1));
    ToleranceVector delta = tolerance_maxmin(fit_stats(ds));
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
    SweepResult sweep = vigilance_sweep(ds, delta, grid);
    std::vector<double> rhos, counts;
    for (const SweepPoint& p : sweep.points) {
        rhos.push_back(p.vigilance);
        counts.push_back(static_cast<double>(p.cluster_count));
    }
    CHECK(spearman(rhos, counts) >= 0.0);
}
