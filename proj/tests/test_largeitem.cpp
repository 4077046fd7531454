#include <doctest.h>

#include <random>

#include "ftc/largeitem.hpp"
#include "support/oracles.hpp"
#include "support/table1.hpp"

using namespace ftc;
using ftc::tests::as_sets;
using ftc::tests::sets_of;

namespace {

std::vector<std::string> token_names(const std::vector<ItemId>& items,
                                     const TransactionDataset& dataset) {
    std::vector<std::string> names;
    for (ItemId id : items) names.push_back(dataset.dictionary().item(id).value);
    std::sort(names.begin(), names.end());
    return names;
}

}  // namespace

TEST_CASE("large/small split follows the in-cluster support rule") {
    TransactionDataset dataset = from_baskets({{"A", "B"}, {"A", "C"}});
    Cluster both = make_cluster(0, {0, 1}, dataset);

    auto [large, small] = large_small_split(both, 1.0);
    CHECK(token_names(large, dataset) == std::vector<std::string>{"A"});
    CHECK(token_names(small, dataset) == std::vector<std::string>{"B", "C"});

    auto [all_large, none] = large_small_split(both, 1e-9);
    CHECK(all_large.size() == 3);
    CHECK(none.empty());

    Cluster singleton = make_cluster(0, {0}, dataset);
    for (double theta : {0.1, 0.5, 1.0}) {
        auto [l, s] = large_small_split(singleton, theta);
        CHECK(l.size() == 2);
        CHECK(s.empty());
    }
}

TEST_CASE("cost of the hand example is intra 0, inter 1") {
    TransactionDataset dataset = from_baskets({{"A", "B"}, {"A", "B"}, {"A", "C"}});
    Clustering clustering;
    clustering.n_transactions = 3;
    clustering.clusters.push_back(make_cluster(0, {0, 1}, dataset));
    clustering.clusters.push_back(make_cluster(1, {2}, dataset));

    LargeItemConfig config;
    config.theta = 1.0;
    config.w = 1.0;
    CostBreakdown breakdown = cost(clustering, config);
    CHECK(breakdown.intra == 0);
    CHECK(breakdown.inter == 1);
    CHECK(breakdown.total == 1.0);
}

TEST_CASE("single cluster has zero inter; w zero leaves only inter") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 20; ++round) {
        TransactionDataset dataset = tests::random_small_dataset(rng);
        Clustering whole;
        whole.n_transactions = dataset.size();
        std::vector<TransactionId> all(dataset.size());
        for (TransactionId tid = 0; tid < dataset.size(); ++tid) all[tid] = tid;
        whole.clusters.push_back(make_cluster(0, all, dataset));

        LargeItemConfig config;
        config.theta = 0.4;
        CHECK(cost(whole, config).inter == 0);

        config.w = 0.0;
        Clustering split = tests::random_clustering(rng, dataset);
        CostBreakdown breakdown = cost(split, config);
        CHECK(breakdown.total == static_cast<double>(breakdown.inter));
    }
}

TEST_CASE("allocation joins duplicates and separates disjoint transactions") {
    LargeItemConfig config;
    config.theta = 1.0;
    config.w = 1.0;

    TransactionDataset dup = from_baskets({{"A", "B"}, {"A", "B"}});
    CHECK(li_allocate(dup, config).clusters.size() == 1);

    TransactionDataset disjoint = from_baskets({{"A", "B"}, {"C", "D"}});
    CHECK(li_allocate(disjoint, config).clusters.size() == 2);

    TransactionDataset one = from_baskets({{"A"}});
    CHECK(li_allocate(one, config).clusters.size() == 1);
}

TEST_CASE("cost ties prefer an existing cluster over a new one") {
    // with a tiny theta every item is large everywhere, so joining and
    // founding both cost zero for disjoint singletons
    TransactionDataset dataset = from_baskets({{"a"}, {"b"}});
    LargeItemConfig config;
    config.theta = 0.01;
    config.w = 1.0;
    CHECK(li_allocate(dataset, config).clusters.size() == 1);
}

TEST_CASE("allocation picks the globally cheapest placement at every step") {
    std::mt19937_64 rng(101);
    LargeItemConfig config;
    config.theta = 1.0;
    config.w = 1.0;
    for (int round = 0; round < 40; ++round) {
        TransactionDataset dataset = tests::random_small_dataset(rng, 6, 5);
        Clustering allocated = li_allocate(dataset, config);
        validate_partition(allocated);
        // allocation is greedy: its cost cannot beat the global optimum
        CHECK(cost(allocated, config).total >= tests::brute_force_min_cost(dataset, config) - 1e-9);
    }
}

TEST_CASE("refinement repairs a deliberately misplaced transaction") {
    // two identical transactions plus a disjoint third, third one misplaced
    TransactionDataset dataset = from_baskets({{"A", "B"}, {"A", "B"}, {"C", "D"}});
    Clustering misplaced;
    misplaced.n_transactions = 3;
    misplaced.clusters.push_back(make_cluster(0, {0}, dataset));
    misplaced.clusters.push_back(make_cluster(1, {1, 2}, dataset));

    LargeItemConfig config;
    config.theta = 1.0;
    config.w = 1.0;
    LiRefineResult result = li_refine(misplaced, dataset, config);
    CHECK(result.converged);
    CHECK(as_sets(result.clustering) == sets_of({{0, 1}, {2}}));
    CHECK(cost(result.clustering, config).total ==
          doctest::Approx(tests::brute_force_min_cost(dataset, config)));
}

TEST_CASE("an already optimal clustering survives one quiet pass") {
    TransactionDataset dataset = from_baskets({{"A", "B"}, {"A", "B"}, {"C", "D"}});
    Clustering optimal;
    optimal.n_transactions = 3;
    optimal.clusters.push_back(make_cluster(0, {0, 1}, dataset));
    optimal.clusters.push_back(make_cluster(1, {2}, dataset));

    LargeItemConfig config;
    config.theta = 1.0;
    config.w = 1.0;
    LiRefineResult result = li_refine(optimal, dataset, config);
    CHECK(result.passes == 1);
    CHECK(result.converged);
    CHECK(as_sets(result.clustering) == as_sets(optimal));
}

TEST_CASE("emptied clusters disappear") {
    TransactionDataset dataset = from_baskets({{"A", "B"}, {"A", "B"}, {"A", "B"}});
    Clustering spread;
    spread.n_transactions = 3;
    spread.clusters.push_back(make_cluster(0, {0, 1}, dataset));
    spread.clusters.push_back(make_cluster(1, {2}, dataset));

    LargeItemConfig config;
    config.theta = 1.0;
    config.w = 1.0;
    LiRefineResult result = li_refine(spread, dataset, config);
    CHECK(result.clustering.clusters.size() == 1);
    validate_partition(result.clustering);
}

TEST_CASE("refinement cost trace is non-increasing and bounded by the oracle") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 60; ++round) {
        TransactionDataset dataset = tests::random_small_dataset(rng, 8, 6);
        LargeItemConfig config;
        config.theta = 0.25 + 0.25 * static_cast<double>(rng() % 4);  // 0.25..1.0
        config.w = static_cast<double>(rng() % 3);                    // 0, 1, 2

        Clustering start = tests::random_clustering(rng, dataset);
        LiRefineResult result = li_refine(start, dataset, config);
        validate_partition(result.clustering);
        CHECK(result.converged);
        CHECK(result.passes <= config.max_refine_passes);

        REQUIRE(result.cost_trace.size() == result.passes + 1);
        CHECK(result.cost_trace.front() == doctest::Approx(cost(start, config).total));
        for (std::size_t i = 1; i < result.cost_trace.size(); ++i) {
            CHECK(result.cost_trace[i] <= result.cost_trace[i - 1] + 1e-9);
        }
        // the incrementally maintained final cost matches full recomputation
        CHECK(result.cost_trace.back() ==
              doctest::Approx(cost(result.clustering, config).total));

        const double global_min = tests::brute_force_min_cost(dataset, config);
        CHECK(result.cost_trace.back() >= global_min - 1e-9);
        CHECK(result.cost_trace.back() <= result.cost_trace.front() + 1e-9);
    }
}

TEST_CASE("allocate then refine is deterministic") {
    std::mt19937_64 rng(99);
    TransactionDataset dataset = tests::random_small_dataset(rng, 8, 6);
    LargeItemConfig config;
    config.theta = 0.5;
    config.w = 1.0;
    Clustering a = li_refine(li_allocate(dataset, config), dataset, config).clustering;
    Clustering b = li_refine(li_allocate(dataset, config), dataset, config).clustering;
    CHECK(as_sets(a) == as_sets(b));
}

TEST_CASE("config validation") {
    TransactionDataset dataset = from_baskets({{"A"}});
    LargeItemConfig bad;
    bad.theta = 0.0;
    CHECK_THROWS_AS(li_allocate(dataset, bad), std::invalid_argument);
    bad.theta = 1.0;
    bad.w = -1.0;
    CHECK_THROWS_AS(li_allocate(dataset, bad), std::invalid_argument);
}
