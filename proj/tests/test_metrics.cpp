#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "ftc/merge.hpp"
#include "ftc/metrics.hpp"
#include "support/oracles.hpp"
#include "support/table1.hpp"

using namespace ftc;

namespace {

Clustering singletons(const TransactionDataset& dataset) {
    return singleton_clustering(dataset);
}

}  // namespace

TEST_CASE("purity basics") {
    TransactionDataset dataset =
        from_baskets({{"a"}, {"b"}, {"c"}, {"d"}}, {"e", "e", "p", "p"});

    CHECK(purity(singletons(dataset), dataset) == 1.0);

    Clustering one;
    one.n_transactions = 4;
    one.clusters.push_back(make_cluster(0, {0, 1, 2, 3}, dataset));
    CHECK(purity(one, dataset) == 0.5);
}

TEST_CASE("purity requires labels") {
    TransactionDataset dataset = from_baskets({{"a"}, {"b"}});
    CHECK_THROWS_AS(purity(singletons(dataset), dataset), std::invalid_argument);
}

TEST_CASE("purity bounds and the single-cluster floor") {
    std::mt19937_64 rng(61);
    for (int round = 0; round < 40; ++round) {
        TransactionDataset dataset = tests::random_labeled_dataset(rng);
        Clustering clustering = tests::random_clustering(rng, dataset);

        std::size_t max_label = 0;
        std::map<std::string, std::size_t> tally;
        for (const Transaction& t : dataset.transactions()) {
            max_label = std::max(max_label, ++tally[dataset.label_name(*t.label)]);
        }
        const double floor_value =
            static_cast<double>(max_label) / static_cast<double>(dataset.size());

        const double p = purity(clustering, dataset);
        CHECK(p >= floor_value - 1e-12);
        CHECK(p <= 1.0);

        Clustering one;
        one.n_transactions = dataset.size();
        std::vector<TransactionId> all(dataset.size());
        for (TransactionId tid = 0; tid < dataset.size(); ++tid) all[tid] = tid;
        one.clusters.push_back(make_cluster(0, all, dataset));
        CHECK(purity(one, dataset) == doctest::Approx(floor_value));
    }
}

TEST_CASE("merging two clusters never increases purity") {
    std::mt19937_64 rng(62);
    for (int round = 0; round < 40; ++round) {
        TransactionDataset dataset = tests::random_labeled_dataset(rng, 12, 6);
        Clustering clustering = tests::random_clustering(rng, dataset);
        if (clustering.clusters.size() < 2) continue;

        const double before = purity(clustering, dataset);
        const std::size_t i = rng() % clustering.clusters.size();
        std::size_t j = rng() % clustering.clusters.size();
        if (j == i) j = (j + 1) % clustering.clusters.size();

        MergeGroups groups;
        groups.groups.push_back({static_cast<std::uint32_t>(std::min(i, j)),
                                 static_cast<std::uint32_t>(std::max(i, j))});
        for (std::size_t k = 0; k < clustering.clusters.size(); ++k) {
            if (k != i && k != j) groups.groups.push_back({static_cast<std::uint32_t>(k)});
        }
        std::sort(groups.groups.begin(), groups.groups.end());
        CHECK(purity(merge_groups(clustering, groups), dataset) <= before + 1e-12);
    }
}

TEST_CASE("attribute table codes by first appearance") {
    const std::vector<std::vector<std::string>> rows = {
        {"x", "p"}, {"y", "p"}, {"x", "q"}};
    TransactionDataset dataset;
    for (const auto& row : rows) {
        std::vector<ItemId> items;
        for (std::size_t col = 0; col < row.size(); ++col) {
            items.push_back(dataset.dictionary().intern(static_cast<std::uint32_t>(col), row[col]));
        }
        dataset.add_transaction(std::move(items));
    }

    auto table = build_attribute_table(dataset);
    REQUIRE(table.has_value());
    CHECK(table->attributes == std::vector<std::uint32_t>{0, 1});
    CHECK(table->rows == std::vector<std::vector<std::uint32_t>>{{0, 0}, {1, 0}, {0, 1}});
}

TEST_CASE("attribute table is absent for ragged transactions") {
    TransactionDataset dataset = from_baskets({{"a", "b"}, {"a"}});
    CHECK_FALSE(build_attribute_table(dataset).has_value());
}

TEST_CASE("rmsstd hand values") {
    // one cluster, one attribute, codes {0, 2}: sqrt(2 / 1)
    TransactionDataset dataset;
    dataset.add_transaction({dataset.dictionary().intern(0, "a")});
    dataset.add_transaction({dataset.dictionary().intern(0, "b")});
    dataset.add_transaction({dataset.dictionary().intern(0, "a")});
    AttributeTable table;
    table.attributes = {0};
    table.rows = {{0}, {2}, {0}};  // codes chosen directly for the hand value

    Clustering one;
    one.n_transactions = 2;
    Cluster c;
    c.id = 0;
    c.members = {0, 1};
    c.item_counts = {{0, 1}, {1, 1}};
    c.total_occurrences = 2;
    one.clusters.push_back(c);
    CHECK(rmsstd(one, table) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("rmsstd is zero for attribute-constant clusters and for singletons") {
    TransactionDataset dataset =
        from_baskets({{"a", "p"}, {"a", "p"}, {"b", "q"}, {"b", "q"}});
    // baskets give every item attribute 0, so build the table by hand
    AttributeTable table;
    table.attributes = {0, 1};
    table.rows = {{0, 0}, {0, 0}, {1, 1}, {1, 1}};

    Clustering split;
    split.n_transactions = 4;
    split.clusters.push_back(make_cluster(0, {0, 1}, dataset));
    split.clusters.push_back(make_cluster(1, {2, 3}, dataset));
    CHECK(rmsstd(split, table) == 0.0);

    CHECK(rmsstd(singleton_clustering(dataset), table) == 0.0);
}

TEST_CASE("rmsstd ignores transaction id relabeling") {
    std::mt19937_64 rng(63);
    AttributeTable table;
    table.attributes = {0, 1};
    for (int i = 0; i < 8; ++i) {
        table.rows.push_back({static_cast<std::uint32_t>(rng() % 3),
                              static_cast<std::uint32_t>(rng() % 2)});
    }
    TransactionDataset dataset = from_baskets(std::vector<std::vector<std::string>>(
        8, std::vector<std::string>{"filler"}));

    Clustering a;
    a.n_transactions = 8;
    a.clusters.push_back(make_cluster(0, {0, 1, 2, 5}, dataset));
    a.clusters.push_back(make_cluster(1, {3, 4, 6, 7}, dataset));

    // permute ids and the table consistently: swap 0 <-> 7
    AttributeTable permuted = table;
    std::swap(permuted.rows[0], permuted.rows[7]);
    Clustering b;
    b.n_transactions = 8;
    b.clusters.push_back(make_cluster(0, {7, 1, 2, 5}, dataset));
    b.clusters.push_back(make_cluster(1, {3, 4, 6, 0}, dataset));

    CHECK(rmsstd(a, table) == doctest::Approx(rmsstd(b, permuted)).epsilon(1e-12));
}

TEST_CASE("splitting a heterogeneous cluster into constant parts lowers rmsstd") {
    TransactionDataset dataset = from_baskets(std::vector<std::vector<std::string>>(
        6, std::vector<std::string>{"filler"}));
    AttributeTable table;
    table.attributes = {0};
    table.rows = {{0}, {0}, {0}, {4}, {4}, {4}};

    Clustering mixed;
    mixed.n_transactions = 6;
    mixed.clusters.push_back(make_cluster(0, {0, 1, 2, 3, 4, 5}, dataset));

    Clustering split;
    split.n_transactions = 6;
    split.clusters.push_back(make_cluster(0, {0, 1, 2}, dataset));
    split.clusters.push_back(make_cluster(1, {3, 4, 5}, dataset));

    CHECK(rmsstd(split, table) < rmsstd(mixed, table));
}

TEST_CASE("summarize assembles the report") {
    TransactionDataset labeled = tests::table1_dataset();
    // table1 baskets are unlabeled and ragged: purity and rmsstd both absent
    MetricsReport plain = summarize(singleton_clustering(labeled), labeled);
    CHECK_FALSE(plain.purity.has_value());
    CHECK_FALSE(plain.rmsstd.has_value());
    CHECK(plain.cluster_count == 10);

    TransactionDataset tabular =
        from_baskets({{"a"}, {"a"}, {"b"}, {"b"}}, {"x", "x", "y", "y"});
    MetricsReport report = summarize(singleton_clustering(tabular), tabular);
    REQUIRE(report.purity.has_value());
    CHECK(*report.purity == 1.0);
    CHECK(report.cluster_count == 4);
    REQUIRE(report.rmsstd.has_value());  // single-attribute rows are rectangular
    CHECK(*report.rmsstd == 0.0);
    CHECK(report.majority_table.size() == 4);
}
