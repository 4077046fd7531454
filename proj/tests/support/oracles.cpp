#include "support/oracles.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

namespace ftc::tests {

double reference_similarity(const ftc::Cluster& a, const ftc::Cluster& b) {
    std::unordered_map<ftc::ItemId, double> wa;
    for (const auto& [item, count] : a.item_counts) {
        wa[item] = static_cast<double>(count) / static_cast<double>(a.total_occurrences);
    }
    std::unordered_map<ftc::ItemId, double> wb;
    for (const auto& [item, count] : b.item_counts) {
        wb[item] = static_cast<double>(count) / static_cast<double>(b.total_occurrences);
    }
    double mass_a = 0;
    double mass_b = 0;
    for (const auto& [item, weight] : wa) {
        auto it = wb.find(item);
        if (it != wb.end()) {
            mass_a += weight;
            mass_b += it->second;
        }
    }
    return mass_a * mass_b;
}

void for_each_partition(std::size_t n,
                        const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    std::vector<std::uint32_t> rgs(n, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t max) {
        if (i == n) {
            visit(rgs);
            return;
        }
        for (std::uint32_t block = 0; block <= max + 1; ++block) {
            rgs[i] = block;
            rec(i + 1, std::max(max, block));
        }
    };
    if (n == 0) return;
    rgs[0] = 0;
    rec(1, 0);
}

ftc::Clustering clustering_from_assignment(const std::vector<std::uint32_t>& assignment,
                                           const ftc::TransactionDataset& dataset) {
    const std::uint32_t blocks =
        assignment.empty() ? 0 : *std::max_element(assignment.begin(), assignment.end()) + 1;
    std::vector<std::vector<ftc::TransactionId>> members(blocks);
    for (std::uint32_t tid = 0; tid < assignment.size(); ++tid) {
        members[assignment[tid]].push_back(tid);
    }
    ftc::Clustering clustering;
    clustering.n_transactions = dataset.size();
    for (auto& group : members) {
        clustering.clusters.push_back(ftc::make_cluster(
            static_cast<std::uint32_t>(clustering.clusters.size()), std::move(group), dataset));
    }
    return clustering;
}

double brute_force_min_cost(const ftc::TransactionDataset& dataset,
                            const ftc::LargeItemConfig& config) {
    double best = std::numeric_limits<double>::infinity();
    for_each_partition(dataset.size(), [&](const std::vector<std::uint32_t>& assignment) {
        const double total = ftc::cost(clustering_from_assignment(assignment, dataset), config).total;
        best = std::min(best, total);
    });
    return best;
}

ftc::TransactionDataset random_small_dataset(std::mt19937_64& rng, std::size_t max_transactions,
                                             std::size_t max_items) {
    const std::size_t n = 1 + rng() % max_transactions;
    std::vector<std::vector<std::string>> baskets(n);
    for (auto& basket : baskets) {
        for (std::size_t item = 0; item < max_items; ++item) {
            if (rng() % 2 == 0) {
                basket.push_back(std::string(1, static_cast<char>('a' + item)));
            }
        }
        if (basket.empty()) {
            basket.push_back(std::string(1, static_cast<char>('a' + rng() % max_items)));
        }
    }
    return ftc::from_baskets(baskets);
}

ftc::TransactionDataset random_labeled_dataset(std::mt19937_64& rng, std::size_t max_transactions,
                                               std::size_t max_items) {
    const std::size_t n = 1 + rng() % max_transactions;
    std::vector<std::vector<std::string>> baskets(n);
    std::vector<std::string> labels(n);
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t item = 0; item < max_items; ++item) {
            if (rng() % 2 == 0) {
                baskets[t].push_back(std::string(1, static_cast<char>('a' + item)));
            }
        }
        if (baskets[t].empty()) {
            baskets[t].push_back(std::string(1, static_cast<char>('a' + rng() % max_items)));
        }
        labels[t] = rng() % 2 == 0 ? "x" : "y";
    }
    return ftc::from_baskets(baskets, labels);
}

ftc::Clustering random_clustering(std::mt19937_64& rng, const ftc::TransactionDataset& dataset) {
    std::vector<std::uint32_t> assignment(dataset.size());
    std::uint32_t max_block = 0;
    for (std::size_t tid = 0; tid < dataset.size(); ++tid) {
        assignment[tid] = static_cast<std::uint32_t>(rng() % (max_block + 2));
        max_block = std::max(max_block, assignment[tid]);
    }
    // densify block ids
    std::vector<std::int32_t> remap(max_block + 2, -1);
    std::uint32_t next = 0;
    for (auto& block : assignment) {
        if (remap[block] < 0) remap[block] = static_cast<std::int32_t>(next++);
        block = static_cast<std::uint32_t>(remap[block]);
    }
    return clustering_from_assignment(assignment, dataset);
}

}  // namespace ftc::tests
