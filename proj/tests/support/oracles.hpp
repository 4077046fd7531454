#ifndef FTC_TESTS_ORACLES_HPP
#define FTC_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ftc/clustering.hpp"
#include "ftc/dataset.hpp"
#include "ftc/largeitem.hpp"

namespace ftc::tests {

/// Overlap probability evaluated the direct way (per-item weight maps, then
/// the two intersection mass sums): an independent route checked against
/// the merge-walk implementation.
double reference_similarity(const ftc::Cluster& a, const ftc::Cluster& b);

/// Calls `visit` with every set partition of {0..n-1} (restricted growth
/// strings); Bell(8) = 4140, so n <= 8 stays cheap.
void for_each_partition(std::size_t n,
                        const std::function<void(const std::vector<std::uint32_t>&)>& visit);

ftc::Clustering clustering_from_assignment(const std::vector<std::uint32_t>& assignment,
                                           const ftc::TransactionDataset& dataset);

/// Global cost minimum over all partitions of the dataset's transactions.
double brute_force_min_cost(const ftc::TransactionDataset& dataset,
                            const ftc::LargeItemConfig& config);

/// Random dataset of 1..max_transactions non-empty baskets over an alphabet
/// of max_items single-letter tokens.
ftc::TransactionDataset random_small_dataset(std::mt19937_64& rng,
                                             std::size_t max_transactions = 8,
                                             std::size_t max_items = 6);

/// Random labeled dataset (labels "x"/"y") for purity properties.
ftc::TransactionDataset random_labeled_dataset(std::mt19937_64& rng,
                                               std::size_t max_transactions = 10,
                                               std::size_t max_items = 6);

/// Random partition of the dataset's transactions.
ftc::Clustering random_clustering(std::mt19937_64& rng, const ftc::TransactionDataset& dataset);

}  // namespace ftc::tests

#endif  // FTC_TESTS_ORACLES_HPP
