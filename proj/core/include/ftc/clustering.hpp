#ifndef FTC_CLUSTERING_HPP
#define FTC_CLUSTERING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ftc/dataset.hpp"

namespace ftc {

/// A cluster of transactions with its item occurrence statistics:
/// item_counts[j] = |I_kj| (how many members contain item j),
/// total_occurrences = S_k, distinct_items() = M_k, size() = N_k.
struct Cluster {
    std::uint32_t id = 0;
    std::vector<TransactionId> members;                       // ascending
    std::vector<std::pair<ItemId, std::uint32_t>> item_counts;  // ascending ItemId
    std::uint64_t total_occurrences = 0;

    std::size_t size() const { return members.size(); }
    std::size_t distinct_items() const { return item_counts.size(); }
    std::uint32_t count_of(ItemId id) const;
};

/// A partition of the dense transaction-id universe [0, n_transactions).
/// Cluster ids are dense in [0, clusters.size()).
struct Clustering {
    std::vector<Cluster> clusters;
    std::size_t n_transactions = 0;
};

Cluster make_cluster(std::uint32_t id, std::vector<TransactionId> members,
                     const TransactionDataset& dataset);

Clustering singleton_clustering(const TransactionDataset& dataset);

/// Throws std::logic_error if the clustering is not a partition of the
/// universe or a cluster's cached statistics are inconsistent.
void validate_partition(const Clustering& clustering);

/// tid -> cluster id lookup table.
std::vector<std::uint32_t> assignment_of(const Clustering& clustering);

}  // namespace ftc

#endif  // FTC_CLUSTERING_HPP
