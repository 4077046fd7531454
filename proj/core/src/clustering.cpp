#include "ftc/clustering.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ftc {

std::uint32_t Cluster::count_of(ItemId id) const {
    auto it = std::lower_bound(item_counts.begin(), item_counts.end(), id,
                               [](const auto& entry, ItemId key) { return entry.first < key; });
    if (it == item_counts.end() || it->first != id) return 0;
    return it->second;
}

Cluster make_cluster(std::uint32_t id, std::vector<TransactionId> members,
                     const TransactionDataset& dataset) {
    std::sort(members.begin(), members.end());
    Cluster c;
    c.id = id;
    c.members = std::move(members);
    std::unordered_map<ItemId, std::uint32_t> counts;
    for (TransactionId tid : c.members) {
        for (ItemId item : dataset.transaction(tid).items) {
            ++counts[item];
        }
    }
    c.item_counts.assign(counts.begin(), counts.end());
    std::sort(c.item_counts.begin(), c.item_counts.end());
    c.total_occurrences = 0;
    for (const auto& [item, n] : c.item_counts) c.total_occurrences += n;
    return c;
}

Clustering singleton_clustering(const TransactionDataset& dataset) {
    Clustering result;
    result.n_transactions = dataset.size();
    result.clusters.reserve(dataset.size());
    for (TransactionId tid = 0; tid < dataset.size(); ++tid) {
        result.clusters.push_back(make_cluster(tid, {tid}, dataset));
    }
    return result;
}

void validate_partition(const Clustering& clustering) {
    std::vector<bool> seen(clustering.n_transactions, false);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < clustering.clusters.size(); ++i) {
        const Cluster& c = clustering.clusters[i];
        if (c.id != i) {
            throw std::logic_error("cluster ids are not dense");
        }
        if (c.members.empty()) {
            throw std::logic_error("empty cluster " + std::to_string(i));
        }
        std::uint64_t total = 0;
        for (const auto& [item, n] : c.item_counts) {
            if (n == 0) throw std::logic_error("zero item count in cluster " + std::to_string(i));
            total += n;
        }
        if (total != c.total_occurrences) {
            throw std::logic_error("stale total_occurrences in cluster " + std::to_string(i));
        }
        for (TransactionId tid : c.members) {
            if (tid >= clustering.n_transactions || seen[tid]) {
                throw std::logic_error("transaction " + std::to_string(tid) +
                                       " missing from universe or covered twice");
            }
            seen[tid] = true;
            ++covered;
        }
    }
    if (covered != clustering.n_transactions) {
        throw std::logic_error("clustering does not cover the universe");
    }
}

std::vector<std::uint32_t> assignment_of(const Clustering& clustering) {
    std::vector<std::uint32_t> assignment(clustering.n_transactions, 0);
    for (const Cluster& c : clustering.clusters) {
        for (TransactionId tid : c.members) {
            assignment.at(tid) = c.id;
        }
    }
    return assignment;
}

}  // namespace ftc
