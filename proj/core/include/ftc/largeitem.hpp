#ifndef FTC_LARGEITEM_HPP
#define FTC_LARGEITEM_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ftc/clustering.hpp"

namespace ftc {

struct LargeItemConfig {
    double theta = 1.0;  // in-cluster support threshold, (0, 1]
    double w = 1.0;      // intra weight, >= 0
    std::size_t max_refine_passes = 50;
};

/// Cost(C) = w * Intra(C) + Inter(C): Intra counts distinct small items,
/// Inter counts large-item duplication across clusters.
struct CostBreakdown {
    std::size_t intra = 0;
    std::size_t inter = 0;
    double total = 0;
};

/// Item j is large in the cluster iff item_counts[j] >= theta * N_k.
/// Returns (large, small), both sorted by ItemId; together they cover the
/// cluster's distinct items.
std::pair<std::vector<ItemId>, std::vector<ItemId>> large_small_split(const Cluster& cluster,
                                                                      double theta);

/// Full recomputation of the cost from scratch; also the oracle the
/// incremental engine is tested against.
CostBreakdown cost(const Clustering& clustering, const LargeItemConfig& config);

/// Allocation phase: transactions are read in dataset order and placed into
/// the existing cluster (or a fresh one) minimizing the total cost. Ties
/// prefer an existing cluster over a new one, then the smallest cluster id.
Clustering li_allocate(const TransactionDataset& dataset, const LargeItemConfig& config);

struct LiRefineResult {
    Clustering clustering;
    std::size_t passes = 0;
    bool converged = false;
    /// cost after initialization, then after every pass
    std::vector<double> cost_trace;
};

/// Refinement phase: repeated passes moving each transaction to the
/// cost-minimizing cluster (staying put on ties); empty clusters are
/// eliminated immediately. Stops on a pass with no moves, or after
/// max_refine_passes (reported as not converged).
LiRefineResult li_refine(const Clustering& clustering, const TransactionDataset& dataset,
                         const LargeItemConfig& config);

}  // namespace ftc

#endif  // FTC_LARGEITEM_HPP
