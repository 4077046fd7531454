#ifndef FTC_MERGE_HPP
#define FTC_MERGE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ftc/clustering.hpp"

namespace ftc {

/// The item's share of the cluster's occurrence mass,
/// item_counts[item] / S_k (0 if absent). Weights sum to 1 per cluster.
double item_weight(const Cluster& cluster, ItemId item);

/// Overlap probability: with X the items present in both clusters,
/// (sum of X-weights in ci) * (sum of X-weights in cj). Symmetric, in [0,1],
/// 0 iff the item sets are disjoint, 1 when both weight masses are whole.
double cluster_similarity(const Cluster& ci, const Cluster& cj);

/// Per-cluster best neighbor, recorded only when its similarity is strictly
/// above alpha. Argmax ties resolve to the smallest cluster id.
struct SimilarityList {
    struct Entry {
        std::uint32_t neighbor = 0;
        double sim = 0;
    };
    std::vector<std::optional<Entry>> best;  // indexed by cluster id

    bool empty() const;
    std::size_t entry_count() const;
};

SimilarityList max_similarity_list(const Clustering& clustering, double alpha);

/// Partition of cluster ids into merge sets: connected components of the
/// undirected best-neighbor graph. Groups are ordered by smallest member,
/// members ascending.
struct MergeGroups {
    std::vector<std::vector<std::uint32_t>> groups;
};

MergeGroups group_similar(const SimilarityList& simlist, std::size_t n_clusters);

/// One cluster per group: members united, item counts summed, new ids dense
/// by ascending smallest constituent id.
Clustering merge_groups(const Clustering& clustering, const MergeGroups& groups);

struct RefineResult {
    Clustering clustering;
    std::size_t passes = 0;
};

/// Merges best-neighbor groups until a pass leaves the cluster count
/// unchanged. Terminates because the count strictly decreases on every
/// non-final pass.
RefineResult refine(const Clustering& clustering, double alpha);

}  // namespace ftc

#endif  // FTC_MERGE_HPP
