#ifndef FTC_FTREE_HPP
#define FTC_FTREE_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ftc/clustering.hpp"
#include "ftc/dataset.hpp"

namespace ftc {

struct FTreeConfig {
    double theta = 0.8;  // minimum support in (0, 1]; sets the cut depth
    double alpha = 0.8;  // overlap threshold in [0, 1]; consumed by refine()
};

/// Prefix tree over frequency-sorted transactions. Each node counts the
/// transactions passing through it and lists the ids terminating exactly
/// there. Children are kept in global item order, so traversal (and every
/// extracted partition) is independent of the input transaction order.
class FTree {
public:
    static FTree build(const TransactionDataset& dataset, const FrequencyTable& freqs);

    std::size_t max_depth() const { return max_depth_; }
    std::size_t node_count() const { return nodes_.size(); }  // includes the root
    std::size_t transaction_count() const { return n_transactions_; }

    /// One cluster per node at `depth` (whole subtree), plus one cluster per
    /// shallower node with a non-empty terminating list. The result is a
    /// partition of all transaction ids; cluster item counts are recovered
    /// from the terminating paths.
    Clustering extract_clusters(std::size_t depth) const;

    /// Indented text dump (item, count, terminating ids) for golden tests.
    void dump(std::ostream& out, const ItemDictionary& dictionary) const;

private:
    struct Node {
        ItemId item = 0;  // meaningless for the root
        std::uint32_t count = 0;
        std::int32_t parent = -1;
        std::vector<std::uint32_t> children;  // node indices, in item-rank order
        std::vector<TransactionId> terminating;
    };

    FTree() = default;

    std::vector<Node> nodes_;  // nodes_[0] is the root
    std::vector<std::uint32_t> rank_;  // ItemId -> global rank, for child ordering
    std::size_t max_depth_ = 0;
    std::size_t n_transactions_ = 0;
};

/// Pruning level: round-half-up(theta * max_depth) clamped to
/// [1, max_depth]. Larger theta cuts deeper and yields a finer partition.
std::size_t cut_depth(double theta, std::size_t max_depth);

struct AllocationResult {
    Clustering clustering;
    std::size_t max_depth = 0;
    std::size_t cut_depth = 0;
    std::size_t node_count = 0;
    double first_scan_ms = 0;
    double build_ms = 0;
    double extract_ms = 0;
};

/// The allocation phase: frequency scan, tree build, cluster extraction at
/// the theta-derived depth, with per-step timings.
AllocationResult allocate(const TransactionDataset& dataset, double theta);

}  // namespace ftc

#endif  // FTC_FTREE_HPP
