#ifndef FTC_METRICS_HPP
#define FTC_METRICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ftc/clustering.hpp"

namespace ftc {

struct MajorityRow {
    std::uint32_t cluster_id = 0;
    LabelId label = 0;  // the majority label
    std::size_t majority_count = 0;
    std::size_t size = 0;
};

struct MetricsReport {
    std::optional<double> purity;  // absent when the dataset is unlabeled
    std::size_t cluster_count = 0;
    std::optional<double> rmsstd;  // absent without a rectangular attribute table
    std::vector<MajorityRow> majority_table;
};

/// Majority-label mass: sum over clusters of the most frequent label count,
/// divided by the transaction count. Throws if any member lacks a label.
double purity(const Clustering& clustering, const TransactionDataset& dataset);

/// Per-transaction categorical rows, as integer codes assigned per attribute
/// by first appearance in the dataset.
struct AttributeTable {
    std::vector<std::uint32_t> attributes;            // source column ids, ascending
    std::vector<std::vector<std::uint32_t>> rows;     // rows[tid][a] = value code
};

/// Derivable only when every transaction carries exactly one value per
/// attribute over a common attribute set; returns nullopt otherwise.
std::optional<AttributeTable> build_attribute_table(const TransactionDataset& dataset);

/// Pooled within-cluster standard deviation over all attributes:
/// sqrt( sum_ij sum_k (x_k - mean_ij)^2 / sum_ij (n_ij - 1) ), 0 when the
/// denominator vanishes (all clusters singleton).
double rmsstd(const Clustering& clustering, const AttributeTable& table);

MetricsReport summarize(const Clustering& clustering, const TransactionDataset& dataset);

}  // namespace ftc

#endif  // FTC_METRICS_HPP
