#include "ftc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace ftc {

namespace {

MajorityRow majority_of(const Cluster& cluster, const TransactionDataset& dataset) {
    std::unordered_map<LabelId, std::size_t> tally;
    for (TransactionId tid : cluster.members) {
        const auto& label = dataset.transaction(tid).label;
        if (!label) {
            throw std::invalid_argument("purity: transaction " + std::to_string(tid) +
                                        " has no label");
        }
        ++tally[*label];
    }
    MajorityRow row;
    row.cluster_id = cluster.id;
    row.size = cluster.size();
    for (const auto& [label, count] : tally) {
        if (count > row.majority_count ||
            (count == row.majority_count && label < row.label)) {
            row.label = label;
            row.majority_count = count;
        }
    }
    return row;
}

}  // namespace

double purity(const Clustering& clustering, const TransactionDataset& dataset) {
    if (clustering.n_transactions == 0) {
        throw std::invalid_argument("purity: empty clustering");
    }
    std::size_t majority_total = 0;
    for (const Cluster& c : clustering.clusters) {
        majority_total += majority_of(c, dataset).majority_count;
    }
    return static_cast<double>(majority_total) / static_cast<double>(clustering.n_transactions);
}

std::optional<AttributeTable> build_attribute_table(const TransactionDataset& dataset) {
    if (dataset.size() == 0) return std::nullopt;

    // the attribute set of the first transaction must be shared by all
    std::vector<std::uint32_t> attributes;
    for (ItemId item : dataset.transaction(0).items) {
        attributes.push_back(dataset.dictionary().item(item).attribute);
    }
    std::sort(attributes.begin(), attributes.end());
    if (std::adjacent_find(attributes.begin(), attributes.end()) != attributes.end()) {
        return std::nullopt;  // duplicate attribute within a transaction
    }
    std::unordered_map<std::uint32_t, std::size_t> column_of;
    for (std::size_t i = 0; i < attributes.size(); ++i) column_of[attributes[i]] = i;

    AttributeTable table;
    table.attributes = attributes;
    table.rows.assign(dataset.size(), std::vector<std::uint32_t>(attributes.size(), 0));

    // per-attribute value codes by first appearance, via the item ids
    std::unordered_map<ItemId, std::uint32_t> code_of;
    std::vector<std::uint32_t> next_code(attributes.size(), 0);

    for (const Transaction& t : dataset.transactions()) {
        if (t.items.size() != attributes.size()) return std::nullopt;
        std::vector<bool> filled(attributes.size(), false);
        for (ItemId item : t.items) {
            auto col = column_of.find(dataset.dictionary().item(item).attribute);
            if (col == column_of.end() || filled[col->second]) return std::nullopt;
            filled[col->second] = true;
            auto [it, inserted] = code_of.try_emplace(item, next_code[col->second]);
            if (inserted) ++next_code[col->second];
            table.rows[t.id][col->second] = it->second;
        }
    }
    return table;
}

double rmsstd(const Clustering& clustering, const AttributeTable& table) {
    double numerator = 0;
    double denominator = 0;
    for (const Cluster& c : clustering.clusters) {
        for (std::size_t a = 0; a < table.attributes.size(); ++a) {
            double mean = 0;
            for (TransactionId tid : c.members) {
                if (tid >= table.rows.size()) {
                    throw std::invalid_argument("rmsstd: attribute table does not cover tid " +
                                                std::to_string(tid));
                }
                mean += static_cast<double>(table.rows[tid][a]);
            }
            mean /= static_cast<double>(c.size());
            double sq = 0;
            for (TransactionId tid : c.members) {
                const double d = static_cast<double>(table.rows[tid][a]) - mean;
                sq += d * d;
            }
            numerator += sq;
            denominator += static_cast<double>(c.size()) - 1.0;
        }
    }
    if (denominator <= 0) return 0.0;
    return std::sqrt(numerator / denominator);
}

MetricsReport summarize(const Clustering& clustering, const TransactionDataset& dataset) {
    MetricsReport report;
    report.cluster_count = clustering.clusters.size();
    if (dataset.has_labels()) {
        std::size_t majority_total = 0;
        for (const Cluster& c : clustering.clusters) {
            MajorityRow row = majority_of(c, dataset);
            majority_total += row.majority_count;
            report.majority_table.push_back(row);
        }
        report.purity = static_cast<double>(majority_total) /
                        static_cast<double>(clustering.n_transactions);
    }
    if (auto table = build_attribute_table(dataset)) {
        report.rmsstd = rmsstd(clustering, *table);
    }
    return report;
}

}  // namespace ftc
