#ifndef FTC_REPORT_HPP
#define FTC_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ftc/clustering.hpp"
#include "ftc/metrics.hpp"

namespace ftc {

enum class SelectionRule { exact_pure, best_purity_fallback };

struct AlphaRow {
    double alpha = 0;
    double purity = 0;
    std::size_t clusters = 0;
};

/// Result of the overlap-estimator sweep (alpha from 1.0 down to 0.0).
struct AlphaReport {
    std::vector<AlphaRow> rows;
    double chosen_alpha = 0;
    SelectionRule rule = SelectionRule::exact_pure;
};

struct TopItem {
    std::uint32_t attribute = 0;
    std::string value;
    double weight = 0;
};

struct ClusterSummary {
    std::uint32_t id = 0;
    std::size_t size = 0;
    std::vector<TopItem> top_items;  // top 5 by weight
};

struct Timings {
    double first_scan_ms = 0;
    double build_ms = 0;
    double extract_ms = 0;
    double refine_ms = 0;

    double allocation_ms() const { return first_scan_ms + build_ms + extract_ms; }
    double total_ms() const { return allocation_ms() + refine_ms; }
};

/// Everything one batch run reports: parameters, cluster summaries, quality
/// metrics, and the phase timing breakdown.
struct RunReport {
    std::string algorithm;  // "ftree" | "largeitem" | "fcso"
    double theta = 0;
    std::optional<double> alpha;   // ftree / fcso
    std::optional<double> weight;  // largeitem
    std::size_t clusters_before_merge = 0;
    std::size_t refine_passes = 0;
    std::size_t tree_max_depth = 0;  // ftree / fcso
    std::size_t tree_cut_depth = 0;  // ftree / fcso
    std::vector<ClusterSummary> cluster_summaries;
    MetricsReport metrics;
    Timings timings;
    std::optional<AlphaReport> alpha_report;  // fcso only
    Clustering clustering;
};

std::vector<ClusterSummary> summarize_clusters(const Clustering& clustering,
                                               const ItemDictionary& dictionary);

/// Stable-keyed JSON document; member ids are included only on request.
std::string report_to_json(const RunReport& report, bool include_members = false);

/// CSV `transaction_id,cluster_id`, rows ascending by transaction id.
void write_assignments_csv(const Clustering& clustering, std::ostream& out);

/// CSV `alpha,purity,clusters` in sweep order.
void write_alpha_csv(const AlphaReport& report, std::ostream& out);

}  // namespace ftc

#endif  // FTC_REPORT_HPP
