#include "ftc/report.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

namespace ftc {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json metrics_json(const MetricsReport& metrics) {
    ordered_json j;
    if (metrics.purity) j["purity"] = *metrics.purity;
    j["cluster_count"] = metrics.cluster_count;
    if (metrics.rmsstd) j["rmsstd"] = *metrics.rmsstd;
    if (!metrics.majority_table.empty()) {
        ordered_json rows = ordered_json::array();
        for (const MajorityRow& row : metrics.majority_table) {
            rows.push_back({{"cluster_id", row.cluster_id},
                            {"label", row.label},
                            {"majority_count", row.majority_count},
                            {"size", row.size}});
        }
        j["majority_table"] = std::move(rows);
    }
    return j;
}

ordered_json alpha_json(const AlphaReport& report) {
    ordered_json rows = ordered_json::array();
    for (const AlphaRow& row : report.rows) {
        rows.push_back({{"alpha", row.alpha}, {"purity", row.purity}, {"clusters", row.clusters}});
    }
    ordered_json j;
    j["rows"] = std::move(rows);
    j["chosen_alpha"] = report.chosen_alpha;
    j["selection_rule"] =
        report.rule == SelectionRule::exact_pure ? "exact-pure" : "best-purity-fallback";
    return j;
}

}  // namespace

std::vector<ClusterSummary> summarize_clusters(const Clustering& clustering,
                                               const ItemDictionary& dictionary) {
    std::vector<ClusterSummary> summaries;
    summaries.reserve(clustering.clusters.size());
    for (const Cluster& c : clustering.clusters) {
        ClusterSummary s;
        s.id = c.id;
        s.size = c.size();
        auto counts = c.item_counts;
        std::sort(counts.begin(), counts.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        const std::size_t top = std::min<std::size_t>(5, counts.size());
        for (std::size_t i = 0; i < top; ++i) {
            const Item& item = dictionary.item(counts[i].first);
            s.top_items.push_back(
                {item.attribute, item.value,
                 static_cast<double>(counts[i].second) /
                     static_cast<double>(c.total_occurrences)});
        }
        summaries.push_back(std::move(s));
    }
    return summaries;
}

std::string report_to_json(const RunReport& report, bool include_members) {
    ordered_json j;
    j["algorithm"] = report.algorithm;

    ordered_json params;
    params["theta"] = report.theta;
    if (report.alpha) params["alpha"] = *report.alpha;
    if (report.weight) params["weight"] = *report.weight;
    j["parameters"] = std::move(params);

    j["clusters_before_merge"] = report.clusters_before_merge;
    j["refine_passes"] = report.refine_passes;
    if (report.tree_max_depth > 0) {
        j["tree"] = {{"max_depth", report.tree_max_depth}, {"cut_depth", report.tree_cut_depth}};
    }

    ordered_json clusters = ordered_json::array();
    for (const ClusterSummary& s : report.cluster_summaries) {
        ordered_json c;
        c["id"] = s.id;
        c["size"] = s.size;
        ordered_json top = ordered_json::array();
        for (const TopItem& item : s.top_items) {
            top.push_back({{"attribute", item.attribute},
                           {"value", item.value},
                           {"weight", item.weight}});
        }
        c["top_items"] = std::move(top);
        if (include_members) {
            const Cluster& full = report.clustering.clusters.at(s.id);
            c["members"] = full.members;
        }
        clusters.push_back(std::move(c));
    }
    j["clusters"] = std::move(clusters);

    j["metrics"] = metrics_json(report.metrics);

    ordered_json timings;
    timings["first_scan_ms"] = report.timings.first_scan_ms;
    timings["build_ms"] = report.timings.build_ms;
    timings["extract_ms"] = report.timings.extract_ms;
    timings["refine_ms"] = report.timings.refine_ms;
    timings["total_ms"] = report.timings.total_ms();
    j["timings_ms"] = std::move(timings);

    if (report.alpha_report) {
        j["alpha_report"] = alpha_json(*report.alpha_report);
    }
    return j.dump(2) + "\n";
}

void write_assignments_csv(const Clustering& clustering, std::ostream& out) {
    out << "transaction_id,cluster_id\n";
    const std::vector<std::uint32_t> assignment = assignment_of(clustering);
    for (std::size_t tid = 0; tid < assignment.size(); ++tid) {
        out << tid << "," << assignment[tid] << "\n";
    }
}

void write_alpha_csv(const AlphaReport& report, std::ostream& out) {
    out << "alpha,purity,clusters\n";
    ordered_json num;  // reuse the JSON shortest-round-trip double printer
    for (const AlphaRow& row : report.rows) {
        num = row.alpha;
        out << num.dump() << ",";
        num = row.purity;
        out << num.dump() << "," << row.clusters << "\n";
    }
}

}  // namespace ftc
