#include "ftc/pipeline.hpp"

#include <chrono>
#include <stdexcept>

#include "ftc/merge.hpp"

namespace ftc {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

RunReport run_ftree(const TransactionDataset& dataset, const FTreeConfig& config) {
    if (config.alpha < 0.0 || config.alpha > 1.0) {
        throw std::invalid_argument("alpha must be in [0, 1]");
    }
    RunReport report;
    report.algorithm = "ftree";
    report.theta = config.theta;
    report.alpha = config.alpha;

    AllocationResult allocation = allocate(dataset, config.theta);
    report.clusters_before_merge = allocation.clustering.clusters.size();
    report.tree_max_depth = allocation.max_depth;
    report.tree_cut_depth = allocation.cut_depth;
    report.timings.first_scan_ms = allocation.first_scan_ms;
    report.timings.build_ms = allocation.build_ms;
    report.timings.extract_ms = allocation.extract_ms;

    auto t0 = std::chrono::steady_clock::now();
    RefineResult refined = refine(allocation.clustering, config.alpha);
    report.timings.refine_ms = elapsed_ms(t0);
    report.refine_passes = refined.passes;

    report.clustering = std::move(refined.clustering);
    report.metrics = summarize(report.clustering, dataset);
    report.cluster_summaries = summarize_clusters(report.clustering, dataset.dictionary());
    return report;
}

RunReport run_largeitem(const TransactionDataset& dataset, const LargeItemConfig& config) {
    RunReport report;
    report.algorithm = "largeitem";
    report.theta = config.theta;
    report.weight = config.w;

    auto t0 = std::chrono::steady_clock::now();
    Clustering allocated = li_allocate(dataset, config);
    report.timings.build_ms = elapsed_ms(t0);  // allocation time
    report.clusters_before_merge = allocated.clusters.size();

    auto t1 = std::chrono::steady_clock::now();
    LiRefineResult refined = li_refine(allocated, dataset, config);
    report.timings.refine_ms = elapsed_ms(t1);
    report.refine_passes = refined.passes;

    report.clustering = std::move(refined.clustering);
    report.metrics = summarize(report.clustering, dataset);
    report.cluster_summaries = summarize_clusters(report.clustering, dataset.dictionary());
    return report;
}

}  // namespace ftc
