#include "ftc/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ftc/ftree.hpp"
#include "ftc/merge.hpp"
#include "ftc/metrics.hpp"
#include "ftc/pipeline.hpp"

namespace ftc {

namespace {

double snap(double alpha) { return std::round(alpha * 1e9) / 1e9; }

// {1.0, 1.0 - step, ...} down to and including 0.0
std::vector<double> sweep_grid(double step) {
    if (!(step > 0.0) || step > 1.0) {
        throw std::invalid_argument("estimator step must be in (0, 1]");
    }
    std::vector<double> grid;
    for (double alpha = 1.0; alpha > 1e-9; alpha = snap(alpha - step)) {
        grid.push_back(snap(alpha));
    }
    grid.push_back(0.0);
    return grid;
}

void check_labels(const TransactionDataset& dataset) {
    if (!dataset.has_labels()) {
        throw std::invalid_argument("estimator requires a labeled dataset");
    }
}

}  // namespace

TransactionDataset stratified_sample(const TransactionDataset& dataset, double fraction,
                                     std::uint64_t seed) {
    if (!(fraction > 0.0) || fraction > 1.0) {
        throw std::invalid_argument("sample fraction must be in (0, 1]");
    }
    if (fraction == 1.0) return dataset;
    check_labels(dataset);

    std::vector<std::vector<TransactionId>> by_label(dataset.label_domain().size());
    for (const Transaction& t : dataset.transactions()) {
        by_label[*t.label].push_back(t.id);
    }

    std::mt19937_64 rng(seed);
    std::vector<TransactionId> chosen;
    for (auto& group : by_label) {
        if (group.empty()) continue;
        const auto take = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::llround(fraction * static_cast<double>(group.size()))));
        // partial Fisher-Yates; the modulo draw keeps the sequence portable
        for (std::size_t i = 0; i < take && i < group.size(); ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng() % (group.size() - i));
            std::swap(group[i], group[j]);
            chosen.push_back(group[i]);
        }
    }
    std::sort(chosen.begin(), chosen.end());

    TransactionDataset sample;
    for (TransactionId tid : chosen) {
        const Transaction& t = dataset.transaction(tid);
        std::vector<ItemId> items;
        items.reserve(t.items.size());
        for (ItemId item : t.items) {
            const Item& def = dataset.dictionary().item(item);
            items.push_back(sample.dictionary().intern(def.attribute, def.value));
        }
        sample.add_transaction(std::move(items),
                               sample.intern_label(dataset.label_name(*t.label)));
    }
    return sample;
}

AlphaReport estimate_alpha(const TransactionDataset& dataset, const EstimatorConfig& config) {
    check_labels(dataset);
    std::optional<TransactionDataset> sampled;
    if (config.sample_fraction < 1.0) {
        sampled = stratified_sample(dataset, config.sample_fraction, config.seed);
    }
    const TransactionDataset& working = sampled ? *sampled : dataset;

    const std::vector<double> grid = sweep_grid(config.step);
    const Clustering initial = allocate(working, config.theta).clustering;

    std::vector<AlphaRow> rows(grid.size());
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), grid.size());
    auto run_one = [&](std::size_t g) {
        RefineResult refined = refine(initial, grid[g]);
        rows[g] = AlphaRow{grid[g], purity(refined.clustering, working),
                           refined.clustering.clusters.size()};
    };
    if (workers < 2) {
        for (std::size_t g = 0; g < grid.size(); ++g) run_one(g);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t g = w; g < grid.size(); g += workers) run_one(g);
            });
        }
        for (auto& t : pool) t.join();
    }

    AlphaReport report;
    report.rows = std::move(rows);

    // minimum alpha reaching exactly 100% purity; grid is descending
    const AlphaRow* chosen = nullptr;
    for (const AlphaRow& row : report.rows) {
        if (row.purity == 1.0) chosen = &row;
    }
    if (chosen) {
        report.rule = SelectionRule::exact_pure;
    } else {
        report.rule = SelectionRule::best_purity_fallback;
        for (const AlphaRow& row : report.rows) {
            if (!chosen || row.purity > chosen->purity) chosen = &row;  // ties: larger alpha
        }
    }
    report.chosen_alpha = chosen->alpha;
    return report;
}

RunReport run_fcso(const TransactionDataset& dataset, const EstimatorConfig& config) {
    AlphaReport alpha_report = estimate_alpha(dataset, config);
    FTreeConfig ft;
    ft.theta = config.theta;
    ft.alpha = alpha_report.chosen_alpha;
    RunReport report = run_ftree(dataset, ft);
    report.algorithm = "fcso";
    report.alpha_report = std::move(alpha_report);
    return report;
}

}  // namespace ftc
