#include <benchmark/benchmark.h>

#include "ftc/estimator.hpp"
#include "ftc/ftree.hpp"
#include "ftc/merge.hpp"
#include "ftc/pipeline.hpp"
#include "support/synthetic.hpp"

namespace {

// mushroom-replica prefix of the requested size, built once per process
const ftc::TransactionDataset& replica_prefix(std::size_t n) {
    static const std::vector<std::vector<std::string>> rows =
        ftc::tests::mushroom_replica_rows();
    static std::map<std::size_t, ftc::TransactionDataset> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        ftc::TransactionDataset dataset;
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<ftc::ItemId> items;
            for (std::size_t col = 1; col < rows[r].size(); ++col) {
                items.push_back(dataset.dictionary().intern(
                    static_cast<std::uint32_t>(col), rows[r][col]));
            }
            dataset.add_transaction(std::move(items), dataset.intern_label(rows[r][0]));
        }
        it = cache.emplace(n, std::move(dataset)).first;
    }
    return it->second;
}

void BM_Allocate(benchmark::State& state) {
    const auto& dataset = replica_prefix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ftc::allocate(dataset, 0.8));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Allocate)->Arg(812)->Arg(4062)->Arg(8124)->Unit(benchmark::kMillisecond);

void BM_Refine(benchmark::State& state) {
    const auto& dataset = replica_prefix(8124);
    const ftc::Clustering initial = ftc::allocate(dataset, 0.8).clustering;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ftc::refine(initial, 0.8));
    }
}
BENCHMARK(BM_Refine)->Unit(benchmark::kMillisecond);

void BM_FTreePipeline(benchmark::State& state) {
    const auto& dataset = replica_prefix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ftc::run_ftree(dataset, {0.8, 0.8}));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FTreePipeline)->Arg(812)->Arg(4062)->Arg(8124)->Unit(benchmark::kMillisecond);

void BM_LargeItemPipeline(benchmark::State& state) {
    const auto& dataset = replica_prefix(static_cast<std::size_t>(state.range(0)));
    ftc::LargeItemConfig config;
    config.theta = 0.8;
    config.w = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ftc::run_largeitem(dataset, config));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LargeItemPipeline)->Arg(812)->Arg(4062)->Unit(benchmark::kMillisecond);

void BM_EstimateAlpha(benchmark::State& state) {
    const auto& dataset = replica_prefix(8124);
    ftc::EstimatorConfig config;
    config.theta = 0.8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ftc::estimate_alpha(dataset, config));
    }
}
BENCHMARK(BM_EstimateAlpha)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
